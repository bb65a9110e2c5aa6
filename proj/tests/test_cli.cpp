#include <cstdlib>

#include "doctest.h"
#include "vpvxy/cli.hpp"

using namespace vpvxy;
using namespace vpvxy::cli;
using json = nlohmann::ordered_json;

namespace {

void check_schema(const CommandResult& r) {
  const json doc = json::parse(r.to_json().dump());
  for (const char* key : {"command", "inputs", "results", "status", "message"}) {
    CAPTURE(key);
    CHECK(doc.contains(key));
  }
  CHECK(doc["inputs"].is_object());
  CHECK(doc["results"].is_object());
  CHECK((r.exit_code() != 0) == (r.status == Status::error));
}

// Every string/number leaf of the JSON results also appears in the human rendering.
void check_leaves(const json& v, const std::string& text) {
  if (v.is_structured()) {
    for (const auto& child : v) check_leaves(child, text);
  } else {
    const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    CAPTURE(s);
    CHECK(text.find(s) != std::string::npos);
  }
}

GlobalOptions small(std::uint64_t n = 60) {
  GlobalOptions g;
  g.truncation = n;
  return g;
}

}  // namespace

TEST_CASE("euler") {
  const CommandResult r = cmd_euler(2);
  check_schema(r);
  CHECK(r.results["rows"][0]["x"] == "2");
  CHECK(r.results["rows"][0]["y"] == "4");
  CHECK(r.results["rows"][1]["x"] == "9/4");
  CHECK(r.results["rows"][1]["y"] == "27/8");
  CHECK(r.results["rows"][1]["verified"] == true);

  const CommandResult bad = cmd_euler(0);
  check_schema(bad);
  CHECK(bad.status == Status::error);
  CHECK(bad.message.find("n_max must be ≥ 1") != std::string::npos);
}

TEST_CASE("family") {
  const CommandResult r = cmd_family(6, 2, std::nullopt);
  check_schema(r);
  CHECK(r.results["x"] == "288");
  CHECK(r.results["y"] == "2304");
  CHECK(r.results["v"] == "1728");
  CHECK(r.results["w"] == "576");
  CHECK(r.results["verified"] == true);

  const CommandResult one = cmd_family(1, 1, std::nullopt);
  CHECK(one.results["x"] == "1/2");
  CHECK(one.results["triviality"]["kind"] == "Trivial");
  CHECK(one.results["triviality"]["reason"] == "contains-one");

  const CommandResult general = cmd_family(2, 2, std::string("1"));
  CHECK(general.results["x"] == "1/4");
  CHECK(general.results["verified"] == true);

  const CommandResult irrational = cmd_family(1, 1, std::string("3"));
  CHECK(irrational.results["x"] == "3^(-1/2)");
  CHECK(irrational.results["verification"] == "numeric");
  CHECK(irrational.results["verified"] == true);

  const CommandResult degenerate = cmd_family(1, 2, std::string("2"));
  CHECK(degenerate.status == Status::error);
  CHECK(degenerate.results["error"] == "DegenerateParameters");
}

TEST_CASE("verify") {
  CHECK(cmd_verify("1/3", "1/6", "1/2", "4/3").results["verified"] == true);
  CHECK(cmd_verify("1/2", "1/3", "1/2", "4/3").results["verified"] == true);
  CHECK(cmd_verify("2/1", "3/1", "2/1", "4/1").results["verified"] == false);
  const CommandResult bad = cmd_verify("1/3", "0.5", "1/2", "4/3");
  check_schema(bad);
  CHECK(bad.status == Status::error);
  CHECK(bad.results["error"] == "ParseError");
}

TEST_CASE("digits") {
  CHECK(cmd_digits(6, 2).results["digits"] == 6635);
  CHECK(cmd_digits(6, 2).results["leading"] == "6.8430e6634");
  CHECK(cmd_digits(6, 3).results["digits"] == 759040);
  CHECK(cmd_digits(6, 3).results["leading"] == "9.8662e759039");
  CHECK(cmd_digits(2, 2).results["digits"] == 15);
  const CommandResult frac = cmd_digits(3, 3);
  CHECK(frac.status == Status::error);
  CHECK(frac.results["error"] == "NonIntegerValue");
}

TEST_CASE("vpv-eval") {
  GlobalOptions g = small(400);
  const CommandResult r = cmd_vpv_eval("1/2", "3/4", ProductForm::Reciprocal, g);
  check_schema(r);
  CHECK(r.results["within_bound"] == true);
  CHECK(r.results["closed_form_value"]["hex"] == "0x1p+4");
  CHECK(r.results["product_value"]["decimal"].get<std::string>().rfind("1.59999999999", 0) == 0);

  g.convention = Convention::Strict;
  const CommandResult one = cmd_vpv_eval("0", "1/2", ProductForm::Direct, g);
  CHECK(one.results["product_value"]["hex"] == "0x1p+0");

  const CommandResult bad = cmd_vpv_eval("3/2", "1/2", ProductForm::Direct, g);
  CHECK(bad.status == Status::error);
  CHECK(bad.message.find("X=3/2") != std::string::npos);
}

TEST_CASE("transform") {
  TransformSource euler;
  euler.n = 1;
  const CommandResult r = cmd_transform(euler, small(400));
  check_schema(r);
  CHECK(r.results["X"] == "1/2");
  CHECK(r.results["Y"] == "3/4");
  CHECK(r.results["exact"] == true);
  CHECK(r.results["numeric"]["verdict"] == true);

  TransformSource far{std::nullopt, "8", "6", "2"};
  const CommandResult w = cmd_transform(far, small(1000));
  CHECK(w.status == Status::warning);
  CHECK(w.exit_code() == 0);
  CHECK(w.results["X"] == "287/288");
  CHECK(w.results["exact"] == true);
  CHECK(w.results["numeric"]["status"] == "InfeasibleTruncation");

  TransformSource neg{std::nullopt, "3", "2", "1"};
  const CommandResult n = cmd_transform(neg, small(400));
  CHECK(n.results["X"] == "-1/2");
  CHECK(n.results["numeric"]["verdict"] == true);

  TransformSource both{1, "3", "2", "1"};
  CHECK(cmd_transform(both, small()).status == Status::error);
}

TEST_CASE("search") {
  const CommandResult r = cmd_search(2, 2);
  check_schema(r);
  REQUIRE(r.results["rows"].size() == 1);
  CHECK(r.results["rows"][0]["b"] == 2);
  CHECK(r.results["rows"][0]["x"] == "4");
  CHECK(cmd_search(1, 1).results["rows"].empty());
}

TEST_CASE("human rendering carries the JSON content") {
  TransformSource euler;
  euler.n = 2;
  for (const CommandResult& r :
       {cmd_euler(3), cmd_family(5, 3, std::nullopt), cmd_digits(6, 2), cmd_search(6, 3),
        cmd_vpv_eval("1/3", "-1/2", ProductForm::Direct, small(30)), cmd_transform(euler, small(100))}) {
    const std::string text = render_human(r);
    check_leaves(r.to_json()["results"], text);
  }
}

TEST_CASE("precision resolution: flag over environment over default") {
  ::unsetenv("VPV_PRECISION_BITS");
  CHECK(resolve_precision(std::nullopt) == kDefaultPrecisionBits);
  ::setenv("VPV_PRECISION_BITS", "320", 1);
  CHECK(resolve_precision(std::nullopt) == 320);
  CHECK(resolve_precision(128u) == 128);
  ::setenv("VPV_PRECISION_BITS", "abc", 1);
  CHECK_THROWS(resolve_precision(std::nullopt));
  ::unsetenv("VPV_PRECISION_BITS");
}
