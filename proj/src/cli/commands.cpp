#include <cstdlib>
#include <functional>

#include "vpvxy/cli.hpp"
#include "vpvxy/errors.hpp"
#include "vpvxy/solutions.hpp"
#include "vpvxy/transforms.hpp"

namespace vpvxy::cli {

using json = nlohmann::ordered_json;

namespace {

// Runs `body` and turns library errors into status=error results.
CommandResult run(std::string command, json inputs, const std::function<void(CommandResult&)>& body) {
  CommandResult result;
  result.command = std::move(command);
  result.inputs = std::move(inputs);
  try {
    body(result);
  } catch (const Error& e) {
    result.status = Status::error;
    result.results = json::object();
    result.results["error"] = std::string(vpvxy::to_string(e.kind()));
    result.message = e.what();
  }
  return result;
}

json triviality_json(const TrivialityVerdict& v) {
  return {{"kind", std::string(to_string(v.kind))}, {"reason", std::string(to_string(v.reason))}};
}

json tuple_json(const SolutionTuple& t) {
  return {{"x", t.x.to_display_string()},
          {"y", t.y.to_display_string()},
          {"v", t.v.to_display_string()},
          {"w", t.w.to_display_string()}};
}

json interval_json(const Interval& iv) {
  return {{"lo", real_json(iv.lo)}, {"hi", real_json(iv.hi)}};
}

json eval_report_json(const EvalReport& r) {
  return {{"product_value", real_json(r.product_value)},
          {"log_value", real_json(r.log_value)},
          {"closed_form_value", real_json(r.closed_form_value)},
          {"closed_form_log", real_json(r.closed_form_log)},
          {"abs_log_diff", real_json(r.abs_log_diff)},
          {"tail_bound", real_json(r.tail_bound)},
          {"within_bound", r.within_bound()},
          {"truncation", {{"nj", r.truncation.nj}, {"nk", r.truncation.nk}}},
          {"point_count", r.point_count},
          {"precision_bits", r.precision_bits},
          {"convention", std::string(to_string(r.convention))},
          {"form", std::string(to_string(r.form))}};
}

json options_json(const GlobalOptions& o) {
  return {{"precision_bits", o.precision_bits},
          {"truncation", o.truncation},
          {"convention", std::string(to_string(o.convention))}};
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::error: return "error";
    case Status::warning: return "warning";
  }
  return "error";
}

json CommandResult::to_json() const {
  return {{"command", command},
          {"inputs", inputs},
          {"results", results},
          {"status", std::string(cli::to_string(status))},
          {"message", message}};
}

json real_json(const Real& value) {
  return {{"decimal", value.to_scientific()}, {"hex", value.to_hex()}};
}

unsigned resolve_precision(std::optional<unsigned> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("VPV_PRECISION_BITS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long bits = std::strtoul(env, &end, 10);
    if (*end != '\0' || bits == 0) {
      throw Error(ErrorKind::ParseError, "VPV_PRECISION_BITS must be a positive integer");
    }
    return static_cast<unsigned>(bits);
  }
  return kDefaultPrecisionBits;
}

CommandResult cmd_euler(long n_max) {
  return run("euler", {{"n_max", n_max}}, [&](CommandResult& r) {
    if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be ≥ 1");
    json rows = json::array();
    for (long n = 1; n <= n_max; ++n) {
      const EulerPair s = euler_solution(n);
      rows.push_back({{"n", n},
                      {"x", s.x.to_string()},
                      {"y", s.y.to_string()},
                      {"verified", verify_power_equation(s.x, s.y)}});
    }
    r.results["rows"] = std::move(rows);
  });
}

CommandResult cmd_family(long b, long c, const std::optional<std::string>& a) {
  json inputs = {{"b", b}, {"c", c}};
  if (a) inputs["a"] = *a;
  return run("family", std::move(inputs), [&](CommandResult& r) {
    const SolutionTuple t =
        a ? general_solution(Rational::parse(*a), Rational(b), Rational(c)) : rational_family(b, c);
    r.results = tuple_json(t);
    r.results["provenance"] = describe(t.provenance);
    r.results["rational"] = t.is_rational();
    r.results["triviality"] = triviality_json(classify_triviality(t));
    if (t.is_rational()) {
      r.results["verified"] = verify_equation(t);
      r.results["verification"] = "exact";
    } else {
      const NumericCheck check = numeric_verify_equation(t, kDefaultPrecisionBits);
      r.results["verified"] = check.holds;
      r.results["verification"] = "numeric";
      r.results["residual"] = interval_json(check.residual);
    }
  });
}

CommandResult cmd_verify(const std::string& x, const std::string& y, const std::string& v,
                         const std::string& w) {
  return run("verify", {{"x", x}, {"y", y}, {"v", v}, {"w", w}}, [&](CommandResult& r) {
    const SolutionTuple t = SolutionTuple::manual(Rational::parse(x), Rational::parse(y),
                                                  Rational::parse(v), Rational::parse(w));
    r.results["verified"] = verify_equation(t);
    r.results["triviality"] = triviality_json(classify_triviality(t));
  });
}

CommandResult cmd_digits(long b, long c) {
  return run("digits", {{"b", b}, {"c", c}}, [&](CommandResult& r) {
    const SolutionTuple t = rational_family(b, c);
    if (!t.is_integral()) {
      throw Error(ErrorKind::NonIntegerValue,
                  "family(" + std::to_string(b) + "," + std::to_string(c) + ") has x = " +
                      t.x.to_display_string() + ", not an integer tuple");
    }
    const Rational x = t.x.to_rational(), y = t.y.to_rational();
    const PrimePowerProduct value = pow(t.x, y) * pow(t.y, x);
    const LeadingDigits lead = leading_digits(value, 5);
    r.results = tuple_json(t);
    r.results["sides_equal"] = verify_equation(t);
    r.results["value"] = value.to_string();
    r.results["digits"] = digit_count(value);
    r.results["leading"] = lead.mantissa + "e" + std::to_string(lead.exponent);
  });
}

CommandResult cmd_vpv_eval(const std::string& x, const std::string& y, ProductForm form,
                           const GlobalOptions& options) {
  json inputs = {{"X", x}, {"Y", y}, {"form", std::string(to_string(form))}};
  inputs.update(options_json(options));
  return run("vpv-eval", std::move(inputs), [&](CommandResult& r) {
    const EvalOptions eval{{options.truncation, options.truncation},
                           options.precision_bits,
                           options.convention,
                           form};
    r.results = eval_report_json(eval_product(Rational::parse(x), Rational::parse(y), eval));
  });
}

CommandResult cmd_transform(const TransformSource& source, const GlobalOptions& options) {
  json inputs = json::object();
  if (source.n) inputs["n"] = *source.n;
  if (source.a) inputs["a"] = *source.a;
  if (source.b) inputs["b"] = *source.b;
  if (source.c) inputs["c"] = *source.c;
  inputs.update(options_json(options));
  return run("transform", std::move(inputs), [&](CommandResult& r) {
    const bool family = source.a || source.b || source.c;
    if (source.n.has_value() == family || (family && !(source.a && source.b && source.c))) {
      throw Error(ErrorKind::InvalidArgument, "give either --n or all of --a, --b, --c");
    }
    const TransformInstance t =
        source.n ? transform_from_euler(*source.n)
                 : transform_from_family(Rational::parse(*source.a), Rational::parse(*source.b),
                                         Rational::parse(*source.c));
    const bool quad = t.kind == TransformKind::Quad;
    r.results["kind"] = quad ? "quad" : "pair";
    r.results["source"] = describe(t.source);
    r.results["X"] = t.x_param.to_string();
    r.results["Y"] = t.y_param.to_string();
    if (quad) {
      r.results["V"] = t.v_param.to_string();
      r.results["W"] = t.w_param.to_string();
    }
    r.results["scalar_identity"] = {{"left", t.scalar_identity.left.to_string()},
                                    {"right", t.scalar_identity.right.to_string()}};
    r.results["exact"] = closed_equality_check(t);

    const TransformOptions topts{{options.truncation, options.truncation},
                                 options.precision_bits,
                                 options.convention,
                                 1e-8,
                                 options.point_budget};
    const TransformReport rep = quad ? verify_quad_transform(t, topts) : verify_pair_transform(t, topts);
    json numeric = {{"status", std::string(to_string(rep.status))},
                    {"combined_bound", real_json(rep.combined_bound)}};
    if (rep.status != NumericStatus::InfeasibleTruncation) {
      numeric["verdict"] = rep.verdict;
      numeric["left_log"] = real_json(rep.left_log);
      numeric["right_log"] = real_json(rep.right_log);
      numeric["abs_log_diff"] = real_json(rep.abs_log_diff);
    }
    r.results["numeric"] = std::move(numeric);
    r.message = rep.message;
    if (rep.status == NumericStatus::InfeasibleTruncation) r.status = Status::warning;
  });
}

CommandResult cmd_search(long b_max, long c_max) {
  return run("search", {{"b_max", b_max}, {"c_max", c_max}}, [&](CommandResult& r) {
    json rows = json::array();
    for (const SolutionTuple& t : search_integer_solutions(b_max, c_max)) {
      const auto& f = std::get<FamilySource>(t.provenance);
      json row = {{"b", f.b}, {"c", f.c}};
      row.update(tuple_json(t));
      row["verified"] = verify_equation(t);
      rows.push_back(std::move(row));
    }
    r.results["rows"] = std::move(rows);
  });
}

}  // namespace vpvxy::cli
