// vpvxy: solutions of x^y = y^x and x^y y^x = v^w w^v, and the visible-point
// product transforms built from them.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vpvxy/cli.hpp"
#include "vpvxy/errors.hpp"

namespace cli = vpvxy::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical tools for x^y = y^x, x^y y^x = v^w w^v and VPV products"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::optional<unsigned> precision;
  std::uint64_t truncation = cli::kDefaultTruncation;
  std::string convention = "axis";
  std::uint64_t budget = 10'000'000;
  app.add_flag("--json", as_json, "Emit a single JSON document");
  app.add_option("--precision", precision, "Working precision in bits (env VPV_PRECISION_BITS)")
      ->check(CLI::Range(64u, 1u << 20));
  app.add_option("--truncation", truncation, "Lattice box size N (Nj = Nk = N)")
      ->check(CLI::PositiveNumber);
  app.add_option("--convention", convention, "Product region: axis or strict")
      ->check(CLI::IsMember({"axis", "strict"}));
  app.add_option("--budget", budget, "Lattice point budget for transform verification");

  std::optional<cli::CommandResult> result;

  long n_max = 0;
  auto* euler = app.add_subcommand("euler", "List Euler solutions of x^y = y^x for n = 1..n_max");
  euler->add_option("n_max", n_max)->required();
  euler->callback([&] { result = cli::cmd_euler(n_max); });

  long fb = 0, fc = 0;
  std::optional<std::string> fa;
  auto* family = app.add_subcommand("family", "Build the (b, c) solution family, or (a, b, c) with --a");
  family->add_option("b", fb)->required();
  family->add_option("c", fc)->required();
  family->add_option("--a", fa, "General parameter a as p/q");
  family->callback([&] { result = cli::cmd_family(fb, fc, fa); });

  std::string vx, vy, vv, vw;
  auto* verify = app.add_subcommand("verify", "Exactly verify x^y y^x = v^w w^v");
  verify->add_option("x", vx)->required();
  verify->add_option("y", vy)->required();
  verify->add_option("v", vv)->required();
  verify->add_option("w", vw)->required();
  verify->callback([&] { result = cli::cmd_verify(vx, vy, vv, vw); });

  long db = 0, dc = 0;
  auto* digits = app.add_subcommand("digits", "Decimal digit count of x^y y^x for family (b, c)");
  digits->add_option("b", db)->required();
  digits->add_option("c", dc)->required();
  digits->callback([&] { result = cli::cmd_digits(db, dc); });

  std::string ex, ey, form = "reciprocal";
  auto* vpv = app.add_subcommand("vpv-eval", "Evaluate the truncated visible-point product at (X, Y)");
  vpv->add_option("X", ex)->required();
  vpv->add_option("Y", ey)->required();
  vpv->add_option("--form", form, "direct or reciprocal")->check(CLI::IsMember({"direct", "reciprocal"}));

  cli::TransformSource source;
  auto* transform = app.add_subcommand("transform", "Build and verify a product transform");
  transform->add_option("--n", source.n, "Euler index");
  transform->add_option("--a", source.a);
  transform->add_option("--b", source.b);
  transform->add_option("--c", source.c);

  long sb = 0, sc = 0;
  auto* search = app.add_subcommand("search", "Integer-valued family tuples in 1..b_max x 1..c_max");
  search->add_option("b_max", sb)->required();
  search->add_option("c_max", sc)->required();
  search->callback([&] { result = cli::cmd_search(sb, sc); });

  CLI11_PARSE(app, argc, argv);

  // Subcommands that depend on global options run after the whole line is parsed.
  auto globals = [&] {
    cli::GlobalOptions g;
    g.precision_bits = cli::resolve_precision(precision);
    g.truncation = truncation;
    g.convention = vpvxy::parse_convention(convention);
    g.point_budget = budget;
    return g;
  };
  try {
    if (vpv->parsed()) result = cli::cmd_vpv_eval(ex, ey, vpvxy::parse_form(form), globals());
    if (transform->parsed()) result = cli::cmd_transform(source, globals());
  } catch (const vpvxy::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }

  if (!result) return 1;
  if (as_json) {
    std::cout << result->to_json().dump(2) << '\n';
  } else {
    std::cout << cli::render_human(*result);
  }
  return result->exit_code();
}
