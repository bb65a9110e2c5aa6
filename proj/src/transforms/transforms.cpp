#include "vpvxy/transforms.hpp"

#include "vpvxy/errors.hpp"

namespace vpvxy {

namespace {

// t = 1/(1 - T)
Rational solution_value(const Rational& param) { return (Rational(1) - param).inverse(); }

// T = (t - 1)/t
Rational parameter_of(const Rational& value) { return (value - 1) / value; }

PrimePowerProduct ppp(const Rational& q) { return PrimePowerProduct::from_rational(q); }

ScalarIdentity pair_identity(const Rational& x, const Rational& y) {
  return {pow(ppp(x), y), pow(ppp(y), x)};
}

ScalarIdentity quad_identity(const Rational& x, const Rational& y, const Rational& v,
                             const Rational& w) {
  return {pow(ppp(x), y) * pow(ppp(y), x), pow(ppp(v), w) * pow(ppp(w), v)};
}

std::uint64_t box_points(const Truncation& t) { return t.nj * t.nk + 1; }

struct SideTotal {
  Real log;
  Real bound;
};

SideTotal sum_side(const std::vector<EvalReport>& reports, unsigned bits) {
  SideTotal total{Real(bits), Real(bits)};
  for (const auto& r : reports) {
    mpfr_add(total.log.get(), total.log.get(), r.log_value.get(), MPFR_RNDN);
    mpfr_add(total.bound.get(), total.bound.get(), r.tail_bound.get(), MPFR_RNDU);
  }
  return total;
}

using ParamPair = std::pair<Rational, Rational>;

TransformReport compare_products(const std::vector<ParamPair>& left,
                                 const std::vector<ParamPair>& right, bool exact_identity,
                                 const TransformOptions& options) {
  const unsigned bits = options.precision_bits;
  TransformReport report{NumericStatus::InfeasibleTruncation, {}, {}, Real(bits), Real(bits),
                         Real(bits), Real(bits), false, exact_identity, {}};

  // Bound the combined error before spending any time on evaluation.
  Real bound(bits);
  for (const auto* side : {&left, &right}) {
    for (const auto& [p, q] : *side) {
      const Real tb = tail_bound(p, q, options.truncation, options.convention, bits);
      mpfr_add(bound.get(), bound.get(), tb.get(), MPFR_RNDU);
    }
  }
  const std::size_t products = left.size() + right.size();
  const Real slack = precision_slack(bits);
  mpfr_mul_ui(report.combined_bound.get(), slack.get(), products, MPFR_RNDU);
  mpfr_add(report.combined_bound.get(), report.combined_bound.get(), bound.get(), MPFR_RNDU);

  const std::uint64_t requested = products * box_points(options.truncation);
  if (mpfr_cmp_d(report.combined_bound.get(), options.tolerance) > 0) {
    report.message = "InfeasibleTruncation: combined tail bound " +
                     report.combined_bound.to_scientific(6) + " exceeds tolerance at Nj=" +
                     std::to_string(options.truncation.nj) + ", Nk=" +
                     std::to_string(options.truncation.nk) + "; exact scalar identity " +
                     (exact_identity ? "holds" : "fails");
    return report;
  }
  if (requested > options.point_budget) {
    report.message = "InfeasibleTruncation: " + std::to_string(requested) +
                     " lattice points exceed the budget of " +
                     std::to_string(options.point_budget);
    return report;
  }

  const EvalOptions eval{options.truncation, bits, options.convention, ProductForm::Direct};
  for (const auto& [p, q] : left) report.left.push_back(eval_product(p, q, eval));
  for (const auto& [p, q] : right) report.right.push_back(eval_product(p, q, eval));

  SideTotal l = sum_side(report.left, bits);
  SideTotal r = sum_side(report.right, bits);
  mpfr_sub(report.abs_log_diff.get(), l.log.get(), r.log.get(), MPFR_RNDU);
  mpfr_abs(report.abs_log_diff.get(), report.abs_log_diff.get(), MPFR_RNDU);
  report.left_log = std::move(l.log);
  report.right_log = std::move(r.log);

  report.verdict = mpfr_lessequal_p(report.abs_log_diff.get(), report.combined_bound.get()) != 0;
  report.status = report.verdict ? NumericStatus::Verified : NumericStatus::Refuted;
  report.message = report.verdict ? "products agree within the combined bound"
                                  : "products differ by more than the combined bound";
  return report;
}

}  // namespace

std::string_view to_string(NumericStatus status) {
  switch (status) {
    case NumericStatus::Verified: return "verified";
    case NumericStatus::Refuted: return "refuted";
    case NumericStatus::InfeasibleTruncation: return "InfeasibleTruncation";
  }
  return "unknown";
}

TransformInstance TransformInstance::pair(const Rational& x, const Rational& y) {
  require_unit_disc(x, "X");
  require_unit_disc(y, "Y");
  TransformInstance t;
  t.kind = TransformKind::Pair;
  t.x_param = x;
  t.y_param = y;
  t.scalar_identity = pair_identity(solution_value(x), solution_value(y));
  return t;
}

TransformInstance TransformInstance::quad(const Rational& x, const Rational& y, const Rational& v,
                                          const Rational& w) {
  require_unit_disc(x, "X");
  require_unit_disc(y, "Y");
  require_unit_disc(v, "V");
  require_unit_disc(w, "W");
  TransformInstance t;
  t.kind = TransformKind::Quad;
  t.x_param = x;
  t.y_param = y;
  t.v_param = v;
  t.w_param = w;
  t.scalar_identity = quad_identity(solution_value(x), solution_value(y), solution_value(v),
                                    solution_value(w));
  return t;
}

SolutionTuple TransformInstance::solution() const {
  if (kind == TransformKind::Pair) {
    const Rational x = solution_value(x_param), y = solution_value(y_param);
    return SolutionTuple{ppp(x), ppp(y), ppp(y), ppp(x), source};
  }
  SolutionTuple t = SolutionTuple::manual(solution_value(x_param), solution_value(y_param),
                                          solution_value(v_param), solution_value(w_param));
  t.provenance = source;
  return t;
}

TransformInstance transform_from_euler(long n) {
  const EulerPair sol = euler_solution(n);
  TransformInstance t = TransformInstance::pair(parameter_of(sol.x), parameter_of(sol.y));
  t.source = EulerSource{n};
  return t;
}

TransformInstance transform_from_family(const Rational& a, const Rational& b, const Rational& c) {
  const SolutionTuple sol = general_solution(a, b, c);
  if (!sol.is_rational()) {
    throw Error(ErrorKind::NonRationalTuple, "x = " + sol.x.to_string() + " is irrational");
  }
  const auto [x, y, v, w] = sol.rational_values();
  const Rational px = parameter_of(x), py = parameter_of(y), pv = parameter_of(v),
                 pw = parameter_of(w);
  TransformInstance t = TransformInstance::quad(px, py, pv, pw);
  t.source = GeneralSource{a, b, c};
  return t;
}

TransformReport verify_pair_transform(const TransformInstance& t, const TransformOptions& options) {
  if (t.kind != TransformKind::Pair) throw Error(ErrorKind::InvalidArgument, "expected a pair instance");
  return compare_products({{t.x_param, t.y_param}}, {{t.y_param, t.x_param}},
                          closed_equality_check(t), options);
}

TransformReport verify_quad_transform(const TransformInstance& t, const TransformOptions& options) {
  if (t.kind != TransformKind::Quad) throw Error(ErrorKind::InvalidArgument, "expected a quad instance");
  return compare_products({{t.x_param, t.y_param}, {t.y_param, t.x_param}},
                          {{t.v_param, t.w_param}, {t.w_param, t.v_param}},
                          closed_equality_check(t), options);
}

bool closed_equality_check(const TransformInstance& t) {
  const SolutionTuple sol = t.solution();
  if (t.kind == TransformKind::Pair) {
    const auto [x, y, v, w] = sol.rational_values();
    return verify_power_equation(x, y);
  }
  return verify_equation(sol);
}

}  // namespace vpvxy
