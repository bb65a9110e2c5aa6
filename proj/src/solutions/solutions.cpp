#include "vpvxy/solutions.hpp"

#include <optional>

#include "vpvxy/errors.hpp"

namespace vpvxy {

namespace {

PrimePowerProduct ppp(const Rational& q) { return PrimePowerProduct::from_rational(q); }

// x^y * y^x as an exponent vector; y and x must be rational-valued.
PrimePowerProduct symmetric_power(const PrimePowerProduct& x, const PrimePowerProduct& y) {
  return pow(x, y.to_rational()) * pow(y, x.to_rational());
}

BigInt ipow(long base, long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return r;
}

}  // namespace

std::string describe(const Provenance& source) {
  struct Visitor {
    std::string operator()(const EulerSource& s) const { return "euler(n=" + std::to_string(s.n) + ")"; }
    std::string operator()(const GeneralSource& s) const {
      return "general(a=" + s.a.to_string() + ", b=" + s.b.to_string() + ", c=" + s.c.to_string() + ")";
    }
    std::string operator()(const FamilySource& s) const {
      return "family(b=" + std::to_string(s.b) + ", c=" + std::to_string(s.c) + ")";
    }
    std::string operator()(const ManualSource&) const { return "manual"; }
  };
  return std::visit(Visitor{}, source);
}

SolutionTuple SolutionTuple::manual(const Rational& x, const Rational& y, const Rational& v,
                                    const Rational& w) {
  return {ppp(x), ppp(y), ppp(v), ppp(w), ManualSource{}};
}

bool SolutionTuple::is_rational() const {
  return x.is_rational() && y.is_rational() && v.is_rational() && w.is_rational();
}

bool SolutionTuple::is_integral() const {
  auto integral = [](const PrimePowerProduct& u) { return u.is_one() || u.is_integer(); };
  return integral(x) && integral(y) && integral(v) && integral(w);
}

std::array<Rational, 4> SolutionTuple::rational_values() const {
  return {x.to_rational(), y.to_rational(), v.to_rational(), w.to_rational()};
}

std::string_view to_string(Triviality kind) {
  return kind == Triviality::Trivial ? "Trivial" : "Nontrivial";
}

std::string_view to_string(TrivialityReason reason) {
  switch (reason) {
    case TrivialityReason::MultisetEqual: return "multiset-equal";
    case TrivialityReason::ContainsOne: return "contains-one";
    case TrivialityReason::None: return "none";
  }
  return "none";
}

EulerPair euler_solution(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const Rational base(n + 1, n);
  return {base.pow(n), base.pow(n + 1)};
}

bool verify_power_equation(const Rational& x, const Rational& y) {
  if (x.sign() <= 0 || y.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveInput, "x and y must be positive");
  }
  return pow(ppp(x), y) == pow(ppp(y), x);
}

SolutionTuple general_solution(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero()) throw Error(ErrorKind::DegenerateParameters, "a = 0");
  if (a + 1 == b + c) throw Error(ErrorKind::DegenerateParameters, "a + 1 = b + c");
  if (b.sign() <= 0 || c.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveParameter, "b and c must be positive");
  }
  if (a.sign() < 0) {
    throw Error(ErrorKind::NonPositiveParameter, "y = a*x would be negative for a = " + a.to_string());
  }
  const PrimePowerProduct pa = ppp(a), pb = ppp(b), pc = ppp(c);
  const PrimePowerProduct base = pow(pb, c) * pow(pc, b) * pow(pa, Rational(-1));
  const PrimePowerProduct x = pow(base, (a - b - c + 1).inverse());
  return {x, pa * x, pb * x, pc * x, GeneralSource{a, b, c}};
}

SolutionTuple rational_family(long b, long c) {
  if (b < 1 || c < 1) {
    throw Error(ErrorKind::NonPositiveParameter, "family needs positive integers b, c");
  }
  const Rational y(BigInt(ipow(b, c) * ipow(c, b)));
  const Rational x = y / Rational(b + c);
  return {ppp(x), ppp(y), ppp(x * Rational(b)), ppp(x * Rational(c)), FamilySource{b, c}};
}

bool verify_equation(const SolutionTuple& t) {
  if (!t.is_rational()) {
    throw Error(ErrorKind::NonRationalTuple,
                "tuple has irrational values; use numeric verification");
  }
  return symmetric_power(t.x, t.y) == symmetric_power(t.v, t.w);
}

NumericCheck numeric_verify_equation(const SolutionTuple& t, unsigned precision_bits) {
  if (precision_bits < 64) throw Error(ErrorKind::InvalidArgument, "precision_bits must be >= 64");
  auto side = [precision_bits](const PrimePowerProduct& p, const PrimePowerProduct& q) {
    const Interval ln_p = ln_interval(p, precision_bits);
    const Interval ln_q = ln_interval(q, precision_bits);
    return exp(ln_q) * ln_p + exp(ln_p) * ln_q;
  };
  Interval residual = side(t.x, t.y) - side(t.v, t.w);

  Real limit(precision_bits);
  mpfr_set_ui_2exp(limit.get(), 1, -static_cast<long>(precision_bits / 2), MPFR_RNDN);
  const Real width = residual.width();
  const bool holds = residual.contains_zero() && mpfr_less_p(width.get(), limit.get());
  return {holds, std::move(residual)};
}

TrivialityVerdict classify_triviality(const SolutionTuple& t) {
  const bool multiset_equal = (t.x == t.v && t.y == t.w) || (t.x == t.w && t.y == t.v);
  if (multiset_equal) return {Triviality::Trivial, TrivialityReason::MultisetEqual};
  if (t.x.is_one() || t.y.is_one() || t.v.is_one() || t.w.is_one()) {
    return {Triviality::Trivial, TrivialityReason::ContainsOne};
  }
  return {Triviality::Nontrivial, TrivialityReason::None};
}

std::vector<SolutionTuple> search_integer_solutions(long b_max, long c_max) {
  if (b_max < 1 || c_max < 1) throw Error(ErrorKind::InvalidArgument, "bounds must be >= 1");
  const long cells = b_max * c_max;
  std::vector<std::optional<SolutionTuple>> slots(static_cast<std::size_t>(cells));

#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < cells; ++idx) {
    const long b = idx / c_max + 1;
    const long c = idx % c_max + 1;
    // v = b x and w = c x are integral whenever x is.
    if (!mpz_divisible_ui_p(BigInt(ipow(b, c) * ipow(c, b)).get_mpz_t(),
                            static_cast<unsigned long>(b + c))) {
      continue;
    }
    slots[static_cast<std::size_t>(idx)] = rational_family(b, c);
  }

  std::vector<SolutionTuple> out;
  for (auto& slot : slots) {
    if (slot) out.push_back(std::move(*slot));
  }
  return out;
}

}  // namespace vpvxy
