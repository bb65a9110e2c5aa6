#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "vpvxy/exact/prime_power.hpp"
#include "vpvxy/exact/rational.hpp"

namespace vpvxy {

struct EulerSource {
  long n = 1;
};
struct GeneralSource {
  Rational a, b, c;
};
struct FamilySource {
  long b = 1, c = 1;
};
struct ManualSource {};

using Provenance = std::variant<EulerSource, GeneralSource, FamilySource, ManualSource>;

std::string describe(const Provenance& source);

/// One solution (x, y, v, w) of x^y * y^x = v^w * w^v, all values positive.
struct SolutionTuple {
  PrimePowerProduct x, y, v, w;
  Provenance provenance = ManualSource{};

  static SolutionTuple manual(const Rational& x, const Rational& y, const Rational& v,
                              const Rational& w);

  /// Every value has integral exponents.
  bool is_rational() const;
  bool is_integral() const;
  std::array<Rational, 4> rational_values() const;
};

enum class Triviality { Trivial, Nontrivial };
enum class TrivialityReason { MultisetEqual, ContainsOne, None };

struct TrivialityVerdict {
  Triviality kind = Triviality::Nontrivial;
  TrivialityReason reason = TrivialityReason::None;
};

std::string_view to_string(Triviality kind);
std::string_view to_string(TrivialityReason reason);

struct EulerPair {
  Rational x, y;
};

/// x = (1+1/n)^n, y = (1+1/n)^(n+1) for n >= 1.
EulerPair euler_solution(long n);

/// Decides x^y == y^x exactly via prime-exponent vectors.
bool verify_power_equation(const Rational& x, const Rational& y);

/**
 * The three-parameter family with y = a*x, v = b*x, w = c*x and
 * x = (b^c c^b / a)^(1/(a-b-c+1)).
 *
 * Requires a != 0, a+1 != b+c (DegenerateParameters) and a, b, c > 0
 * (NonPositiveParameter); x may be irrational.
 */
SolutionTuple general_solution(const Rational& a, const Rational& b, const Rational& c);

/// The a = b+c specialisation: x = b^c c^b / (b+c), y = b^c c^b, v = b x, w = c x.
SolutionTuple rational_family(long b, long c);

/// Exact check of x^y y^x == v^w w^v; throws NonRationalTuple on irrational values.
bool verify_equation(const SolutionTuple& t);

struct NumericCheck {
  bool holds = false;
  Interval residual;  // encloses log(x^y y^x) - log(v^w w^v)
};

/// Interval-arithmetic check usable for irrational tuples; precision_bits >= 64.
NumericCheck numeric_verify_equation(const SolutionTuple& t, unsigned precision_bits);

/// Trivial when {x,y} == {v,w} as multisets, or when 1 is among the values.
TrivialityVerdict classify_triviality(const SolutionTuple& t);

/// Family tuples with 1 <= b <= b_max, 1 <= c <= c_max whose values are all integers,
/// in (b, c)-lexicographic order.
std::vector<SolutionTuple> search_integer_solutions(long b_max, long c_max);

}  // namespace vpvxy
