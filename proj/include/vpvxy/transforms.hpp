#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vpvxy/exact/prime_power.hpp"
#include "vpvxy/solutions.hpp"
#include "vpvxy/vpv.hpp"

namespace vpvxy {

enum class TransformKind { Pair, Quad };

/// The exact scalar equality behind a transform: left = x^y (Pair) or
/// x^y y^x (Quad), right = y^x or v^w w^v, all as exponent vectors.
struct ScalarIdentity {
  PrimePowerProduct left;
  PrimePowerProduct right;
  bool holds() const { return left == right; }
};

/**
 * Product parameters derived from a solution through t = 1/(1 - T), i.e.
 * T = (t - 1)/t for each solution value t.
 */
struct TransformInstance {
  TransformKind kind = TransformKind::Pair;
  Rational x_param, y_param, v_param, w_param;  // V, W unused for Pair
  Provenance source = ManualSource{};
  ScalarIdentity scalar_identity;

  /// Validates |X|,|Y| < 1; the scalar identity is recorded, not required to hold.
  static TransformInstance pair(const Rational& x, const Rational& y);
  static TransformInstance quad(const Rational& x, const Rational& y, const Rational& v,
                                const Rational& w);

  /// The solution values 1/(1 - T).
  SolutionTuple solution() const;
};

/// X = 1 - (n/(n+1))^n, Y = 1 - (n/(n+1))^(n+1).
TransformInstance transform_from_euler(long n);

/// X = (x-1)/x, Y = (ax-1)/(ax), V = (bx-1)/(bx), W = (cx-1)/(cx) for the
/// three-parameter solution; x must be rational and every parameter in (-1, 1).
TransformInstance transform_from_family(const Rational& a, const Rational& b, const Rational& c);

enum class NumericStatus { Verified, Refuted, InfeasibleTruncation };
std::string_view to_string(NumericStatus status);

struct TransformOptions {
  Truncation truncation{};
  unsigned precision_bits = 256;
  Convention convention = Convention::Axis;
  /// Largest combined bound for which numeric evaluation is attempted.
  double tolerance = 1e-8;
  /// Maximum total lattice points across all evaluated products.
  std::uint64_t point_budget = 10'000'000;
};

struct TransformReport {
  NumericStatus status = NumericStatus::InfeasibleTruncation;
  std::vector<EvalReport> left;   // factors of the left product
  std::vector<EvalReport> right;  // factors of the right product
  Real left_log;
  Real right_log;
  Real abs_log_diff;
  Real combined_bound;  // tail bounds of every factor plus precision slack
  bool verdict = false;
  bool exact_identity = false;
  std::string message;
};

/// Compares prod(X,Y) against prod(Y,X) in Direct form.
TransformReport verify_pair_transform(const TransformInstance& t, const TransformOptions& options);

/// Compares prod(X,Y) prod(Y,X) against prod(V,W) prod(W,V) in Direct form.
TransformReport verify_quad_transform(const TransformInstance& t, const TransformOptions& options);

/// Exact verification of the scalar identity reconstructed from the parameters.
bool closed_equality_check(const TransformInstance& t);

}  // namespace vpvxy
