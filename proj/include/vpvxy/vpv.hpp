#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "vpvxy/exact/rational.hpp"
#include "vpvxy/exact/real.hpp"

namespace vpvxy {

/// A lattice point visible from the origin: gcd(j, k) = 1, and j = 0 only at (0, 1).
struct LatticePoint {
  std::uint64_t j = 0;
  std::uint64_t k = 1;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Axis adds the visible axis point (0,1) to the strict region j,k >= 1.
enum class Convention { Axis, Strict };
/// Direct: prod (1 - X^j Y^k)^(1/k). Reciprocal: prod (1 - X^j Y^k)^(-1/k).
enum class ProductForm { Direct, Reciprocal };

std::string_view to_string(Convention c);
std::string_view to_string(ProductForm f);
Convention parse_convention(std::string_view text);
ProductForm parse_form(std::string_view text);

struct Truncation {
  std::uint64_t nj = 400;
  std::uint64_t nk = 400;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Visible points of the box 1..Nj x 1..Nk (plus (0,1) for Axis), lexicographic.
std::vector<LatticePoint> visible_points(std::uint64_t nj, std::uint64_t nk, Convention convention);

/// |{(j,k) in [1,N]^2 : gcd(j,k) = 1}| via sum_d mu(d) floor(N/d)^2.
std::uint64_t count_visible(std::uint64_t n);

/// Throws Error(DomainViolation) naming `name` unless |value| < 1.
void require_unit_disc(const Rational& value, std::string_view name);

/// log of the closed-form value; see closed_form.
Real closed_form_log(const Rational& x, const Rational& y, Convention convention, ProductForm form,
                     unsigned precision_bits);

/**
 * Closed form of the infinite product over visible points.
 *
 * Axis: (1-Y)^(s/(1-X)); Strict: (1-Y)^(s X/(1-X)), with s = +1 for Direct and
 * -1 for Reciprocal. Exact whenever the exponent is an integer.
 */
Real closed_form(const Rational& x, const Rational& y, Convention convention, ProductForm form,
                 unsigned precision_bits);

/// Rigorous (upward-rounded) bound on the log-domain truncation error of the box.
Real tail_bound(const Rational& x, const Rational& y, Truncation truncation, Convention convention,
                unsigned precision_bits = 128);

struct EvalOptions {
  Truncation truncation{};
  unsigned precision_bits = 256;
  Convention convention = Convention::Axis;
  ProductForm form = ProductForm::Direct;
};

struct EvalReport {
  Real product_value;
  Real log_value;
  Real closed_form_value;
  Real closed_form_log;
  Real abs_log_diff;
  Real tail_bound;
  Truncation truncation;
  unsigned precision_bits = 256;
  Convention convention = Convention::Axis;
  ProductForm form = ProductForm::Direct;
  std::uint64_t point_count = 0;

  /// abs_log_diff <= tail_bound + precision slack.
  bool within_bound() const;
};

/// Rounding allowance added to tail bounds when comparing logs: 2^(-bits+16).
Real precision_slack(unsigned precision_bits);

/// Evaluates the truncated product with the parallel kernel.
EvalReport eval_product(const Rational& x, const Rational& y, const EvalOptions& options);

/// Partial double series sum_{J<=NJ, K<=NK} X^J Y^K / K, independent of visible points.
Real log_series_oracle(const Rational& x, const Rational& y, std::uint64_t nj, std::uint64_t nk,
                       unsigned precision_bits);

/// Exact rational check that regrouping the coprime-indexed Mercator expansion by
/// m = gcd(J,K) reproduces the plain double series on the truncated box.
bool exact_regroup_check(const Rational& x, const Rational& y, std::uint64_t nj, std::uint64_t nk);

namespace kernels {

/// Signed log-sum s * sum_{visible (j,k)} (1/k) log(1 - X^j Y^k), rounded to precision_bits.
/// Serial reference: one accumulator, lexicographic order.
Real log_sum_serial(const Rational& x, const Rational& y, Truncation truncation,
                    Convention convention, ProductForm form, unsigned precision_bits);

/// OpenMP over j-strips; strips reduced in j order, so the result does not
/// depend on the thread count.
Real log_sum_parallel(const Rational& x, const Rational& y, Truncation truncation,
                      Convention convention, ProductForm form, unsigned precision_bits);

}  // namespace kernels

}  // namespace vpvxy
