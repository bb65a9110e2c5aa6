#pragma once

#include <string>

#include <mpfr.h>

#include "vpvxy/exact/rational.hpp"

namespace vpvxy {

/// Owning RAII wrapper around an MPFR value with a fixed precision.
class Real {
 public:
  explicit Real(mpfr_prec_t precision = 256);
  Real(mpfr_prec_t precision, long value);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_rational(const Rational& q, mpfr_prec_t precision,
                            mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  /// Copy rounded to a different precision.
  Real rounded(mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN) const;

  /// Scientific decimal with `digits` significant digits (0 = derived from precision).
  std::string to_scientific(int digits = 0) const;
  /// Exact hexadecimal float rendering ("%Ra"), for bit-exact comparison.
  std::string to_hex() const;

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with outward-rounded endpoints.
struct Interval {
  Real lo;
  Real hi;

  explicit Interval(mpfr_prec_t precision) : lo(precision), hi(precision) {}

  static Interval point(const Rational& q, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return lo.precision(); }
  bool contains_zero() const;
  bool contains(const Rational& q) const;
  /// Upper bound on hi - lo.
  Real width() const;
  Real midpoint() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval scale(const Interval& a, const Rational& q);
Interval exp(const Interval& a);

}  // namespace vpvxy
