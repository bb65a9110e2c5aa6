#pragma once

#include <string>
#include <vector>

#include "vpvxy/exact/rational.hpp"
#include "vpvxy/exact/real.hpp"

namespace vpvxy {

struct PrimeFactor {
  BigInt prime;
  Rational exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/**
 * A positive real written as a finite product of primes raised to rational
 * exponents.
 *
 * Factors are kept in ascending prime order with no zero exponents, so two
 * values are equal exactly when their factor lists are equal. The empty
 * list is the value 1.
 */
class PrimePowerProduct {
 public:
  PrimePowerProduct() = default;

  /// Validates ordering, primality and non-zero exponents.
  static PrimePowerProduct from_factors(std::vector<PrimeFactor> factors);
  /// Exact factorization of q > 0; throws Error(NonPositiveInput) otherwise.
  static PrimePowerProduct from_rational(const Rational& q);

  const std::vector<PrimeFactor>& factors() const { return factors_; }
  Rational exponent_of(const BigInt& prime) const;

  bool is_one() const { return factors_.empty(); }
  /// All exponents integral, i.e. the value is a rational number.
  bool is_rational() const;
  /// All exponents non-negative integers, i.e. the value is a positive integer.
  bool is_integer() const;

  /// Exact value; throws Error(NonIntegralExponent) if !is_rational().
  Rational to_rational() const;
  /// Exact integer value; throws Error(NonIntegerValue) if !is_integer().
  BigInt to_integer() const;

  /// "2^5 * 3^2", "2^(5/3) * 3^(-1/2)", "1" for the empty product.
  std::string to_string() const;
  /// Fraction text when rational, prime-power text otherwise.
  std::string to_display_string() const;

  friend bool operator==(const PrimePowerProduct&, const PrimePowerProduct&) = default;

  friend PrimePowerProduct operator*(const PrimePowerProduct& u, const PrimePowerProduct& v);
  friend PrimePowerProduct pow(const PrimePowerProduct& u, const Rational& r);

 private:
  std::vector<PrimeFactor> factors_;
};

/// Interval containing sum e_p * ln p, computed at `precision_bits`.
Interval ln_interval(const PrimePowerProduct& u, unsigned precision_bits);
/// Interval containing sum e_p * log10 p; precision_bits >= 64.
Interval log10_interval(const PrimePowerProduct& u, unsigned precision_bits);

/// Number of base-10 digits of an integer-valued product.
///
/// Widens the log10 enclosure from 256 to 8192 bits until it avoids an
/// integer boundary, then falls back to exact expansion.
unsigned long digit_count(const PrimePowerProduct& u);

/// Leading significant digits of an integer-valued product, with its decimal exponent.
struct LeadingDigits {
  std::string mantissa;  // e.g. "6.843"
  unsigned long exponent = 0;
};
LeadingDigits leading_digits(const PrimePowerProduct& u, int significant_digits);

}  // namespace vpvxy
