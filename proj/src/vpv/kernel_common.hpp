#pragma once

#include <cstdint>
#include <vector>

#include "vpvxy/exact/rational.hpp"
#include "vpvxy/exact/real.hpp"
#include "vpvxy/vpv.hpp"

namespace vpvxy::kernels::detail {

// Extra bits carried by individual terms and by the running sum.
inline constexpr mpfr_prec_t kTermGuard = 32;
inline constexpr mpfr_prec_t kSumGuard = 64;

// base^0 .. base^n by repeated multiplication at the given precision.
inline std::vector<Real> power_table(const Rational& base, std::uint64_t n, mpfr_prec_t precision) {
  std::vector<Real> table;
  table.reserve(n + 1);
  table.emplace_back(precision, 1);
  const Real b = Real::from_rational(base, precision);
  for (std::uint64_t i = 1; i <= n; ++i) {
    Real next(precision);
    mpfr_mul(next.get(), table.back().get(), b.get(), MPFR_RNDN);
    table.push_back(std::move(next));
  }
  return table;
}

// scratch <- (1/k) log(1 - xj * yk)
inline void add_term(Real& acc, Real& scratch, const Real& xj, const Real& yk, std::uint64_t k) {
  mpfr_mul(scratch.get(), xj.get(), yk.get(), MPFR_RNDN);
  if (mpfr_zero_p(scratch.get())) return;
  mpfr_neg(scratch.get(), scratch.get(), MPFR_RNDN);
  mpfr_log1p(scratch.get(), scratch.get(), MPFR_RNDN);
  if (k != 1) mpfr_div_ui(scratch.get(), scratch.get(), k, MPFR_RNDN);
  mpfr_add(acc.get(), acc.get(), scratch.get(), MPFR_RNDN);
}

inline Real finish(const Real& acc, ProductForm form, unsigned precision_bits) {
  Real out = acc.rounded(precision_bits);
  if (form == ProductForm::Reciprocal) mpfr_neg(out.get(), out.get(), MPFR_RNDN);
  return out;
}

}  // namespace vpvxy::kernels::detail
