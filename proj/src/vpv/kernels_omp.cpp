#include <numeric>

#include "kernel_common.hpp"

namespace vpvxy::kernels {

Real log_sum_parallel(const Rational& x, const Rational& y, Truncation truncation,
                      Convention convention, ProductForm form, unsigned precision_bits) {
  using namespace detail;
  const mpfr_prec_t term_prec = precision_bits + kTermGuard;
  const mpfr_prec_t sum_prec = precision_bits + kSumGuard;
  const auto xp = power_table(x, truncation.nj, term_prec);
  const auto yp = power_table(y, truncation.nk, term_prec);

  // strips[j - 1] holds the k-ordered partial sum of row j.
  std::vector<Real> strips(truncation.nj, Real(sum_prec));
  const auto rows = static_cast<std::int64_t>(truncation.nj);

#pragma omp parallel
  {
    Real scratch(term_prec);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t row = 0; row < rows; ++row) {
      const auto j = static_cast<std::uint64_t>(row) + 1;
      Real& strip = strips[static_cast<std::size_t>(row)];
      for (std::uint64_t k = 1; k <= truncation.nk; ++k) {
        if (std::gcd(j, k) == 1) add_term(strip, scratch, xp[j], yp[k], k);
      }
    }
  }

  Real acc(sum_prec);
  Real scratch(term_prec);
  if (convention == Convention::Axis) add_term(acc, scratch, xp[0], yp[1], 1);
  for (const Real& strip : strips) mpfr_add(acc.get(), acc.get(), strip.get(), MPFR_RNDN);
  return finish(acc, form, precision_bits);
}

}  // namespace vpvxy::kernels
