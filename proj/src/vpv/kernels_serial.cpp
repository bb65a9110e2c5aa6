#include <numeric>

#include "kernel_common.hpp"

namespace vpvxy::kernels {

Real log_sum_serial(const Rational& x, const Rational& y, Truncation truncation,
                    Convention convention, ProductForm form, unsigned precision_bits) {
  using namespace detail;
  const mpfr_prec_t term_prec = precision_bits + kTermGuard;
  const auto xp = power_table(x, truncation.nj, term_prec);
  const auto yp = power_table(y, truncation.nk, term_prec);

  Real acc(precision_bits + kSumGuard);
  Real scratch(term_prec);
  if (convention == Convention::Axis) add_term(acc, scratch, xp[0], yp[1], 1);
  for (std::uint64_t j = 1; j <= truncation.nj; ++j) {
    for (std::uint64_t k = 1; k <= truncation.nk; ++k) {
      if (std::gcd(j, k) == 1) add_term(acc, scratch, xp[j], yp[k], k);
    }
  }
  return finish(acc, form, precision_bits);
}

}  // namespace vpvxy::kernels
