#pragma once

#include <string>

#include <mpfr.h>

#include "vpvxy/exact/real.hpp"

namespace vpvxy::testing {

// |value - expected| <= tol, with `expected` given as a decimal string.
inline bool close_to(const Real& value, const std::string& expected, const std::string& tol) {
  const mpfr_prec_t p = value.precision() + 64;
  Real e(p), t(p), d(p);
  mpfr_set_str(e.get(), expected.c_str(), 10, MPFR_RNDN);
  mpfr_set_str(t.get(), tol.c_str(), 10, MPFR_RNDN);
  mpfr_sub(d.get(), value.get(), e.get(), MPFR_RNDN);
  mpfr_abs(d.get(), d.get(), MPFR_RNDN);
  return mpfr_lessequal_p(d.get(), t.get()) != 0;
}

inline bool less_than(const Real& value, const std::string& limit) {
  Real l(value.precision());
  mpfr_set_str(l.get(), limit.c_str(), 10, MPFR_RNDN);
  return mpfr_less_p(value.get(), l.get()) != 0;
}

}  // namespace vpvxy::testing
