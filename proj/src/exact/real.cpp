#include "vpvxy/exact/real.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace vpvxy {

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(mpfr_prec_t precision, long value) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_rational(const Rational& q, mpfr_prec_t precision, mpfr_rnd_t rnd) {
  Real r(precision);
  mpfr_set_q(r.value_, q.mpq().get_mpq_t(), rnd);
  return r;
}

Real Real::rounded(mpfr_prec_t precision, mpfr_rnd_t rnd) const {
  Real r(precision);
  mpfr_set(r.value_, value_, rnd);
  return r;
}

std::string Real::to_scientific(int digits) const {
  if (digits <= 0) {
    digits = static_cast<int>(std::floor(static_cast<double>(precision()) * 0.30102999566398));
    if (digits < 1) digits = 1;
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Real::to_hex() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Interval Interval::point(const Rational& q, mpfr_prec_t precision) {
  Interval iv(precision);
  mpfr_set_q(iv.lo.get(), q.mpq().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(iv.hi.get(), q.mpq().get_mpq_t(), MPFR_RNDU);
  return iv;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo.get()) <= 0 && mpfr_sgn(hi.get()) >= 0;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo.get(), q.mpq().get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi.get(), q.mpq().get_mpq_t()) >= 0;
}

Real Interval::width() const {
  Real w(precision());
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  return w;
}

Real Interval::midpoint() const {
  Real m(precision() + 1);
  mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.rounded(precision());
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(a.precision());
  mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(a.precision());
  mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
  mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = a.precision();
  Interval r(p);
  Real t(p);
  bool first = true;
  for (mpfr_srcptr x : {a.lo.get(), a.hi.get()}) {
    for (mpfr_srcptr y : {b.lo.get(), b.hi.get()}) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo.get())) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi.get())) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval scale(const Interval& a, const Rational& q) {
  Interval r(a.precision());
  const bool negative = q.sign() < 0;
  mpfr_mul_q(r.lo.get(), negative ? a.hi.get() : a.lo.get(), q.mpq().get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(r.hi.get(), negative ? a.lo.get() : a.hi.get(), q.mpq().get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& a) {
  Interval r(a.precision());
  mpfr_exp(r.lo.get(), a.lo.get(), MPFR_RNDD);
  mpfr_exp(r.hi.get(), a.hi.get(), MPFR_RNDU);
  return r;
}

}  // namespace vpvxy
