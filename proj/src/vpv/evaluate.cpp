#include <numeric>

#include "kernel_common.hpp"
#include "vpvxy/errors.hpp"
#include "vpvxy/vpv.hpp"

namespace vpvxy {

namespace {

void require_precision(unsigned precision_bits) {
  if (precision_bits < 64) throw Error(ErrorKind::InvalidArgument, "precision_bits must be >= 64");
}

Rational closed_form_exponent(const Rational& x, Convention convention, ProductForm form) {
  Rational e = (convention == Convention::Axis ? Rational(1) : x) / (Rational(1) - x);
  return form == ProductForm::Reciprocal ? -e : e;
}

// Upper bound on a^(n) / (1 - a) for 0 <= a < 1.
Real geometric_tail_up(const Rational& a, std::uint64_t n, mpfr_prec_t prec) {
  Real num = Real::from_rational(a, prec, MPFR_RNDU);
  mpfr_pow_ui(num.get(), num.get(), n, MPFR_RNDU);
  const Real den = Real::from_rational(Rational(1) - a, prec, MPFR_RNDD);
  mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDU);
  return num;
}

}  // namespace

void require_unit_disc(const Rational& value, std::string_view name) {
  if (value.abs() >= Rational(1)) {
    throw Error(ErrorKind::DomainViolation, "|" + std::string(name) + "| must be < 1, got " +
                                                std::string(name) + "=" + value.to_string());
  }
}

Real closed_form_log(const Rational& x, const Rational& y, Convention convention, ProductForm form,
                     unsigned precision_bits) {
  require_unit_disc(x, "X");
  require_unit_disc(y, "Y");
  require_precision(precision_bits);
  const mpfr_prec_t work = precision_bits + 32;
  Real log_base = Real::from_rational(Rational(1) - y, work);
  mpfr_log(log_base.get(), log_base.get(), MPFR_RNDN);
  const Real e = Real::from_rational(closed_form_exponent(x, convention, form), work);
  mpfr_mul(log_base.get(), log_base.get(), e.get(), MPFR_RNDN);
  return log_base.rounded(precision_bits);
}

Real closed_form(const Rational& x, const Rational& y, Convention convention, ProductForm form,
                 unsigned precision_bits) {
  require_unit_disc(x, "X");
  require_unit_disc(y, "Y");
  require_precision(precision_bits);
  const Rational e = closed_form_exponent(x, convention, form);
  if (e.is_integer() && abs(e.num()) <= 1'000'000) {
    return Real::from_rational((Rational(1) - y).pow(e.num().get_si()), precision_bits);
  }
  Real log_value = closed_form_log(x, y, convention, form, precision_bits);
  Real out = log_value.rounded(precision_bits + 32);
  mpfr_exp(out.get(), out.get(), MPFR_RNDN);
  return out.rounded(precision_bits);
}

Real tail_bound(const Rational& x, const Rational& y, Truncation truncation, Convention convention,
                unsigned precision_bits) {
  require_unit_disc(x, "X");
  require_unit_disc(y, "Y");
  const mpfr_prec_t prec = precision_bits;
  const Rational ax = x.abs();
  const Rational ay = y.abs();

  // |X|^(Nj+1)/(1-|X|) * ln(1/(1-|Y|))
  Real bound = geometric_tail_up(ax, truncation.nj + 1, prec);
  Real log_term = Real::from_rational(Rational(1) - ay, prec, MPFR_RNDD);
  mpfr_log(log_term.get(), log_term.get(), MPFR_RNDD);
  mpfr_neg(log_term.get(), log_term.get(), MPFR_RNDU);
  mpfr_mul(bound.get(), bound.get(), log_term.get(), MPFR_RNDU);

  // |Y|^(Nk+1)/((Nk+1)(1-|Y|))
  Real y_tail = geometric_tail_up(ay, truncation.nk + 1, prec);
  mpfr_div_ui(y_tail.get(), y_tail.get(), truncation.nk + 1, MPFR_RNDU);

  // (|X|/(1-|X|)) * y_tail
  Real cross = geometric_tail_up(ax, 1, prec);
  mpfr_mul(cross.get(), cross.get(), y_tail.get(), MPFR_RNDU);
  mpfr_add(bound.get(), bound.get(), cross.get(), MPFR_RNDU);

  if (convention == Convention::Axis) mpfr_add(bound.get(), bound.get(), y_tail.get(), MPFR_RNDU);
  return bound;
}

Real precision_slack(unsigned precision_bits) {
  Real slack(64);
  mpfr_set_ui_2exp(slack.get(), 1, 16 - static_cast<long>(precision_bits), MPFR_RNDU);
  return slack;
}

bool EvalReport::within_bound() const {
  Real limit(tail_bound.precision());
  const Real slack = precision_slack(precision_bits);
  mpfr_add(limit.get(), tail_bound.get(), slack.get(), MPFR_RNDU);
  return mpfr_lessequal_p(abs_log_diff.get(), limit.get()) != 0;
}

EvalReport eval_product(const Rational& x, const Rational& y, const EvalOptions& options) {
  require_unit_disc(x, "X");
  require_unit_disc(y, "Y");
  require_precision(options.precision_bits);
  if (options.truncation.nj < 1 || options.truncation.nk < 1) {
    throw Error(ErrorKind::InvalidArgument, "truncation must be >= 1");
  }
  const unsigned bits = options.precision_bits;

  Real log_value = kernels::log_sum_parallel(x, y, options.truncation, options.convention,
                                             options.form, bits);
  Real product = log_value.rounded(bits + 32);
  mpfr_exp(product.get(), product.get(), MPFR_RNDN);

  Real cf_log = closed_form_log(x, y, options.convention, options.form, bits);
  Real diff(bits);
  mpfr_sub(diff.get(), log_value.get(), cf_log.get(), MPFR_RNDU);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);

  std::uint64_t points = options.convention == Convention::Axis ? 1 : 0;
  for (std::uint64_t j = 1; j <= options.truncation.nj; ++j) {
    for (std::uint64_t k = 1; k <= options.truncation.nk; ++k) points += std::gcd(j, k) == 1;
  }

  return EvalReport{
      product.rounded(bits),
      std::move(log_value),
      closed_form(x, y, options.convention, options.form, bits),
      std::move(cf_log),
      std::move(diff),
      tail_bound(x, y, options.truncation, options.convention, bits),
      options.truncation,
      bits,
      options.convention,
      options.form,
      points,
  };
}

Real log_series_oracle(const Rational& x, const Rational& y, std::uint64_t nj, std::uint64_t nk,
                       unsigned precision_bits) {
  require_unit_disc(x, "X");
  require_unit_disc(y, "Y");
  require_precision(precision_bits);
  const mpfr_prec_t work = precision_bits + 64;
  // The box sum factors: (sum_J X^J) * (sum_K Y^K / K).
  const Real xv = Real::from_rational(x, work);
  const Real yv = Real::from_rational(y, work);
  Real power(work, 1), sum_j(work), sum_k(work), t(work);
  for (std::uint64_t j = 1; j <= nj; ++j) {
    mpfr_mul(power.get(), power.get(), xv.get(), MPFR_RNDN);
    mpfr_add(sum_j.get(), sum_j.get(), power.get(), MPFR_RNDN);
  }
  mpfr_set_ui(power.get(), 1, MPFR_RNDN);
  for (std::uint64_t k = 1; k <= nk; ++k) {
    mpfr_mul(power.get(), power.get(), yv.get(), MPFR_RNDN);
    mpfr_div_ui(t.get(), power.get(), k, MPFR_RNDN);
    mpfr_add(sum_k.get(), sum_k.get(), t.get(), MPFR_RNDN);
  }
  mpfr_mul(t.get(), sum_j.get(), sum_k.get(), MPFR_RNDN);
  return t.rounded(precision_bits);
}

bool exact_regroup_check(const Rational& x, const Rational& y, std::uint64_t nj, std::uint64_t nk) {
  std::vector<Rational> xp{Rational(1)}, yp{Rational(1)};
  for (std::uint64_t i = 1; i <= nj; ++i) xp.push_back(xp.back() * x);
  for (std::uint64_t i = 1; i <= nk; ++i) yp.push_back(yp.back() * y);

  Rational regrouped;
  for (std::uint64_t j = 1; j <= nj; ++j) {
    for (std::uint64_t k = 1; k <= nk; ++k) {
      if (std::gcd(j, k) != 1) continue;
      // (1/k) * (X^j Y^k)^m / m = X^(jm) Y^(km) / (km)
      for (std::uint64_t m = 1; j * m <= nj && k * m <= nk; ++m) {
        regrouped += xp[j * m] * yp[k * m] / Rational(static_cast<long>(k * m));
      }
    }
  }

  Rational plain;
  for (std::uint64_t j = 1; j <= nj; ++j) {
    for (std::uint64_t k = 1; k <= nk; ++k) {
      plain += xp[j] * yp[k] / Rational(static_cast<long>(k));
    }
  }
  return regrouped == plain;
}

}  // namespace vpvxy
