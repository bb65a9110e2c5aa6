#include "vpvxy/exact/prime_power.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "vpvxy/errors.hpp"
#include "vpvxy/exact/factorize.hpp"

namespace vpvxy {

namespace {

enum class LogBase { natural, ten };

// Enclosure of log(p): one correctly rounded evaluation widened by an ulp each way.
Interval log_prime_uncached(const BigInt& p, mpfr_prec_t precision, LogBase base) {
  Interval iv(precision);
  Real t(std::max<mpfr_prec_t>(precision, static_cast<mpfr_prec_t>(mpz_sizeinbase(p.get_mpz_t(), 2))));
  mpfr_set_z(t.get(), p.get_mpz_t(), MPFR_RNDN);
  if (base == LogBase::ten) {
    mpfr_log10(iv.lo.get(), t.get(), MPFR_RNDN);
  } else {
    mpfr_log(iv.lo.get(), t.get(), MPFR_RNDN);
  }
  mpfr_set(iv.hi.get(), iv.lo.get(), MPFR_RNDN);
  mpfr_nextbelow(iv.lo.get());
  mpfr_nextabove(iv.hi.get());
  return iv;
}

const Interval& log_prime(const BigInt& p, mpfr_prec_t precision, LogBase base) {
  // Keyed by (prime, precision, base); primes above 2^32 are not cached.
  thread_local std::unordered_map<std::uint64_t, Interval> cache;
  thread_local Interval scratch(64);
  if (!mpz_fits_uint_p(p.get_mpz_t()) || precision >= (1 << 23)) {
    scratch = log_prime_uncached(p, precision, base);
    return scratch;
  }
  const std::uint64_t key = (static_cast<std::uint64_t>(p.get_ui()) << 24) |
                            (static_cast<std::uint64_t>(precision) << 1) |
                            (base == LogBase::ten ? 1u : 0u);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, log_prime_uncached(p, precision, base)).first;
  return it->second;
}

Interval weighted_log(const PrimePowerProduct& u, mpfr_prec_t precision, LogBase base) {
  Interval sum = Interval::point(Rational(0), precision);
  for (const auto& f : u.factors()) {
    sum = sum + scale(log_prime(f.prime, precision, base), f.exponent);
  }
  return sum;
}

}  // namespace

PrimePowerProduct PrimePowerProduct::from_factors(std::vector<PrimeFactor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimeFactor& a, const PrimeFactor& b) { return a.prime < b.prime; });
  PrimePowerProduct out;
  for (auto& f : factors) {
    if (!is_prime(f.prime)) {
      throw Error(ErrorKind::InvalidArgument, f.prime.get_str() + " is not prime");
    }
    if (!out.factors_.empty() && out.factors_.back().prime == f.prime) {
      out.factors_.back().exponent += f.exponent;
    } else {
      out.factors_.push_back(std::move(f));
    }
  }
  std::erase_if(out.factors_, [](const PrimeFactor& f) { return f.exponent.is_zero(); });
  return out;
}

PrimePowerProduct PrimePowerProduct::from_rational(const Rational& q) {
  if (q.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveInput, "prime-power form needs a positive value, got " +
                                                 q.to_string());
  }
  PrimePowerProduct out;
  const Factorization num = factorize(q.num());
  const Factorization den = factorize(q.den());
  // Numerator and denominator are coprime, so a two-way merge keeps order.
  auto n = num.begin();
  auto d = den.begin();
  while (n != num.end() || d != den.end()) {
    if (d == den.end() || (n != num.end() && n->prime < d->prime)) {
      out.factors_.push_back({n->prime, Rational(static_cast<long>(n->exponent))});
      ++n;
    } else {
      out.factors_.push_back({d->prime, Rational(-static_cast<long>(d->exponent))});
      ++d;
    }
  }
  return out;
}

Rational PrimePowerProduct::exponent_of(const BigInt& prime) const {
  for (const auto& f : factors_) {
    if (f.prime == prime) return f.exponent;
  }
  return Rational(0);
}

bool PrimePowerProduct::is_rational() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimeFactor& f) { return f.exponent.is_integer(); });
}

bool PrimePowerProduct::is_integer() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimeFactor& f) {
    return f.exponent.is_integer() && f.exponent.sign() > 0;
  });
}

Rational PrimePowerProduct::to_rational() const {
  if (!is_rational()) {
    throw Error(ErrorKind::NonIntegralExponent, to_string() + " is not rational");
  }
  BigInt num = 1, den = 1, t;
  for (const auto& f : factors_) {
    const BigInt e = f.exponent.num();
    mpz_pow_ui(t.get_mpz_t(), f.prime.get_mpz_t(), BigInt(abs(e)).get_ui());
    if (e > 0) {
      num *= t;
    } else {
      den *= t;
    }
  }
  return Rational(num, den);
}

BigInt PrimePowerProduct::to_integer() const {
  if (!is_integer()) {
    throw Error(ErrorKind::NonIntegerValue, to_string() + " is not a positive integer");
  }
  return to_rational().num();
}

std::string PrimePowerProduct::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " * ";
    out += f.prime.get_str();
    if (f.exponent.is_one()) continue;
    if (f.exponent.is_integer() && f.exponent.sign() > 0) {
      out += "^" + f.exponent.to_string();
    } else {
      out += "^(" + f.exponent.to_string() + ")";
    }
  }
  return out;
}

std::string PrimePowerProduct::to_display_string() const {
  return is_rational() ? to_rational().to_string() : to_string();
}

PrimePowerProduct operator*(const PrimePowerProduct& u, const PrimePowerProduct& v) {
  PrimePowerProduct out;
  auto a = u.factors_.begin();
  auto b = v.factors_.begin();
  while (a != u.factors_.end() || b != v.factors_.end()) {
    if (b == v.factors_.end() || (a != u.factors_.end() && a->prime < b->prime)) {
      out.factors_.push_back(*a++);
    } else if (a == u.factors_.end() || b->prime < a->prime) {
      out.factors_.push_back(*b++);
    } else {
      Rational e = a->exponent + b->exponent;
      if (!e.is_zero()) out.factors_.push_back({a->prime, std::move(e)});
      ++a;
      ++b;
    }
  }
  return out;
}

PrimePowerProduct pow(const PrimePowerProduct& u, const Rational& r) {
  PrimePowerProduct out;
  if (r.is_zero()) return out;
  out.factors_.reserve(u.factors_.size());
  for (const auto& f : u.factors_) out.factors_.push_back({f.prime, f.exponent * r});
  return out;
}

Interval ln_interval(const PrimePowerProduct& u, unsigned precision_bits) {
  return weighted_log(u, precision_bits, LogBase::natural);
}

Interval log10_interval(const PrimePowerProduct& u, unsigned precision_bits) {
  if (precision_bits < 64) throw Error(ErrorKind::InvalidArgument, "precision_bits must be >= 64");
  return weighted_log(u, precision_bits, LogBase::ten);
}

unsigned long digit_count(const PrimePowerProduct& u) {
  if (!u.is_integer()) {
    throw Error(ErrorKind::NonIntegerValue, u.to_string() + " is not a positive integer");
  }
  if (u.is_one()) return 1;
  for (unsigned bits = 256; bits <= 8192; bits *= 2) {
    const Interval iv = log10_interval(u, bits);
    BigInt lo, hi;
    mpfr_get_z(lo.get_mpz_t(), iv.lo.get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), iv.hi.get(), MPFR_RNDD);
    if (lo == hi) return lo.get_ui() + 1;
  }
  // The enclosure keeps straddling an integer: the value is (very nearly) a power of ten.
  return u.to_integer().get_str(10).size();
}

LeadingDigits leading_digits(const PrimePowerProduct& u, int significant_digits) {
  LeadingDigits out;
  out.exponent = digit_count(u) - 1;
  const mpfr_prec_t bits = 256;
  const Interval iv = log10_interval(u, bits);
  Real frac = iv.midpoint();
  mpfr_sub_ui(frac.get(), frac.get(), out.exponent, MPFR_RNDN);
  Real mantissa(bits);
  mpfr_exp10(mantissa.get(), frac.get(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", std::max(significant_digits - 1, 0), mantissa.get());
  out.mantissa = buf;
  mpfr_free_str(buf);
  return out;
}

}  // namespace vpvxy
