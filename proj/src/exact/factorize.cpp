#include "vpvxy/exact/factorize.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "vpvxy/errors.hpp"

namespace vpvxy {

namespace {

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialDivisionLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Deterministic for all n < 2^64 with the first twelve prime bases.
bool miller_rabin_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's cycle-finding Pollard rho. Returns a non-trivial factor of composite n.
BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1, t;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          t = abs(x - y);
          q = q * t;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batched gcd overshot; back up one step at a time.
      do {
        step(ys);
        t = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(const BigInt& n, std::map<BigInt, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n);
  split_large(d, out);
  split_large(BigInt(n / d), out);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    const unsigned long v = n.get_ui();
    if (v <= kTrialDivisionLimit) {
      const auto& primes = small_primes();
      return std::binary_search(primes.begin(), primes.end(), static_cast<std::uint32_t>(v));
    }
    return miller_rabin_u64(v);
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Factorization factorize(const BigInt& m) {
  if (m < 1) throw Error(ErrorKind::NonPositiveInput, "factorize requires m >= 1");
  Factorization out;
  BigInt rest = m;

  if (mpz_fits_ulong_p(m.get_mpz_t())) {
    unsigned long n = m.get_ui();
    bool exhausted = true;
    for (std::uint32_t p : small_primes()) {
      if (static_cast<unsigned __int128>(p) * p > n) {
        exhausted = false;
        break;
      }
      if (n % p != 0) continue;
      unsigned long e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({BigInt(p), e});
    }
    if (n == 1) return out;
    if (!exhausted) {
      out.push_back({BigInt(n), 1});
      return out;
    }
    rest = n;
  } else {
    for (std::uint32_t p : small_primes()) {
      if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
      unsigned long e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      out.push_back({BigInt(p), e});
    }
  }

  std::map<BigInt, unsigned long> large;
  split_large(rest, large);
  for (auto& [p, e] : large) out.push_back({p, e});
  return out;
}

BigInt expand(const Factorization& factors) {
  BigInt result = 1, t;
  for (const auto& f : factors) {
    mpz_pow_ui(t.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    result *= t;
  }
  return result;
}

}  // namespace vpvxy
