#pragma once

#include <vector>

#include "vpvxy/exact/rational.hpp"

namespace vpvxy {

struct PrimePower {
  BigInt prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Trial division bound; cofactors left over are handled by Pollard rho.
inline constexpr unsigned long kTrialDivisionLimit = 1'000'000;

/**
 * Complete factorization of m >= 1 into ascending primes.
 *
 * Trial division by primes up to 10^6, then a primality test and Brent's
 * variant of Pollard rho on any remaining composite cofactor. m = 1 yields
 * an empty list. Throws Error(NonPositiveInput) for m < 1.
 */
Factorization factorize(const BigInt& m);

/// Deterministic below 2^64; BPSW-strength probable prime above.
bool is_prime(const BigInt& n);

/// Multiplies a factorization back out.
BigInt expand(const Factorization& factors);

}  // namespace vpvxy
