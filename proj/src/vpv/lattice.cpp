#include <numeric>

#include "vpvxy/errors.hpp"
#include "vpvxy/vpv.hpp"

namespace vpvxy {

std::string_view to_string(Convention c) { return c == Convention::Axis ? "axis" : "strict"; }

std::string_view to_string(ProductForm f) {
  return f == ProductForm::Direct ? "direct" : "reciprocal";
}

Convention parse_convention(std::string_view text) {
  if (text == "axis") return Convention::Axis;
  if (text == "strict") return Convention::Strict;
  throw Error(ErrorKind::ParseError, "convention must be 'axis' or 'strict', got '" +
                                         std::string(text) + "'");
}

ProductForm parse_form(std::string_view text) {
  if (text == "direct") return ProductForm::Direct;
  if (text == "reciprocal") return ProductForm::Reciprocal;
  throw Error(ErrorKind::ParseError, "form must be 'direct' or 'reciprocal', got '" +
                                         std::string(text) + "'");
}

std::vector<LatticePoint> visible_points(std::uint64_t nj, std::uint64_t nk,
                                         Convention convention) {
  if (nj < 1 || nk < 1) throw Error(ErrorKind::InvalidArgument, "truncation must be >= 1");
  std::vector<LatticePoint> out;
  if (convention == Convention::Axis) out.push_back({0, 1});
  for (std::uint64_t j = 1; j <= nj; ++j) {
    for (std::uint64_t k = 1; k <= nk; ++k) {
      if (std::gcd(j, k) == 1) out.push_back({j, k});
    }
  }
  return out;
}

std::uint64_t count_visible(std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "N must be >= 1");
  // Linear sieve for the Moebius function.
  std::vector<int> mu(n + 1, 0);
  std::vector<std::uint64_t> primes;
  std::vector<bool> composite(n + 1, false);
  mu[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::uint64_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    const auto q = static_cast<std::int64_t>(n / d);
    total += mu[d] * q * q;
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace vpvxy
