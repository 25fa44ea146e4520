#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ngcd/natural.hpp"

namespace ngcd {

/// Ground-truth GCD computations for tests and the CLI verify mode. Both
/// oracles are deliberately simpler than the algorithms they check, and
/// bounded: factorization works by plain trial division on values that fit
/// in 64 bits, the brute-force search scans divisors downward from the
/// smallest non-zero element (capped at 10^6).

/// Prime factorization, primes ascending, exponents >= 1. Empty for 1.
struct Factorization {
  std::map<std::uint64_t, unsigned> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr std::uint64_t kBruteforceScanBound = 1'000'000;

/// Trial division. Rejects 0 (no factorization exists) with
/// std::invalid_argument and values above 64 bits with std::out_of_range.
inline Factorization factorize(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("factorize: 0 has no prime factorization");
  Factorization f;
  for (std::uint64_t d = 2; d <= x / d; d += (d == 2 ? 1 : 2)) {
    while (x % d == 0) {
      ++f.factors[d];
      x /= d;
    }
  }
  if (x > 1) ++f.factors[x];
  return f;
}

inline Factorization factorize(const Natural& x) {
  if (x.is_zero()) throw std::invalid_argument("factorize: 0 has no prime factorization");
  std::uint64_t v;
  try {
    v = x.to_uint64();
  } catch (const std::overflow_error&) {
    throw std::out_of_range("factorize: value above the 64-bit oracle bound");
  }
  return factorize(v);
}

/// GCD as the product over primes of p^(minimum exponent across the
/// non-zero inputs). Zeros are dropped first; an all-zero list yields 0.
inline Natural oracle_gcd_factorization(const std::vector<Natural>& xs) {
  Factorization acc;
  bool first = true;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    Factorization f = factorize(x);
    if (first) {
      acc = std::move(f);
      first = false;
      continue;
    }
    for (auto it = acc.factors.begin(); it != acc.factors.end();) {
      auto found = f.factors.find(it->first);
      unsigned m = found == f.factors.end() ? 0u : std::min(it->second, found->second);
      if (m == 0) {
        it = acc.factors.erase(it);
      } else {
        it->second = m;
        ++it;
      }
    }
  }
  if (first) return Natural(0);
  std::uint64_t g = 1;  // divides the first non-zero input, so it fits
  for (auto [p, e] : acc.factors) {
    for (unsigned i = 0; i < e; ++i) g *= p;
  }
  return Natural(g);
}

/// GCD as the largest m >= 1 dividing every non-zero element, found by a
/// descending scan from the smallest non-zero element. That element must
/// not exceed 10^6 (std::out_of_range otherwise); an all-zero list yields 0.
inline Natural oracle_gcd_bruteforce(const std::vector<Natural>& xs) {
  const Natural* smallest = nullptr;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    if (!smallest || x < *smallest) smallest = &x;
  }
  if (!smallest) return Natural(0);
  if (*smallest > Natural(kBruteforceScanBound))
    throw std::out_of_range("oracle_gcd_bruteforce: smallest non-zero element above 10^6");
  for (std::uint64_t m = smallest->to_uint64(); m >= 1; --m) {
    bool divides_all = true;
    for (const auto& x : xs) {
      if (x.is_zero()) continue;
      if (x.value() % m != 0) {
        divides_all = false;
        break;
      }
    }
    if (divides_all) return Natural(m);
  }
  return Natural(1);  // unreachable: m == 1 divides everything
}

}  // namespace ngcd
