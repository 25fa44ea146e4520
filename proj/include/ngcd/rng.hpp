#pragma once

#include <bit>
#include <cstdint>

#include "ngcd/natural.hpp"

namespace ngcd {

/// SplitMix64 (Steele, Lea & Flood's published constants). Chosen over the
/// standard-library engines because its output sequence has a one-line,
/// platform-independent specification: identical seeds give identical
/// streams everywhere, which the benchmark reproducibility contract needs.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by masked rejection; bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ull >> std::countl_zero(bound - 1);
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  /// Uniform in [0, 2^nbits).
  Natural bits(unsigned nbits) {
    Natural v(0);
    unsigned produced = 0;
    while (produced < nbits) {
      unsigned take = nbits - produced < 64 ? nbits - produced : 64;
      std::uint64_t word = next();
      if (take < 64) word &= (1ull << take) - 1;
      v = (v << take) + Natural(word);
      produced += take;
    }
    return v;
  }

  /// Uniform in [2^(nbits-1), 2^nbits): exactly nbits wide. nbits >= 1.
  Natural bits_exact(unsigned nbits) {
    return (Natural(1) << (nbits - 1)) + bits(nbits - 1);
  }

private:
  std::uint64_t state_;
};

}  // namespace ngcd
