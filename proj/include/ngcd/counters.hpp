#pragma once

#include <cstdint>

namespace ngcd {

/// Operation tallies for one algorithm run.
///
/// Semantics, fixed so that cross-algorithm comparisons are well defined:
///  - mods:         one tick per residue computed (a % pivot, or one Euclid step);
///  - subtractions: one tick per elementwise subtraction;
///  - halvings:     one tick per single halving of one element
///                  (a whole-list halving sweep ticks n);
///  - comparisons:  one tick per order comparison between two elements
///                  (pivot scans, pair-GCD magnitude checks); zero and parity
///                  tests are not tallied;
///  - swaps:        physical exchanges; always 0 here, since reduction works
///                  against a pivot index and trace presentation is pivot-first;
///  - outer_iterations: reduction rounds (one pivot's mod sweep or one
///                  halve+subtract round), or pair-GCD invocations in a fold.
struct OpCounters {
  std::uint64_t mods = 0;
  std::uint64_t subtractions = 0;
  std::uint64_t halvings = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;
  std::uint64_t outer_iterations = 0;

  OpCounters& operator+=(const OpCounters& o) {
    mods += o.mods;
    subtractions += o.subtractions;
    halvings += o.halvings;
    comparisons += o.comparisons;
    swaps += o.swaps;
    outer_iterations += o.outer_iterations;
    return *this;
  }

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

}  // namespace ngcd
