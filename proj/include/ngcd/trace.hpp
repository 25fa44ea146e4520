#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace ngcd {

enum class StepKind {
  pivot_select,
  mod_reduce,
  halve_all,
  halve_one,
  subtract,
  terminate,
};

constexpr std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::pivot_select: return "pivot-select";
    case StepKind::mod_reduce: return "mod-reduce";
    case StepKind::halve_all: return "halve-all";
    case StepKind::halve_one: return "halve-one";
    case StepKind::subtract: return "subtract";
    case StepKind::terminate: return "terminate";
  }
  return "?";
}

/// One reduction step. state_after is the canonical presentation of the
/// working list: the pivot in effect first, the remaining elements in index
/// order (plain index order while no pivot is selected). power_of_two is the
/// accumulated exponent p; it stays 0 outside the binary algorithm.
///
/// A trace always ends with a terminate event whose state holds at most one
/// non-zero element; the run's result is that element (the event's pivot)
/// times 2^power_of_two.
template <typename T>
struct TraceEvent {
  StepKind kind;
  std::vector<T> state_after;
  unsigned power_of_two = 0;
  std::optional<T> pivot{};

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

template <typename T>
using Trace = std::vector<TraceEvent<T>>;

namespace detail {

// Pivot-first presentation of a working list.
template <typename T>
std::vector<T> presented(const std::vector<T>& xs, std::optional<std::size_t> pivot) {
  if (!pivot) return xs;
  std::vector<T> out;
  out.reserve(xs.size());
  out.push_back(xs[*pivot]);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != *pivot) out.push_back(xs[i]);
  }
  return out;
}

}  // namespace detail
}  // namespace ngcd
