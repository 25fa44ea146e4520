#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ngcd/counters.hpp"

namespace ngcd {

/// Non-negative integer-like operand: anything offering remainder,
/// subtraction, shifts, a low-bit parity probe and ordering. Satisfied by
/// the built-in unsigned types and by ngcd::Natural.
template <typename T>
concept Operand = std::constructible_from<T, unsigned> && requires(const T& a, const T& b) {
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { a % b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a >> 1u } -> std::convertible_to<T>;
  { a << 1u } -> std::convertible_to<T>;
  { (a & 1u) == 0u } -> std::convertible_to<bool>;
};

template <Operand T>
bool is_zero(const T& x) {
  return x == T(0u);
}

template <Operand T>
bool is_even(const T& x) {
  return (x & 1u) == 0u;
}

namespace detail {

struct PivotScan {
  std::optional<std::size_t> pivot;  // least non-zero element, lowest index on ties
  std::size_t nonzero = 0;
};

// One pass over the list; order comparisons are tallied into c when given.
template <Operand T>
PivotScan scan_pivot(const std::vector<T>& xs, OpCounters* c = nullptr) {
  PivotScan s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (is_zero(xs[i])) continue;
    ++s.nonzero;
    if (!s.pivot) {
      s.pivot = i;
    } else {
      if (c) ++c->comparisons;
      if (xs[i] < xs[*s.pivot]) s.pivot = i;
    }
  }
  return s;
}

template <Operand T>
void check_pivot(const std::vector<T>& xs, std::size_t pivot, const char* op) {
  if (pivot >= xs.size())
    throw std::invalid_argument(std::string(op) + ": pivot index out of range");
  if (is_zero(xs[pivot]))
    throw std::invalid_argument(std::string(op) + ": pivot value is zero");
}

template <Operand T>
void mod_reduce_inplace(std::vector<T>& xs, std::size_t pivot, OpCounters* c = nullptr) {
  const T p = xs[pivot];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == pivot) continue;
    xs[i] = T(xs[i] % p);
    if (c) ++c->mods;
  }
}

template <Operand T>
void subtract_inplace(std::vector<T>& xs, std::size_t pivot, OpCounters* c = nullptr) {
  const T p = xs[pivot];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == pivot || is_zero(xs[i])) continue;
    xs[i] = T(xs[i] - p);
    if (c) ++c->subtractions;
  }
}

template <Operand T>
void halve_all_inplace(std::vector<T>& xs, OpCounters* c = nullptr) {
  for (auto& x : xs) {
    x = T(x >> 1u);
    if (c) ++c->halvings;
  }
}

}  // namespace detail

/// Index of the minimal non-zero element (lowest index on ties);
/// nullopt iff every element is zero.
template <Operand T>
std::optional<std::size_t> least_nonzero_pivot(const std::vector<T>& xs) {
  return detail::scan_pivot(xs).pivot;
}

/// Replaces every element but the pivot with its residue mod the pivot
/// value. The pivot must be the least non-zero element for the step to
/// preserve the list GCD; a zero pivot is rejected.
template <Operand T>
std::vector<T> mod_reduce_step(std::vector<T> xs, std::size_t pivot) {
  detail::check_pivot(xs, pivot, "mod_reduce_step");
  detail::mod_reduce_inplace(xs, pivot);
  return xs;
}

/// Halves every element and reports the exponent increment (always 1) the
/// caller accumulates onto p. Rejects lists containing any odd element;
/// an all-zero list is all-even and passes.
template <Operand T>
std::pair<std::vector<T>, unsigned> halve_all_step(std::vector<T> xs) {
  for (const auto& x : xs) {
    if (!is_even(x)) throw std::invalid_argument("halve_all_step: odd element");
  }
  detail::halve_all_inplace(xs);
  return {std::move(xs), 1u};
}

/// Halves one even, non-zero value. Zero is rejected (the halving loop it
/// feeds would never terminate), as is an odd input.
template <Operand T>
T halve_one_step(const T& x) {
  if (is_zero(x)) throw std::invalid_argument("halve_one_step: zero");
  if (!is_even(x)) throw std::invalid_argument("halve_one_step: odd value");
  return T(x >> 1u);
}

/// Subtracts the pivot value from every other non-zero element; zero
/// elements stay zero. The pivot must be minimal among non-zero elements;
/// a zero pivot is rejected.
template <Operand T>
std::vector<T> subtract_step(std::vector<T> xs, std::size_t pivot) {
  detail::check_pivot(xs, pivot, "subtract_step");
  detail::subtract_inplace(xs, pivot);
  return xs;
}

}  // namespace ngcd
