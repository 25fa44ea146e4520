#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ngcd/counters.hpp"
#include "ngcd/steps.hpp"
#include "ngcd/trace.hpp"

namespace ngcd {

template <Operand T>
struct GcdResult {
  T gcd{0u};
  OpCounters counters{};
  std::optional<Trace<T>> trace{};
};

enum class TraceMode { off, on };

/// Euclidean pair GCD: (a, b) -> (b, a mod b) until b is zero.
/// gcd_pair(a, 0) == a and gcd_pair(0, 0) == 0. One mods tick per residue.
template <Operand T>
T gcd_pair(T a, T b, OpCounters* c = nullptr) {
  while (!is_zero(b)) {
    T r = T(a % b);
    if (c) ++c->mods;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Binary (Stein) pair GCD: parity tests, halvings, subtraction and
/// comparisons only, no general remainder.
template <Operand T>
T gcd_pair_binary(T a, T b, OpCounters* c = nullptr) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  unsigned shift = 0;
  while (is_even(a) && is_even(b)) {
    a = T(a >> 1u);
    b = T(b >> 1u);
    ++shift;
    if (c) c->halvings += 2;
  }
  while (is_even(a)) {
    a = T(a >> 1u);
    if (c) ++c->halvings;
  }
  // a stays odd from here on.
  for (;;) {
    while (is_even(b)) {
      b = T(b >> 1u);
      if (c) ++c->halvings;
    }
    if (c) ++c->comparisons;
    if (b < a) std::swap(a, b);
    b = T(b - a);
    if (c) ++c->subtractions;
    if (is_zero(b)) break;
  }
  return T(a << shift);
}

/// Left-to-right fold of a pairwise GCD over the list. pair_fn must have the
/// shape T(T, T, OpCounters*); its internal operations land in the result's
/// counters, and each invocation counts as one outer iteration.
///
/// When tracing, each fold step records the working list with the running
/// GCD in slot 0 and consumed slots zeroed, under event_kind (mod-reduce
/// fits a Euclid pair, subtract a binary pair).
template <Operand T, typename PairFn>
GcdResult<T> fold_gcd(const std::vector<T>& xs, PairFn&& pair_fn,
                      TraceMode tm = TraceMode::off,
                      StepKind event_kind = StepKind::mod_reduce) {
  if (xs.empty()) throw std::invalid_argument("fold_gcd: empty input");
  GcdResult<T> res;
  const bool tracing = tm == TraceMode::on;
  Trace<T> trace;

  T g = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    g = pair_fn(g, xs[i], &res.counters);
    ++res.counters.outer_iterations;
    if (tracing) {
      std::vector<T> state(xs.size(), T(0u));
      state[0] = g;
      for (std::size_t j = i + 1; j < xs.size(); ++j) state[j] = xs[j];
      trace.push_back({event_kind, std::move(state), 0u, g});
    }
  }
  res.gcd = g;
  if (tracing) {
    std::vector<T> state(xs.size(), T(0u));
    state[0] = g;
    trace.push_back({StepKind::terminate, std::move(state), 0u, g});
    res.trace = std::move(trace);
  }
  return res;
}

template <Operand T>
GcdResult<T> fold_gcd_euclid(const std::vector<T>& xs, TraceMode tm = TraceMode::off) {
  return fold_gcd(
      xs, [](T a, T b, OpCounters* c) { return gcd_pair(std::move(a), std::move(b), c); }, tm,
      StepKind::mod_reduce);
}

template <Operand T>
GcdResult<T> fold_gcd_binary(const std::vector<T>& xs, TraceMode tm = TraceMode::off) {
  return fold_gcd(
      xs, [](T a, T b, OpCounters* c) { return gcd_pair_binary(std::move(a), std::move(b), c); },
      tm, StepKind::subtract);
}

/// n-way Euclidean reduction. Each round picks the least non-zero element
/// as pivot and replaces every other element by its residue mod the pivot;
/// the run ends when at most one non-zero element survives. All-zero input
/// yields 0; a single non-zero survivor is the GCD.
template <Operand T>
GcdResult<T> gcd_n(const std::vector<T>& xs, TraceMode tm = TraceMode::off) {
  if (xs.empty()) throw std::invalid_argument("gcd_n: empty input");
  GcdResult<T> res;
  const bool tracing = tm == TraceMode::on;
  Trace<T> trace;

  std::vector<T> st = xs;
  for (;;) {
    auto scan = detail::scan_pivot(st, &res.counters);
    if (!scan.pivot) {
      if (tracing) trace.push_back({StepKind::terminate, st, 0u, std::nullopt});
      res.gcd = T(0u);
      break;
    }
    const std::size_t piv = *scan.pivot;
    if (tracing)
      trace.push_back({StepKind::pivot_select, detail::presented(st, piv), 0u, st[piv]});
    if (scan.nonzero == 1) {
      if (tracing)
        trace.push_back({StepKind::terminate, detail::presented(st, piv), 0u, st[piv]});
      res.gcd = st[piv];
      break;
    }
    detail::mod_reduce_inplace(st, piv, &res.counters);
    ++res.counters.outer_iterations;
    if (tracing)
      trace.push_back({StepKind::mod_reduce, detail::presented(st, piv), 0u, st[piv]});
  }
  if (tracing) res.trace = std::move(trace);
  return res;
}

/// n-way binary GCD: only halvings, subtractions, parity tests and
/// comparisons. Factors of two common to the whole list are stripped first
/// and accumulated in p; each following round drives every non-zero element
/// odd, then subtracts the least non-zero element from the others. The
/// result is the surviving element times 2^p. All-zero input yields 0
/// directly (the common-halving loop would otherwise never exit).
template <Operand T>
GcdResult<T> binary_gcd_n(const std::vector<T>& xs, TraceMode tm = TraceMode::off) {
  if (xs.empty()) throw std::invalid_argument("binary_gcd_n: empty input");
  GcdResult<T> res;
  const bool tracing = tm == TraceMode::on;
  Trace<T> trace;

  std::vector<T> st = xs;
  if (std::all_of(st.begin(), st.end(), [](const T& x) { return is_zero(x); })) {
    if (tracing) {
      trace.push_back({StepKind::terminate, st, 0u, std::nullopt});
      res.trace = std::move(trace);
    }
    res.gcd = T(0u);
    return res;
  }

  unsigned p = 0;
  while (std::all_of(st.begin(), st.end(), [](const T& x) { return is_even(x); })) {
    detail::halve_all_inplace(st, &res.counters);
    ++p;
    if (tracing) trace.push_back({StepKind::halve_all, st, p, std::nullopt});
  }

  std::optional<std::size_t> current_pivot;
  for (;;) {
    std::size_t nonzero = 0, survivor = 0;
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (!is_zero(st[i])) {
        ++nonzero;
        survivor = i;
      }
    }
    if (nonzero == 1) {
      res.gcd = T(st[survivor] << p);
      if (tracing)
        trace.push_back({StepKind::terminate, detail::presented(st, survivor), p, st[survivor]});
      break;
    }

    // Drive every non-zero element odd; zeros are skipped (halving zero
    // would never reach an odd value).
    for (std::size_t i = 0; i < st.size(); ++i) {
      while (!is_zero(st[i]) && is_even(st[i])) {
        st[i] = T(st[i] >> 1u);
        ++res.counters.halvings;
        if (tracing) {
          auto pv = current_pivot ? std::optional<T>(st[*current_pivot]) : std::nullopt;
          trace.push_back({StepKind::halve_one, detail::presented(st, current_pivot), p, pv});
        }
      }
    }

    auto scan = detail::scan_pivot(st, &res.counters);
    const std::size_t piv = *scan.pivot;  // nonzero >= 2, so a pivot exists
    current_pivot = piv;
    if (tracing)
      trace.push_back({StepKind::pivot_select, detail::presented(st, piv), p, st[piv]});

    detail::subtract_inplace(st, piv, &res.counters);
    ++res.counters.outer_iterations;
    if (tracing)
      trace.push_back({StepKind::subtract, detail::presented(st, piv), p, st[piv]});
  }
  if (tracing) res.trace = std::move(trace);
  return res;
}

}  // namespace ngcd
