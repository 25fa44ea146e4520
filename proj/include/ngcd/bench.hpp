#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ngcd/gcd.hpp"
#include "ngcd/natural.hpp"
#include "ngcd/rng.hpp"

namespace ngcd {

enum class AlgorithmId { gcd_n, binary_gcd_n, fold_euclid, fold_binary };

constexpr std::string_view to_string(AlgorithmId a) {
  switch (a) {
    case AlgorithmId::gcd_n: return "gcd-n";
    case AlgorithmId::binary_gcd_n: return "binary-gcd-n";
    case AlgorithmId::fold_euclid: return "fold-euclid";
    case AlgorithmId::fold_binary: return "fold-binary";
  }
  return "?";
}

inline std::optional<AlgorithmId> parse_algorithm(std::string_view s) {
  if (s == "gcd-n") return AlgorithmId::gcd_n;
  if (s == "binary-gcd-n") return AlgorithmId::binary_gcd_n;
  if (s == "fold-euclid") return AlgorithmId::fold_euclid;
  if (s == "fold-binary") return AlgorithmId::fold_binary;
  return std::nullopt;
}

enum class Distribution {
  uniform_random,
  common_factor,
  one_small_many_large,
  all_equal,
  adversarial_chain,
};

constexpr std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::uniform_random: return "uniform-random";
    case Distribution::common_factor: return "common-factor";
    case Distribution::one_small_many_large: return "one-small-many-large";
    case Distribution::all_equal: return "all-equal";
    case Distribution::adversarial_chain: return "adversarial-chain";
  }
  return "?";
}

inline std::optional<Distribution> parse_distribution(std::string_view s) {
  if (s == "uniform-random") return Distribution::uniform_random;
  if (s == "common-factor") return Distribution::common_factor;
  if (s == "one-small-many-large") return Distribution::one_small_many_large;
  if (s == "all-equal") return Distribution::all_equal;
  if (s == "adversarial-chain") return Distribution::adversarial_chain;
  return std::nullopt;
}

inline const std::vector<AlgorithmId>& all_algorithms() {
  static const std::vector<AlgorithmId> all = {
      AlgorithmId::gcd_n,
      AlgorithmId::binary_gcd_n,
      AlgorithmId::fold_euclid,
      AlgorithmId::fold_binary,
  };
  return all;
}

/// One measurement campaign. Identical configs generate identical inputs
/// and identical counters; only wall time varies between runs.
struct BenchConfig {
  std::uint64_t seed = 0;
  std::size_t n = 8;            // list length
  unsigned bits = 64;           // value bit-size
  Distribution distribution = Distribution::uniform_random;
  Natural common_factor{21};    // planted g for Distribution::common_factor
  std::size_t trials = 10;
  std::vector<AlgorithmId> algorithms = all_algorithms();

  void validate() const {
    if (trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
    if (n < 1) throw std::invalid_argument("bench: n must be >= 1");
    if (bits < 1) throw std::invalid_argument("bench: bits must be >= 1");
    if (algorithms.empty()) throw std::invalid_argument("bench: no algorithms selected");
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
      for (std::size_t j = i + 1; j < algorithms.size(); ++j) {
        if (algorithms[i] == algorithms[j])
          throw std::invalid_argument("bench: duplicate algorithm selected");
      }
    }
    if (distribution == Distribution::common_factor && common_factor.is_zero())
      throw std::invalid_argument("bench: common factor must be >= 1");
  }
};

/// Input lists for every trial, deterministic in cfg.seed.
///
/// Distributions:
///  - uniform-random: each element uniform in [0, 2^bits);
///  - common-factor: g times a non-zero uniform draw, so g divides every
///    element;
///  - one-small-many-large: one element (position drawn per trial) in
///    [1, 2^16), the rest exactly bits wide;
///  - all-equal: one draw from [0, 2^bits) repeated n times;
///  - adversarial-chain: n consecutive Fibonacci numbers starting at the
///    first one at least 2^(bits-1), scaled by a random factor below 2^16 —
///    neighbouring elements are maximally slow for a pairwise Euclid fold.
inline std::vector<std::vector<Natural>> generate_inputs(const BenchConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  std::vector<std::vector<Natural>> out;
  out.reserve(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    std::vector<Natural> xs;
    xs.reserve(cfg.n);
    switch (cfg.distribution) {
      case Distribution::uniform_random:
        for (std::size_t i = 0; i < cfg.n; ++i) xs.push_back(rng.bits(cfg.bits));
        break;
      case Distribution::common_factor:
        for (std::size_t i = 0; i < cfg.n; ++i) {
          Natural r;
          do {
            r = rng.bits(cfg.bits);
          } while (r.is_zero());
          xs.push_back(cfg.common_factor * r);
        }
        break;
      case Distribution::one_small_many_large: {
        const std::size_t small_at = rng.below(cfg.n);
        for (std::size_t i = 0; i < cfg.n; ++i) {
          if (i == small_at)
            xs.push_back(Natural(1 + rng.below(65535)));
          else
            xs.push_back(rng.bits_exact(cfg.bits));
        }
        break;
      }
      case Distribution::all_equal: {
        Natural v = rng.bits(cfg.bits);
        xs.assign(cfg.n, v);
        break;
      }
      case Distribution::adversarial_chain: {
        const Natural scale(1 + rng.below(65535));
        Natural lo(1), hi(1);
        const Natural bound = Natural(1) << (cfg.bits - 1);
        while (hi < bound) {
          Natural next = lo + hi;
          lo = std::move(hi);
          hi = std::move(next);
        }
        for (std::size_t i = 0; i < cfg.n; ++i) {
          xs.push_back(scale * lo);
          Natural next = lo + hi;
          lo = std::move(hi);
          hi = std::move(next);
        }
        break;
      }
    }
    out.push_back(std::move(xs));
  }
  return out;
}

inline GcdResult<Natural> run_algorithm(AlgorithmId id, const std::vector<Natural>& xs,
                                        TraceMode tm = TraceMode::off) {
  switch (id) {
    case AlgorithmId::gcd_n: return gcd_n(xs, tm);
    case AlgorithmId::binary_gcd_n: return binary_gcd_n(xs, tm);
    case AlgorithmId::fold_euclid: return fold_gcd_euclid(xs, tm);
    case AlgorithmId::fold_binary: return fold_gcd_binary(xs, tm);
  }
  throw std::logic_error("run_algorithm: unknown algorithm id");
}

/// Raised when the selected algorithms disagree on a trial's GCD. This is a
/// correctness alarm, not a benchmark result: the campaign aborts.
class GcdMismatchError : public std::runtime_error {
public:
  GcdMismatchError(std::vector<Natural> input,
                   std::vector<std::pair<AlgorithmId, Natural>> results)
      : std::runtime_error(compose(input, results)),
        input_(std::move(input)),
        results_(std::move(results)) {}

  const std::vector<Natural>& input() const noexcept { return input_; }
  const std::vector<std::pair<AlgorithmId, Natural>>& results() const noexcept {
    return results_;
  }

private:
  static std::string compose(const std::vector<Natural>& input,
                             const std::vector<std::pair<AlgorithmId, Natural>>& results) {
    std::ostringstream os;
    os << "GCD mismatch on input (";
    for (std::size_t i = 0; i < input.size(); ++i) os << (i ? ", " : "") << input[i];
    os << "):";
    for (const auto& [alg, g] : results) os << ' ' << to_string(alg) << '=' << g;
    return os.str();
  }

  std::vector<Natural> input_;
  std::vector<std::pair<AlgorithmId, Natural>> results_;
};

/// total/mean/median/max of one counter across trials. mean is carried in
/// thousandths, computed in integers, so reports reproduce byte-for-byte.
struct CounterSummary {
  std::uint64_t total = 0;
  std::uint64_t mean_milli = 0;
  std::uint64_t median = 0;  // lower median of the per-trial values
  std::uint64_t max = 0;

  friend bool operator==(const CounterSummary&, const CounterSummary&) = default;
};

inline std::string format_mean(std::uint64_t mean_milli) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%llu.%03llu",
                static_cast<unsigned long long>(mean_milli / 1000),
                static_cast<unsigned long long>(mean_milli % 1000));
  return buf;
}

struct AlgorithmReport {
  AlgorithmId alg = AlgorithmId::gcd_n;
  CounterSummary mods, subtractions, halvings, comparisons, swaps, outer_iterations;
  double mean_wall_ns = 0.0;  // excluded from the deterministic sections
};

struct BenchReport {
  BenchConfig config;
  std::vector<AlgorithmReport> per_algorithm;
};

namespace detail {

inline CounterSummary summarize(std::vector<std::uint64_t> per_trial) {
  CounterSummary s;
  for (auto v : per_trial) {
    s.total += v;
    s.max = std::max(s.max, v);
  }
  const auto trials = static_cast<std::uint64_t>(per_trial.size());
  s.mean_milli = (s.total * 1000 + trials / 2) / trials;
  std::sort(per_trial.begin(), per_trial.end());
  s.median = per_trial[(per_trial.size() - 1) / 2];
  return s;
}

}  // namespace detail

/// Runs every selected algorithm on every generated input, cross-checks the
/// GCDs per trial (throwing GcdMismatchError on disagreement) and aggregates
/// the counters. Counter sections are deterministic in the config.
inline BenchReport run_campaign(const BenchConfig& cfg) {
  cfg.validate();
  const auto inputs = generate_inputs(cfg);

  const std::size_t n_algs = cfg.algorithms.size();
  std::vector<std::vector<OpCounters>> counters(n_algs);
  std::vector<double> wall_ns(n_algs, 0.0);
  for (auto& c : counters) c.reserve(cfg.trials);

  for (const auto& xs : inputs) {
    std::vector<std::pair<AlgorithmId, Natural>> gcds;
    gcds.reserve(n_algs);
    for (std::size_t a = 0; a < n_algs; ++a) {
      const auto t0 = std::chrono::steady_clock::now();
      GcdResult<Natural> res = run_algorithm(cfg.algorithms[a], xs);
      const auto t1 = std::chrono::steady_clock::now();
      wall_ns[a] += std::chrono::duration<double, std::nano>(t1 - t0).count();
      counters[a].push_back(res.counters);
      gcds.emplace_back(cfg.algorithms[a], std::move(res.gcd));
    }
    for (std::size_t a = 1; a < n_algs; ++a) {
      if (!(gcds[a].second == gcds[0].second)) throw GcdMismatchError(xs, gcds);
    }
  }

  BenchReport report;
  report.config = cfg;
  for (std::size_t a = 0; a < n_algs; ++a) {
    AlgorithmReport ar;
    ar.alg = cfg.algorithms[a];
    auto field = [&](std::uint64_t OpCounters::* m) {
      std::vector<std::uint64_t> vals;
      vals.reserve(cfg.trials);
      for (const auto& c : counters[a]) vals.push_back(c.*m);
      return detail::summarize(std::move(vals));
    };
    ar.mods = field(&OpCounters::mods);
    ar.subtractions = field(&OpCounters::subtractions);
    ar.halvings = field(&OpCounters::halvings);
    ar.comparisons = field(&OpCounters::comparisons);
    ar.swaps = field(&OpCounters::swaps);
    ar.outer_iterations = field(&OpCounters::outer_iterations);
    ar.mean_wall_ns = wall_ns[a] / static_cast<double>(cfg.trials);
    report.per_algorithm.push_back(std::move(ar));
  }
  return report;
}

namespace detail {

inline const std::vector<std::pair<const char*, CounterSummary AlgorithmReport::*>>&
counter_fields() {
  static const std::vector<std::pair<const char*, CounterSummary AlgorithmReport::*>> fields = {
      {"mods", &AlgorithmReport::mods},
      {"subtractions", &AlgorithmReport::subtractions},
      {"halvings", &AlgorithmReport::halvings},
      {"comparisons", &AlgorithmReport::comparisons},
      {"swaps", &AlgorithmReport::swaps},
      {"outer_iterations", &AlgorithmReport::outer_iterations},
  };
  return fields;
}

}  // namespace detail

/// Machine-readable report: one JSON object per line. Lines of type
/// "counters" are deterministic in the config; the per-algorithm "timing"
/// lines carry wall time and are not.
inline std::string render_json_lines(const BenchReport& r) {
  using nlohmann::json;
  std::ostringstream os;

  json cfg;
  cfg["type"] = "config";
  cfg["seed"] = r.config.seed;
  cfg["n"] = r.config.n;
  cfg["bits"] = r.config.bits;
  cfg["dist"] = to_string(r.config.distribution);
  if (r.config.distribution == Distribution::common_factor)
    cfg["g"] = r.config.common_factor.str();
  cfg["trials"] = r.config.trials;
  json algs = json::array();
  for (auto a : r.config.algorithms) algs.push_back(to_string(a));
  cfg["algs"] = algs;
  os << cfg.dump() << '\n';

  for (const auto& ar : r.per_algorithm) {
    json line;
    line["type"] = "counters";
    line["alg"] = to_string(ar.alg);
    json fields;
    for (const auto& [name, member] : detail::counter_fields()) {
      const CounterSummary& s = ar.*member;
      fields[name] = {{"total", s.total},
                      {"mean", format_mean(s.mean_milli)},
                      {"median", s.median},
                      {"max", s.max}};
    }
    line["counters"] = fields;
    os << line.dump() << '\n';
  }
  for (const auto& ar : r.per_algorithm) {
    json line;
    line["type"] = "timing";
    line["alg"] = to_string(ar.alg);
    line["mean_wall_ns"] = ar.mean_wall_ns;
    os << line.dump() << '\n';
  }
  os << R"({"agreement":true,"type":"summary"})" << '\n';
  return os.str();
}

/// Human-readable table.
inline std::string render_table(const BenchReport& r) {
  std::ostringstream os;
  os << "campaign: dist=" << to_string(r.config.distribution) << " n=" << r.config.n
     << " bits=" << r.config.bits << " trials=" << r.config.trials
     << " seed=" << r.config.seed;
  if (r.config.distribution == Distribution::common_factor)
    os << " g=" << r.config.common_factor;
  os << "\n\n";

  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  os << pad("algorithm", 14) << pad("counter", 18) << pad("total", 14) << pad("mean", 14)
     << pad("median", 12) << "max\n";
  for (const auto& ar : r.per_algorithm) {
    for (const auto& [name, member] : detail::counter_fields()) {
      const CounterSummary& s = ar.*member;
      os << pad(std::string(to_string(ar.alg)), 14) << pad(name, 18)
         << pad(std::to_string(s.total), 14) << pad(format_mean(s.mean_milli), 14)
         << pad(std::to_string(s.median), 12) << s.max << '\n';
    }
    char wall[64];
    std::snprintf(wall, sizeof(wall), "%.1f", ar.mean_wall_ns / 1000.0);
    os << pad(std::string(to_string(ar.alg)), 14) << pad("mean wall time", 18) << wall
       << " us\n";
  }
  os << "\nall algorithms agreed on every trial\n";
  return os.str();
}

}  // namespace ngcd
