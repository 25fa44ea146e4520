// Acceptance gate: exercises the eight shipping criteria end to end and
// prints one [PASS]/[FAIL] line per criterion. Exits non-zero when any fail.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ngcd/ngcd.hpp"

using ngcd::binary_gcd_n;
using ngcd::fold_gcd_binary;
using ngcd::fold_gcd_euclid;
using ngcd::gcd_n;
using ngcd::gcd_pair;
using ngcd::Natural;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string("'") + NGCD_CLI_PATH + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::uint64_t> as_multiset(const std::vector<std::string>& decimals) {
  std::vector<std::uint64_t> vals;
  for (const auto& d : decimals) vals.push_back(std::stoull(d));
  std::sort(vals.begin(), vals.end());
  return vals;
}

double best_library_ms(const std::vector<Natural>& xs, bool binary) {
  double best = 1e9;
  for (int i = 0; i < 5; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = binary ? binary_gcd_n(xs, ngcd::TraceMode::on) : gcd_n(xs, ngcd::TraceMode::on);
    auto t1 = std::chrono::steady_clock::now();
    (void)r;
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

// Criterion 1: the Euclid-style trace for (22, 36, 74, 98) lands on the
// golden residue states in order and the run is effectively instant.
bool criterion1(std::string& detail) {
  auto r = run_cli("compute --alg gcd-n --trace 22 36 74 98");
  if (r.exit_code != 0) {
    detail = "cli exit " + std::to_string(r.exit_code);
    return false;
  }
  auto lines = lines_of(r.output);
  if (lines.empty() || lines.back() != "2") {
    detail = "expected final line 2";
    return false;
  }
  std::vector<std::vector<std::uint64_t>> mod_states;
  std::vector<std::string> pivots;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    auto rec = nlohmann::json::parse(lines[i], nullptr, false);
    if (rec.is_discarded()) {
      detail = "unparseable trace line";
      return false;
    }
    if (rec["kind"] == "mod-reduce")
      mod_states.push_back(as_multiset(rec["state"].get<std::vector<std::string>>()));
    if (rec["kind"] == "pivot-select" && rec.contains("pivot"))
      pivots.push_back(rec["pivot"].get<std::string>());
  }
  const std::vector<std::vector<std::uint64_t>> golden = {
      {8, 10, 14, 22}, {2, 6, 6, 8}, {0, 0, 0, 2}};
  if (mod_states != golden) {
    detail = "residue states diverge from the golden chain";
    return false;
  }
  if (pivots.size() < 3 || pivots[0] != "22" || pivots[1] != "8" || pivots[2] != "2") {
    detail = "pivot sequence diverges";
    return false;
  }
  double ms = best_library_ms({Natural(22), Natural(36), Natural(74), Natural(98)}, false);
  if (ms >= 1.0) {
    detail = "took " + std::to_string(ms) + " ms";
    return false;
  }
  std::ostringstream os;
  os << "gcd 2, states and pivots match, " << ms << " ms";
  detail = os.str();
  return true;
}

// Criterion 2: the halve/subtract trace for (14, 28, 56, 98) shows p = 1,
// odd core 7, and the golden intermediate states.
bool criterion2(std::string& detail) {
  auto r = run_cli("compute --alg binary-gcd-n --trace 14 28 56 98");
  if (r.exit_code != 0) {
    detail = "cli exit " + std::to_string(r.exit_code);
    return false;
  }
  auto lines = lines_of(r.output);
  if (lines.empty() || lines.back() != "14") {
    detail = "expected final line 14";
    return false;
  }
  const std::vector<std::uint64_t> want_a = {7, 14, 28, 49};
  const std::vector<std::uint64_t> want_b = {0, 0, 7, 42};
  std::size_t seen_a = 0, seen_b = 0;
  unsigned final_p = 0;
  std::string final_pivot;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    auto rec = nlohmann::json::parse(lines[i], nullptr, false);
    if (rec.is_discarded()) {
      detail = "unparseable trace line";
      return false;
    }
    auto ms = as_multiset(rec["state"].get<std::vector<std::string>>());
    if (ms == want_a && seen_b == 0) seen_a++;
    if (ms == want_b && seen_a > 0) seen_b++;
    if (rec["kind"] == "terminate") {
      final_p = rec["p"].get<unsigned>();
      if (rec.contains("pivot")) final_pivot = rec["pivot"].get<std::string>();
    }
  }
  if (seen_a == 0 || seen_b == 0) {
    detail = "golden intermediate states missing or out of order";
    return false;
  }
  if (final_p != 1 || final_pivot != "7") {
    detail = "expected p=1 with odd core 7";
    return false;
  }
  double ms = best_library_ms({Natural(14), Natural(28), Natural(56), Natural(98)}, true);
  if (ms >= 1.0) {
    detail = "took " + std::to_string(ms) + " ms";
    return false;
  }
  std::ostringstream os;
  os << "gcd 14 = 7*2^1, states match, " << ms << " ms";
  detail = os.str();
  return true;
}

// Criterion 3: every list over {0..12} with 1-4 elements, all four
// algorithms against the divisor-scan oracle.
bool criterion3(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::uint64_t> odo(n, 0);
    for (;;) {
      std::vector<Natural> xs;
      xs.reserve(n);
      for (auto v : odo) xs.emplace_back(v);
      Natural expect = ngcd::oracle_gcd_bruteforce(xs);
      if (gcd_n(xs).gcd != expect || binary_gcd_n(xs).gcd != expect ||
          fold_gcd_euclid(xs).gcd != expect || fold_gcd_binary(xs).gcd != expect) {
        std::ostringstream os;
        os << "disagreement on (";
        for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << odo[i];
        os << ")";
        detail = os.str();
        return false;
      }
      ++checked;
      std::size_t k = 0;
      while (k < n && ++odo[k] > 12) odo[k++] = 0;
      if (k == n) break;
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  double sec = std::chrono::duration<double>(t1 - t0).count();
  std::ostringstream os;
  os << checked << " lists, " << sec << " s";
  detail = os.str();
  return checked == 30940 && sec < 30.0;
}

// Criterion 4: 1000 random wide lists (up to 64 elements of up to 256 bits),
// all four algorithms agree.
bool criterion4(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  ngcd::SplitMix64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(64);
    std::vector<Natural> xs;
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(rng.bits(static_cast<unsigned>(rng.below(257))));
    Natural g = gcd_n(xs).gcd;
    if (binary_gcd_n(xs).gcd != g || fold_gcd_euclid(xs).gcd != g ||
        fold_gcd_binary(xs).gcd != g) {
      detail = "disagreement on trial " + std::to_string(trial);
      return false;
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  double sec = std::chrono::duration<double>(t1 - t0).count();
  detail = "1000 lists, " + std::to_string(sec) + " s";
  return sec < 60.0;
}

// Criterion 5: planted factor times pairwise-coprime cofactors (distinct
// prime powers) is recovered exactly by every algorithm.
bool criterion5(std::string& detail) {
  static const std::uint64_t primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                         41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  constexpr std::size_t n_primes = sizeof(primes) / sizeof(primes[0]);
  ngcd::SplitMix64 rng(777);
  for (int cfg = 0; cfg < 200; ++cfg) {
    const Natural g(1 + rng.below(0xFFFFFFFFull));  // planted gcd, at most 2^32
    const std::size_t n = 2 + rng.below(7);
    bool used[n_primes] = {};
    std::vector<Natural> xs;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t pi;
      do {
        pi = rng.below(n_primes);
      } while (used[pi]);
      used[pi] = true;
      Natural cofactor(1);
      const unsigned e = 1 + static_cast<unsigned>(rng.below(3));
      for (unsigned k = 0; k < e; ++k) cofactor *= Natural(primes[pi]);
      xs.push_back(g * cofactor);
    }
    if (gcd_n(xs).gcd != g || binary_gcd_n(xs).gcd != g || fold_gcd_euclid(xs).gcd != g ||
        fold_gcd_binary(xs).gcd != g) {
      detail = "config " + std::to_string(cfg) + " failed to recover the planted factor";
      return false;
    }
  }
  detail = "200 planted factors recovered exactly";
  return true;
}

// Criterion 6: algebraic property suite — pairwise associativity on a full
// small grid, zero laws, step soundness under the factorization oracle, and
// the constant-scaling law.
bool criterion6(std::string& detail) {
  for (std::uint64_t a = 0; a <= 20; ++a) {
    for (std::uint64_t b = 0; b <= 20; ++b) {
      for (std::uint64_t c = 0; c <= 20; ++c) {
        Natural na(a), nb(b), nc(c);
        if (gcd_pair(na, gcd_pair(nb, nc)) != gcd_pair(gcd_pair(na, nb), nc)) {
          detail = "associativity broke";
          return false;
        }
      }
    }
  }

  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Natural> zeros(n, Natural(0));
    if (!gcd_n(zeros).gcd.is_zero() || !binary_gcd_n(zeros).gcd.is_zero() ||
        !fold_gcd_euclid(zeros).gcd.is_zero() || !fold_gcd_binary(zeros).gcd.is_zero()) {
      detail = "all-zero law broke at n=" + std::to_string(n);
      return false;
    }
    for (std::size_t at = 0; at < n; ++at) {
      auto xs = zeros;
      xs[at] = Natural(17);
      if (gcd_n(xs).gcd != Natural(17) || binary_gcd_n(xs).gcd != Natural(17)) {
        detail = "single-survivor law broke";
        return false;
      }
    }
  }

  ngcd::SplitMix64 rng(606);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.below(7);
    std::vector<Natural> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(Natural(rng.below(1000000)));
    auto pivot = ngcd::least_nonzero_pivot(xs);
    if (!pivot) continue;
    const Natural before = ngcd::oracle_gcd_factorization(xs);
    if (ngcd::oracle_gcd_factorization(ngcd::mod_reduce_step(xs, *pivot)) != before) {
      detail = "mod-reduce changed the gcd";
      return false;
    }
    if (ngcd::oracle_gcd_factorization(ngcd::subtract_step(xs, *pivot)) != before) {
      detail = "subtract changed the gcd";
      return false;
    }
    auto with_odd = xs;
    with_odd[0] = Natural(2 * rng.below(500000) + 1);
    for (std::size_t i = 1; i < n; ++i) {
      if (!with_odd[i].is_zero() && with_odd[i].is_even()) {
        auto halved = with_odd;
        halved[i] = ngcd::halve_one_step(with_odd[i]);
        if (ngcd::oracle_gcd_factorization(halved) !=
            ngcd::oracle_gcd_factorization(with_odd)) {
          detail = "halving one even element changed an odd gcd";
          return false;
        }
        break;
      }
    }
    std::vector<Natural> evens;
    for (const auto& x : xs) evens.push_back(x * Natural(2));
    auto [halved_all, dp] = ngcd::halve_all_step(evens);
    if (dp != 1 ||
        ngcd::oracle_gcd_factorization(evens) !=
            (ngcd::oracle_gcd_factorization(halved_all) << 1)) {
      detail = "halving everything did not extract exactly one factor of two";
      return false;
    }
  }

  for (std::uint64_t c : {2ull, 3ull, 5ull}) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng.below(8);
      std::vector<Natural> xs, scaled;
      for (std::size_t i = 0; i < n; ++i) {
        Natural v(rng.below(1000000));
        xs.push_back(v);
        scaled.push_back(v * Natural(c));
      }
      if (gcd_n(scaled).gcd != Natural(c) * gcd_n(xs).gcd ||
          binary_gcd_n(scaled).gcd != Natural(c) * binary_gcd_n(xs).gcd) {
        detail = "scaling law broke at c=" + std::to_string(c);
        return false;
      }
    }
  }

  detail = "associativity, zero laws, step soundness, scaling all hold";
  return true;
}

// Criterion 7: repeated benchmark runs with identical flags produce
// byte-identical counter sections.
bool criterion7(std::string& detail) {
  const std::string flags =
      "bench --seed 7 --n 16 --bits 128 --trials 50 --dist one-small-many-large "
      "--format json-lines";
  auto a = run_cli(flags);
  auto b = run_cli(flags);
  if (a.exit_code != 0 || b.exit_code != 0) {
    detail = "bench exited non-zero";
    return false;
  }
  auto pick = [](const std::string& text) {
    std::vector<std::string> out;
    for (auto& l : lines_of(text)) {
      if (l.find("\"type\":\"counters\"") != std::string::npos) out.push_back(l);
    }
    return out;
  };
  auto ca = pick(a.output);
  auto cb = pick(b.output);
  if (ca.size() != 4) {
    detail = "expected four counter lines, got " + std::to_string(ca.size());
    return false;
  }
  if (ca != cb) {
    detail = "counter sections differ between runs";
    return false;
  }
  detail = "counter sections byte-identical across runs";
  return true;
}

// Criterion 8: informational only — no quantitative performance baseline
// exists to reproduce, so counter determinism (criterion 7) stands in for
// performance claims and no relative-speed assertion is made here.
bool criterion8(std::string& detail) {
  detail =
      "note: no quantitative performance baseline exists to reproduce; "
      "deterministic counter reporting stands in for performance claims and "
      "no relative-speed assertion is made";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
  };
  const Criterion criteria[] = {
      {"golden euclid-style trace (22, 36, 74, 98)", criterion1},
      {"golden halve/subtract trace (14, 28, 56, 98)", criterion2},
      {"exhaustive small-grid equivalence vs oracle", criterion3},
      {"randomized wide-input equivalence", criterion4},
      {"planted-factor recovery", criterion5},
      {"algebraic property suite", criterion6},
      {"benchmark counter determinism", criterion7},
      {"performance reporting is informational only", criterion8},
  };

  int failures = 0;
  int idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    std::string detail;
    bool pass = false;
    try {
      pass = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << c.name
              << " — " << detail << "\n";
  }
  if (failures == 0) {
    std::cout << "all 8 acceptance criteria hold\n";
  } else {
    std::cout << failures << " criterion(s) failed\n";
  }
  return failures == 0 ? 0 : 1;
}
