// ngcd command-line tool: compute n-way GCDs (with optional step traces),
// verify the algorithms against independent oracles, and run counter
// benchmark campaigns.
//
// Exit codes: 0 success, 2 parse/usage error, 3 empty input,
// 4 verification or benchmark mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ngcd/ngcd.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitMismatch = 4;

std::vector<std::string> split_tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

// Gathers raw tokens: positional arguments win, then --input FILE, then stdin.
// Returns nullopt (after printing an error) when the file cannot be read.
std::optional<std::vector<std::string>> gather_tokens(const std::vector<std::string>& positional,
                                                      const std::string& input_file) {
  if (!positional.empty()) return positional;
  std::ostringstream buf;
  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) {
      std::cerr << "error: cannot open input file '" << input_file << "'\n";
      return std::nullopt;
    }
    buf << in.rdbuf();
  } else {
    buf << std::cin.rdbuf();
  }
  return split_tokens(buf.str());
}

// Parses all tokens; on failure prints the offending token and its 1-based
// position and returns nullopt.
std::optional<std::vector<ngcd::Natural>> parse_values(const std::vector<std::string>& tokens,
                                                       bool hex) {
  std::vector<ngcd::Natural> values;
  values.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto v = ngcd::parse_natural(tokens[i], hex);
    if (!v) {
      std::cerr << "error: invalid integer token '" << tokens[i] << "' at position " << (i + 1)
                << "\n";
      return std::nullopt;
    }
    values.push_back(std::move(*v));
  }
  return values;
}

void print_trace(const ngcd::Trace<ngcd::Natural>& trace) {
  using nlohmann::json;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& ev = trace[i];
    json rec;
    rec["step"] = i;
    rec["kind"] = std::string(ngcd::to_string(ev.kind));
    json state = json::array();
    for (const auto& x : ev.state_after) state.push_back(x.str());
    rec["state"] = state;
    rec["p"] = ev.power_of_two;
    if (ev.pivot) rec["pivot"] = ev.pivot->str();
    std::cout << rec.dump() << '\n';
  }
}

int run_compute(const std::string& alg_name, const std::vector<std::string>& positional,
                const std::string& input_file, bool hex, bool trace) {
  auto alg = ngcd::parse_algorithm(alg_name);
  if (!alg) {
    std::cerr << "error: unknown algorithm '" << alg_name
              << "' (expected gcd-n, binary-gcd-n, fold-euclid or fold-binary)\n";
    return kExitUsage;
  }
  auto tokens = gather_tokens(positional, input_file);
  if (!tokens) return kExitUsage;
  if (tokens->empty()) {
    std::cerr << "error: no input values\n";
    return kExitEmpty;
  }
  auto values = parse_values(*tokens, hex);
  if (!values) return kExitUsage;

  auto result =
      ngcd::run_algorithm(*alg, *values, trace ? ngcd::TraceMode::on : ngcd::TraceMode::off);
  if (trace && result.trace) print_trace(*result.trace);
  std::cout << result.gcd << '\n';
  return kExitOk;
}

int run_verify(const std::vector<std::string>& positional, const std::string& input_file,
               bool hex) {
  auto tokens = gather_tokens(positional, input_file);
  if (!tokens) return kExitUsage;
  if (tokens->empty()) {
    std::cerr << "error: no input values\n";
    return kExitEmpty;
  }
  auto values = parse_values(*tokens, hex);
  if (!values) return kExitUsage;

  // Oracle bounds: factorization needs every non-zero value below 2^64 and
  // the divisor scan needs the smallest non-zero value at most 10^6.
  const ngcd::Natural* min_nonzero = nullptr;
  for (const auto& x : *values) {
    if (x.is_zero()) continue;
    if (x.bit_length() > 64) {
      std::cerr << "error: verify requires every value below 2^64 (factorization oracle "
                   "bound); got "
                << x << "\n";
      return kExitUsage;
    }
    if (!min_nonzero || x < *min_nonzero) min_nonzero = &x;
  }
  if (min_nonzero && !(*min_nonzero <= ngcd::Natural(ngcd::kBruteforceScanBound))) {
    std::cerr << "error: verify requires the smallest non-zero value to be at most "
              << ngcd::kBruteforceScanBound << " (divisor-scan oracle bound); got "
              << *min_nonzero << "\n";
    return kExitUsage;
  }

  std::vector<std::pair<std::string, ngcd::Natural>> rows;
  for (auto alg : ngcd::all_algorithms())
    rows.emplace_back(std::string(ngcd::to_string(alg)), ngcd::run_algorithm(alg, *values).gcd);
  rows.emplace_back("factorization", ngcd::oracle_gcd_factorization(*values));
  rows.emplace_back("divisor-scan", ngcd::oracle_gcd_bruteforce(*values));

  bool agree = true;
  for (const auto& [name, g] : rows) {
    if (!(g == rows.front().second)) agree = false;
  }
  std::cout << "method         gcd\n";
  for (const auto& [name, g] : rows) {
    std::cout << name;
    for (std::size_t pad = name.size(); pad < 15; ++pad) std::cout << ' ';
    std::cout << g << '\n';
  }
  std::cout << "agreement: " << (agree ? "yes" : "no") << '\n';
  return agree ? kExitOk : kExitMismatch;
}

int run_bench(std::uint64_t seed, std::size_t n, unsigned bits, std::size_t trials,
              const std::string& dist_name, const std::string& algs_csv,
              const std::string& format, const std::string& g_text) {
  ngcd::BenchConfig cfg;
  cfg.seed = seed;
  cfg.n = n;
  cfg.bits = bits;
  cfg.trials = trials;

  auto dist = ngcd::parse_distribution(dist_name);
  if (!dist) {
    std::cerr << "error: unknown distribution '" << dist_name
              << "' (expected uniform-random, common-factor, one-small-many-large, all-equal "
                 "or adversarial-chain)\n";
    return kExitUsage;
  }
  cfg.distribution = *dist;

  auto g = ngcd::parse_natural(g_text);
  if (!g || g->is_zero()) {
    std::cerr << "error: --g must be a positive integer, got '" << g_text << "'\n";
    return kExitUsage;
  }
  cfg.common_factor = std::move(*g);

  cfg.algorithms.clear();
  std::istringstream algs_in(algs_csv);
  std::string item;
  while (std::getline(algs_in, item, ',')) {
    auto alg = ngcd::parse_algorithm(item);
    if (!alg) {
      std::cerr << "error: unknown algorithm '" << item << "' in --algs\n";
      return kExitUsage;
    }
    cfg.algorithms.push_back(*alg);
  }

  if (format != "table" && format != "json-lines") {
    std::cerr << "error: --format must be 'table' or 'json-lines', got '" << format << "'\n";
    return kExitUsage;
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    auto report = ngcd::run_campaign(cfg);
    std::cout << (format == "table" ? ngcd::render_table(report)
                                    : ngcd::render_json_lines(report));
  } catch (const ngcd::GcdMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-way greatest common divisor toolkit"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Compute the GCD of the input values");
  std::string c_alg = "gcd-n";
  std::vector<std::string> c_values;
  std::string c_input;
  bool c_hex = false;
  bool c_trace = false;
  compute->add_option("--alg", c_alg,
                      "Algorithm: gcd-n, binary-gcd-n, fold-euclid or fold-binary");
  compute->add_flag("--trace", c_trace, "Print one structured record per reduction step");
  compute->add_option("--input", c_input, "Read whitespace-separated values from FILE");
  compute->add_flag("--hex", c_hex, "Interpret tokens as hexadecimal");
  compute->add_option("values", c_values, "Input values (defaults to --input file, then stdin)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run all algorithms plus both oracles and compare");
  std::vector<std::string> v_values;
  std::string v_input;
  bool v_hex = false;
  verify->add_option("--input", v_input, "Read whitespace-separated values from FILE");
  verify->add_flag("--hex", v_hex, "Interpret tokens as hexadecimal");
  verify->add_option("values", v_values, "Input values (defaults to --input file, then stdin)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a deterministic counter benchmark campaign");
  std::uint64_t b_seed = 0;
  std::size_t b_n = 8;
  unsigned b_bits = 64;
  std::size_t b_trials = 10;
  std::string b_dist = "uniform-random";
  std::string b_algs = "gcd-n,binary-gcd-n,fold-euclid,fold-binary";
  std::string b_format = "table";
  std::string b_g = "21";
  bench->add_option("--seed", b_seed, "RNG seed (identical seeds give identical counters)");
  bench->add_option("--n", b_n, "List length per trial");
  bench->add_option("--bits", b_bits, "Bit width of generated values");
  bench->add_option("--trials", b_trials, "Number of input lists");
  bench->add_option("--dist", b_dist,
                    "Input distribution: uniform-random, common-factor, one-small-many-large, "
                    "all-equal or adversarial-chain");
  bench->add_option("--algs", b_algs, "Comma-separated list of algorithms to run");
  bench->add_option("--format", b_format, "Report format: table or json-lines");
  bench->add_option("--g", b_g, "Planted factor for the common-factor distribution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (app.got_subcommand(compute))
    return run_compute(c_alg, c_values, c_input, c_hex, c_trace);
  if (app.got_subcommand(verify)) return run_verify(v_values, v_input, v_hex);
  return run_bench(b_seed, b_n, b_bits, b_trials, b_dist, b_algs, b_format, b_g);
}
