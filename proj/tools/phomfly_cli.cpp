// phomfly: compute the pseudo link invariant of braid words and run the
// randomized verification suites.
//
//   phomfly compute --word "1 p1" [--strands N] [--format text|json]
//   phomfly trace | homfly | statesum | skein-eval --word ...
//   phomfly verify <suite> [--seed S] [--trials T] [--max-strands N] ...
//
// Exit codes: 0 success, 1 verification failures, 2 bad arguments or word,
// 3 state budget exhausted.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "phomfly/invariant.hpp"
#include "phomfly/serialize.hpp"
#include "phomfly/verify.hpp"

namespace {

using namespace phomfly;

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStateCap = 3;

struct CliConfig {
  std::string command;
  std::optional<std::string> word;
  std::optional<int> strands;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  int max_strands = 5;
  std::size_t max_len = 8;
  int max_pseudo = 4;
  std::string format = "text";
  std::uint64_t state_cap = kDefaultStateCap;
  bool timing = false;
};

void print_value(const ExtScalar& value, const CliConfig& cfg) {
  if (cfg.format == "json")
    std::cout << to_json(value).dump() << '\n';
  else
    std::cout << value.to_string() << '\n';
}

int run_compute(const CliConfig& cfg) {
  PseudoWord w = parse_word(*cfg.word, cfg.strands);
  if (cfg.command == "compute") print_value(invariant_P(w), cfg);
  else if (cfg.command == "trace") print_value(induced_trace(w), cfg);
  else if (cfg.command == "homfly") print_value(classical_H(w), cfg);
  else if (cfg.command == "statesum") print_value(state_sum_P(w, cfg.state_cap), cfg);
  else if (cfg.command == "skein-eval") print_value(skein_evaluate(w), cfg);
  return 0;
}

int run_verify(const CliConfig& cfg) {
  SuiteConfig suite{cfg.seed, cfg.trials, cfg.max_strands, cfg.max_len, cfg.max_pseudo, cfg.state_cap};
  Report report = run_suite(cfg.suite, suite);
  if (!cfg.timing) report.elapsed_ms = 0.0;
  std::cout << (cfg.format == "json" ? report.to_json().dump() : report.to_json().dump(2)) << '\n';
  return report.passed() ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo link HOMFLYPT-type invariant from pseudo braid words"};
  app.require_subcommand(1);
  CliConfig cfg;

  const std::pair<const char*, const char*> value_commands[] = {
      {"compute", "invariant P of the closure"},
      {"trace", "induced trace T_n = tr_n(rho(word))"},
      {"homfly", "classical invariant H of a classical word"},
      {"statesum", "P via the sum over classical resolutions"},
      {"skein-eval", "P via recursive pseudo skein resolution"},
  };
  for (const auto& [name, help] : value_commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--word", cfg.word, "braid word, e.g. \"1 -2 p1\"")->required();
    sub->add_option("--strands", cfg.strands, "strand count (default: 1 + largest index)");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
    if (std::string(name) == "statesum") sub->add_option("--state-cap", cfg.state_cap, "maximum number of states");
    sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }

  auto* verify = app.add_subcommand("verify", "run a randomized verification suite");
  verify->add_option("suite", cfg.suite, "markov, rho, trace-props, statesum, pseudo-skein, classical-skein, all")
      ->required()
      ->check(CLI::IsMember({"markov", "rho", "trace-props", "statesum", "pseudo-skein", "classical-skein", "all"}));
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--trials", cfg.trials);
  verify->add_option("--max-strands", cfg.max_strands)->check(CLI::Range(1, 8));
  verify->add_option("--max-len", cfg.max_len);
  verify->add_option("--max-pseudo", cfg.max_pseudo)->check(CLI::NonNegativeNumber);
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--state-cap", cfg.state_cap);
  verify->add_flag("--timing", cfg.timing, "record wall-clock time in elapsed_ms (otherwise 0)");
  verify->callback([&cfg] { cfg.command = "verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cfg.command == "verify") return run_verify(cfg);
    return run_compute(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (token '" << e.token << "')\n";
    return kExitUsage;
  } catch (const StateBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStateCap;
  } catch (const PseudoLetterPresent& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
