// Seeded randomized verification suites. Every instance draws from its own
// seed derive_seed(config.seed, index), and failures record that seed so a
// single instance can be replayed.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "phomfly/braid_words.hpp"
#include "phomfly/invariant.hpp"
#include "phomfly/report.hpp"

namespace phomfly {

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  int max_strands = 5;
  std::size_t max_len = 8;
  int max_pseudo = 4;
  std::uint64_t state_cap = kDefaultStateCap;
};

inline constexpr std::string_view kSuiteNames[] = {"markov",       "rho",         "trace-props", "statesum",
                                                   "pseudo-skein", "classical-skein"};

/// Base word of instance `index` in the markov and statesum suites; exposed so
/// other checks can revisit exactly the same words.
PseudoWord suite_word(const SuiteConfig& config, std::size_t index);

/// P unchanged under conjugation, commuting, and the three stabilizations.
Report verify_markov(const SuiteConfig& config);
/// rho_relation_check for every strand count 2..max_strands.
Report verify_rho(const SuiteConfig& config);
/// T(ab) = T(ba), inclusion, and the three stabilization factors.
Report verify_trace_props(const SuiteConfig& config);
/// invariant_P == state_sum_P, plus C (X B^-1 + Y B) == 1.
Report verify_statesum(const SuiteConfig& config);
Report verify_pseudo_skein(const SuiteConfig& config);
Report verify_classical_skein(const SuiteConfig& config);

/// Runs one named suite, or all of them for "all" (failures then carry a
/// "suite" field). Throws std::invalid_argument on an unknown name.
Report run_suite(std::string_view name, const SuiteConfig& config);

}  // namespace phomfly
