#include "phomfly/verify.hpp"

#include <chrono>
#include <random>

namespace phomfly {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

json failure(std::size_t index, std::uint64_t seed, const PseudoWord& w, std::string_view what) {
  return json{{"instance", index}, {"seed", seed}, {"strands", w.strands()}, {"word", w.to_string()},
              {"move", std::string(what)}};
}

/// A word on exactly n strands with at least one pseudo letter (n >= 2).
PseudoWord word_with_pseudo(int n, std::size_t len, int d_max, std::mt19937_64& rng) {
  PseudoWord w = random_word(n, len, std::max(d_max, 1), rng());
  if (w.pseudo_degree() > 0) return w;
  Letter p = Letter::pseudo(uniform(rng, 1, n - 1));
  if (w.empty()) return {n, {p}};
  return w.replaced(uniform<std::size_t>(rng, 0, w.size() - 1), {p});
}

}  // namespace

PseudoWord suite_word(const SuiteConfig& config, std::size_t index) {
  std::mt19937_64 rng(derive_seed(config.seed, index));
  int n = uniform(rng, 1, std::max(config.max_strands, 1));
  std::size_t len = uniform<std::size_t>(rng, 0, config.max_len);
  return random_word(n, len, config.max_pseudo, rng());
}

Report verify_markov(const SuiteConfig& config) {
  auto start = Clock::now();
  Report report{"markov", 0, {}, 0.0};
  for (std::size_t i = 0; i < config.trials; ++i) {
    std::uint64_t seed = derive_seed(config.seed, i);
    PseudoWord w = suite_word(config, i);
    std::mt19937_64 rng(derive_seed(seed, 2));
    PseudoWord beta = random_word(w.strands(), uniform<std::size_t>(rng, 0, 4), 0, rng());
    std::size_t split = uniform<std::size_t>(rng, 0, w.size());
    const MarkovMove moves[] = {markov::Conjugate{beta}, markov::Commute{split}, markov::StabPositive{},
                                markov::StabNegative{}, markov::StabPseudo{}};
    ExtScalar base = invariant_P(w);
    for (const auto& m : moves) {
      ++report.instances;
      if (invariant_P(markov_move(w, m)) != base) report.failures.push_back(failure(i, seed, w, move_name(m)));
    }
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report verify_rho(const SuiteConfig& config) {
  auto start = Clock::now();
  Report report{"rho", 0, {}, 0.0};
  for (int n = 2; n <= config.max_strands; ++n) {
    Report r = rho_relation_check(n);
    report.instances += r.instances;
    report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report verify_trace_props(const SuiteConfig& config) {
  auto start = Clock::now();
  const Constants& c = constants();
  Report report{"trace-props", 0, {}, 0.0};
  for (std::size_t i = 0; i < config.trials; ++i) {
    std::uint64_t seed = derive_seed(config.seed, i);
    std::mt19937_64 rng(seed);
    int n = uniform(rng, 1, std::max(config.max_strands, 1));
    PseudoWord a = random_word(n, uniform<std::size_t>(rng, 0, config.max_len), config.max_pseudo, rng());
    PseudoWord b = random_word(n, uniform<std::size_t>(rng, 0, config.max_len), config.max_pseudo, rng());
    ExtScalar ta = induced_trace(a);
    auto check = [&](bool ok, std::string_view what) {
      ++report.instances;
      if (!ok) {
        json f = failure(i, seed, a, what);
        f["other"] = b.to_string();
        report.failures.push_back(std::move(f));
      }
    };
    check(induced_trace(a.concat(b)) == induced_trace(b.concat(a)), "T(ab)=T(ba)");
    check(induced_trace(a.with_strands(n + 1)) == ta, "T_{n+1}(a)=T_n(a)");
    check(induced_trace(markov_move(a, markov::StabPositive{})) == c.z * ta, "T(a g_n)=z T(a)");
    check(induced_trace(markov_move(a, markov::StabNegative{})) == c.z_minus * ta, "T(a g_n^-1)=z_- T(a)");
    check(induced_trace(markov_move(a, markov::StabPseudo{})) == c.pseudo_factor * ta,
          "T(a p_n)=(Xz+Yz_-) T(a)");
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report verify_statesum(const SuiteConfig& config) {
  auto start = Clock::now();
  const Constants& c = constants();
  Report report{"statesum", 0, {}, 0.0};
  ++report.instances;
  ExtScalar closed = c.C * (ExtScalar::variable(Var::X) * c.B_inverse + ExtScalar::variable(Var::Y) * c.B);
  if (closed != ExtScalar(1))
    report.failures.push_back(json{{"instance", "closed-form"}, {"move", "C(XB^-1+YB)=1"}});
  for (std::size_t i = 0; i < config.trials; ++i) {
    std::uint64_t seed = derive_seed(config.seed, i);
    PseudoWord w = suite_word(config, i);
    ++report.instances;
    try {
      if (state_sum_P(w, config.state_cap) != invariant_P(w))
        report.failures.push_back(failure(i, seed, w, "state-sum"));
    } catch (const StateBudgetExceeded& e) {
      json f = failure(i, seed, w, "state-sum");
      f["error"] = e.what();
      report.failures.push_back(std::move(f));
    }
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report verify_pseudo_skein(const SuiteConfig& config) {
  auto start = Clock::now();
  Report report{"pseudo-skein", 0, {}, 0.0};
  for (std::size_t i = 0; i < config.trials; ++i) {
    std::uint64_t seed = derive_seed(config.seed, i);
    std::mt19937_64 rng(seed);
    int n = uniform(rng, 2, std::max(config.max_strands, 2));
    PseudoWord w = word_with_pseudo(n, uniform<std::size_t>(rng, 0, config.max_len), config.max_pseudo, rng);
    std::vector<std::size_t> marks;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k].is_pseudo()) marks.push_back(k);
    std::size_t mark = marks[uniform<std::size_t>(rng, 0, marks.size() - 1)];
    ++report.instances;
    if (!pseudo_skein_check(w, mark).holds)
      report.failures.push_back(failure(i, seed, w, "pseudo-skein@" + std::to_string(mark)));
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report verify_classical_skein(const SuiteConfig& config) {
  auto start = Clock::now();
  Report report{"classical-skein", 0, {}, 0.0};
  for (std::size_t i = 0; i < config.trials; ++i) {
    std::uint64_t seed = derive_seed(config.seed, i);
    std::mt19937_64 rng(seed);
    int n = uniform(rng, 2, std::max(config.max_strands, 2));
    PseudoWord w = random_word(n, uniform<std::size_t>(rng, 0, config.max_len), 0, rng());
    std::size_t mark = uniform<std::size_t>(rng, 0, w.size());
    int gen = uniform(rng, 1, n - 1);
    ++report.instances;
    if (!classical_skein_check(w, mark, gen).holds)
      report.failures.push_back(
          failure(i, seed, w, "classical-skein@" + std::to_string(mark) + ":" + std::to_string(gen)));
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

Report run_suite(std::string_view name, const SuiteConfig& config) {
  if (name == "markov") return verify_markov(config);
  if (name == "rho") return verify_rho(config);
  if (name == "trace-props") return verify_trace_props(config);
  if (name == "statesum") return verify_statesum(config);
  if (name == "pseudo-skein") return verify_pseudo_skein(config);
  if (name == "classical-skein") return verify_classical_skein(config);
  if (name != "all") throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  auto start = Clock::now();
  Report all{"all", 0, {}, 0.0};
  for (auto suite : kSuiteNames) {
    Report r = run_suite(suite, config);
    all.instances += r.instances;
    for (auto& f : r.failures) {
      f["suite"] = std::string(suite);
      all.failures.push_back(std::move(f));
    }
  }
  all.elapsed_ms = elapsed_since(start);
  return all;
}

}  // namespace phomfly
