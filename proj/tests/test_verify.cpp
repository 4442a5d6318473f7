#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "phomfly/serialize.hpp"
#include "phomfly/verify.hpp"

using namespace phomfly;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + PHOMFLY_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

SuiteConfig small(std::uint64_t seed = 1) {
  SuiteConfig c;
  c.seed = seed;
  c.trials = 10;
  c.max_strands = 3;
  c.max_len = 5;
  c.max_pseudo = 2;
  return c;
}

}  // namespace

TEST_CASE("every suite passes and reports the schema") {
  for (auto name : kSuiteNames) {
    CAPTURE(name);
    Report r = run_suite(name, small());
    CHECK(r.passed());
    CHECK(r.instances > 0);
    nlohmann::json j = r.to_json();
    CHECK(j["check"] == std::string(name));
    CHECK(j["failures"].is_array());
    CHECK(j.contains("instances"));
    CHECK(j.contains("elapsed_ms"));
  }
  Report all = run_suite("all", small());
  CHECK(all.check == "all");
  CHECK(all.passed());
  CHECK_THROWS_AS(run_suite("bogus", small()), std::invalid_argument);
}

TEST_CASE("suites are deterministic for a seed") {
  for (auto name : kSuiteNames) {
    Report a = run_suite(name, small(9)), b = run_suite(name, small(9));
    a.elapsed_ms = b.elapsed_ms = 0;
    CHECK(a.to_json().dump() == b.to_json().dump());
  }
  CHECK(suite_word(small(3), 4) == suite_word(small(3), 4));
}

TEST_CASE("suite words respect the configured bounds") {
  SuiteConfig c = small(12);
  for (std::size_t i = 0; i < 100; ++i) {
    PseudoWord w = suite_word(c, i);
    CHECK(w.strands() <= c.max_strands);
    CHECK(w.size() <= c.max_len);
    CHECK(w.pseudo_degree() <= c.max_pseudo);
  }
}

TEST_CASE("cli compute") {
  RunResult r = run_cli("compute --word \"p1\"");
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
  r = run_cli("compute --word \"\" --strands 1");
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
  r = run_cli("compute --word \"1 p1\" --format json");
  CHECK(r.status == 0);
  const Constants& c = constants();
  ExtScalar q = ExtScalar::variable(Var::q), z = ExtScalar::variable(Var::z);
  ExtScalar expected = c.A * c.B * c.C *
                       (ExtScalar::variable(Var::X) * ((q - ExtScalar(1)) * z + q) + ExtScalar::variable(Var::Y));
  CHECK(ext_from_json(nlohmann::json::parse(r.out)) == expected);
}

TEST_CASE("cli value commands") {
  CHECK(run_cli("trace --word \"\" --strands 1").out == "1\n");
  CHECK(run_cli("homfly --word \"1\"").out == "1\n");
  CHECK(run_cli("statesum --word \"p1 -1 p1\"").out == run_cli("compute --word \"p1 -1 p1\"").out);
  CHECK(run_cli("skein-eval --word \"p1 -1 p1\"").out == run_cli("compute --word \"p1 -1 p1\"").out);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("compute --word \"1 x\"").status == 2);
  CHECK(run_cli("compute --word \"0\"").status == 2);
  CHECK(run_cli("compute --word \"3\" --strands 2").status == 2);
  CHECK(run_cli("homfly --word \"p1\"").status == 2);
  CHECK(run_cli("compute").status == 2);
  CHECK(run_cli("verify nonsense").status == 2);
  CHECK(run_cli("statesum --word \"p1 p1 p1\" --state-cap 4").status == 3);
  CHECK(run_cli("verify rho --max-strands 3").status == 0);
}

TEST_CASE("cli verify output is byte-identical across runs") {
  const std::string args = "verify all --trials 5 --seed 7 --max-strands 3 --format json";
  RunResult a = run_cli(args), b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["check"] == "all");
  CHECK(j["failures"].empty());
  CHECK(j["elapsed_ms"] == 0);
}
