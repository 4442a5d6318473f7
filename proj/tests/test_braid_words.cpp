#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "phomfly/braid_words.hpp"

using namespace phomfly;

namespace {

PseudoWord W(const char* text, std::optional<int> n = std::nullopt) { return parse_word(text, n); }

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
int random_sign(std::mt19937_64& rng) { return pick(rng, 0, 1) ? 1 : -1; }

/// A pair of far-apart indices in 1..n-1; needs n >= 4.
std::pair<int, int> far_pair(std::mt19937_64& rng, int n) {
  for (;;) {
    int i = pick(rng, 1, n - 1), j = pick(rng, 1, n - 1);
    if (std::abs(i - j) >= 2) return {i, j};
  }
}

/// Letters forming the forward side of the rule on n strands, or empty when n
/// is too small for the rule.
std::vector<Letter> forward_pattern(RelationRule rule, int n, std::mt19937_64& rng) {
  using L = Letter;
  switch (rule) {
    case RelationRule::braid_comm: {
      if (n < 4) return {};
      auto [i, j] = far_pair(rng, n);
      return {L::sigma(i, random_sign(rng)), L::sigma(j, random_sign(rng))};
    }
    case RelationRule::pp_comm: {
      if (n < 4) return {};
      auto [i, j] = far_pair(rng, n);
      return {L::pseudo(i), L::pseudo(j)};
    }
    case RelationRule::ps_far_comm: {
      if (n < 4) return {};
      auto [i, j] = far_pair(rng, n);
      return {L::pseudo(i), L::sigma(j, random_sign(rng))};
    }
    case RelationRule::ps_adjacent_comm: {
      int i = pick(rng, 1, n - 1);
      return {L::pseudo(i), L::sigma(i, random_sign(rng))};
    }
    case RelationRule::braid_yang_baxter: {
      if (n < 3) return {};
      int i = pick(rng, 1, n - 2), s = random_sign(rng);
      return {L::sigma(i, s), L::sigma(i + 1, s), L::sigma(i, s)};
    }
    case RelationRule::mixed_left: {
      if (n < 3) return {};
      int i = pick(rng, 1, n - 2);
      return {L::sigma(i), L::sigma(i + 1), L::pseudo(i)};
    }
    case RelationRule::mixed_right: {
      if (n < 3) return {};
      int i = pick(rng, 1, n - 2);
      return {L::sigma(i + 1), L::sigma(i), L::pseudo(i + 1)};
    }
    case RelationRule::free_inverse: {
      int i = pick(rng, 1, n - 1), s = random_sign(rng);
      return {L::sigma(i, s), L::sigma(i, -s)};
    }
  }
  return {};
}

}  // namespace

TEST_CASE("parse examples") {
  PseudoWord trefoil = W("1 1 1");
  CHECK(trefoil.strands() == 2);
  CHECK(trefoil.size() == 3);
  CHECK(trefoil.degree_stats() == DegreeStats{3, 0});

  PseudoWord p = W("p1");
  CHECK(p.strands() == 2);
  CHECK(p[0] == Letter::pseudo(1));
  CHECK(p.degree_stats() == DegreeStats{0, 1});

  CHECK(W("1 p1").degree_stats() == DegreeStats{1, 1});
  CHECK(W("").strands() == 1);
  CHECK(W("", 3).strands() == 3);
  CHECK(W("+2 -1").letters() == std::vector{Letter::sigma(2), Letter::sigma(1, -1)});
  CHECK(W("  1\t-1  ").size() == 2);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(W("0"), ZeroIndexError);
  CHECK_THROWS_AS(W("p0"), ZeroIndexError);
  CHECK_THROWS_AS(W("1 x"), ParseError);
  CHECK_THROWS_AS(W("p"), ParseError);
  CHECK_THROWS_AS(W("p-1"), ParseError);
  CHECK_THROWS_AS(W("1.5"), ParseError);
  CHECK_THROWS_AS(W("--1"), ParseError);
  CHECK_THROWS_AS(W("3", 3), IndexError);
  try {
    W("1 q2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token == "q2");
  }
}

TEST_CASE("degree statistics") {
  CHECK(degree_stats(PseudoWord()) == DegreeStats{0, 0});
  CHECK(degree_stats(W("1 -2 p1 p3")) == DegreeStats{0, 2});
  CHECK(degree_stats(W("1 1 1")) == DegreeStats{3, 0});
  CHECK(degree_stats(W("-1 -1 p2")) == DegreeStats{-2, 1});
}

TEST_CASE("parse and print round-trip") {
  for (std::uint64_t s = 0; s < 500; ++s) {
    int n = 1 + static_cast<int>(s % 6);
    PseudoWord w = random_word(n, s % 11, 4, derive_seed(99, s));
    CHECK(parse_word(w.to_string(), n) == w);
  }
}

TEST_CASE("relation examples") {
  CHECK(apply_relation(W("1 2 p1"), {RelationRule::mixed_left, 0}) == W("p2 1 2"));
  CHECK(apply_relation(W("p1 p3"), {RelationRule::pp_comm, 0}) == W("p3 p1"));
  CHECK(apply_relation(W("p1 1"), {RelationRule::ps_adjacent_comm, 0}) == W("1 p1"));
  CHECK(apply_relation(W("1 p1", 2), {RelationRule::ps_adjacent_comm, 0, Direction::backward}) == W("p1 1"));
  CHECK(apply_relation(W("2 1 p2"), {RelationRule::mixed_right, 0}) == W("p1 2 1"));
  CHECK(apply_relation(W("-1 -2 -1"), {RelationRule::braid_yang_baxter, 0}) == W("-2 -1 -2"));
  CHECK(apply_relation(W("2 1 -1 3", 4), {RelationRule::free_inverse, 1}) == W("2 3", 4));
  RelationInstance insert{RelationRule::free_inverse, 1, Direction::backward, Letter::sigma(2, -1)};
  CHECK(apply_relation(W("1 1", 3), insert) == W("1 -2 2 1", 3));
}

TEST_CASE("relation mismatches") {
  CHECK_THROWS_AS(apply_relation(W("1 2"), {RelationRule::braid_comm, 0}), NoMatch);
  CHECK_THROWS_AS(apply_relation(W("1 2 p2"), {RelationRule::mixed_left, 0}), NoMatch);
  CHECK_THROWS_AS(apply_relation(W("-1 -2 p1"), {RelationRule::mixed_left, 0}), NoMatch);
  CHECK_THROWS_AS(apply_relation(W("1 -2 1"), {RelationRule::braid_yang_baxter, 0}), NoMatch);
  CHECK_THROWS_AS(apply_relation(W("p1 p2"), {RelationRule::pp_comm, 0}), NoMatch);
  CHECK_THROWS_AS(apply_relation(W("p1 1"), {RelationRule::ps_adjacent_comm, 1}), NoMatch);
  CHECK_THROWS_AS(apply_relation(W("1"), {RelationRule::free_inverse, 0, Direction::backward}), NoMatch);
  CHECK(find_matches(W("p1 1 2 p1"), RelationRule::ps_adjacent_comm, Direction::forward).size() == 1);
  CHECK(find_matches(W("1"), RelationRule::free_inverse, Direction::backward).empty());
}

TEST_CASE("every rule preserves degree statistics and is reversible") {
  std::mt19937_64 rng(2024);
  for (RelationRule rule : kAllRules) {
    CAPTURE(rule_name(rule));
    int applied = 0;
    while (applied < 200) {
      int n = pick(rng, 2, 6);
      std::vector<Letter> pattern = forward_pattern(rule, n, rng);
      if (pattern.empty()) continue;
      PseudoWord base = random_word(n, static_cast<std::size_t>(pick(rng, 0, 6)), 3, rng());
      std::size_t pos = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(base.size())));
      std::vector<Letter> letters = base.letters();
      letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), pattern.begin(), pattern.end());
      PseudoWord w(n, letters);

      RelationInstance fwd{rule, pos, Direction::forward, std::nullopt};
      REQUIRE(matches(w, fwd));
      PseudoWord out = apply_relation(w, fwd);
      CHECK(out.degree_stats() == w.degree_stats());
      CHECK(out.strands() == w.strands());

      RelationInstance back{rule, pos, Direction::backward, std::nullopt};
      if (rule == RelationRule::free_inverse) back.insertion = pattern[0];
      REQUIRE(matches(out, back));
      CHECK(apply_relation(out, back) == w);
      ++applied;
    }
  }
}

TEST_CASE("markov move examples") {
  PseudoWord s = markov_move(W("1 1 1"), markov::StabPseudo{});
  CHECK(s == W("1 1 1 p2"));
  CHECK(s.strands() == 3);
  CHECK(markov_move(W("1 p1"), markov::Commute{1}) == W("p1 1"));
  CHECK(markov_move(W("p1"), markov::Conjugate{W("1")}) == W("-1 p1 1"));
  CHECK(markov_move(W("1"), markov::StabPositive{}) == W("1 2"));
  CHECK(markov_move(W("1"), markov::StabNegative{}) == W("1 -2"));
  CHECK(markov_move(W("1 -2", 3), markov::Destabilize{}) == W("1"));
  CHECK(markov_move(W("p1"), markov::Conjugate{PseudoWord()}) == W("p1"));
}

TEST_CASE("markov move errors") {
  CHECK_THROWS_AS(markov_move(W("1"), markov::Conjugate{W("p1")}), IllegalConjugator);
  CHECK_THROWS_AS(markov_move(W("2 1 2"), markov::Destabilize{}), IllegalDestab);
  CHECK_THROWS_AS(markov_move(W("2 1"), markov::Destabilize{}), IllegalDestab);
  CHECK_THROWS_AS(markov_move(W(""), markov::Destabilize{}), IllegalDestab);
  CHECK_THROWS_AS(markov_move(W("1"), markov::Commute{2}), std::out_of_range);
}

TEST_CASE("stabilize then destabilize is the identity") {
  const MarkovMove stabs[] = {markov::StabPositive{}, markov::StabNegative{}, markov::StabPseudo{}};
  for (std::uint64_t s = 0; s < 100; ++s) {
    PseudoWord w = random_word(1 + static_cast<int>(s % 5), s % 9, 3, derive_seed(5, s));
    for (const auto& m : stabs) CHECK(markov_move(markov_move(w, m), markov::Destabilize{}) == w);
  }
}

TEST_CASE("conjugation by beta then beta inverse reduces to the word") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    int n = 2 + static_cast<int>(s % 4);
    PseudoWord w = random_word(n, s % 8, 3, derive_seed(6, s));
    PseudoWord beta = random_word(n, s % 5, 0, derive_seed(7, s));
    PseudoWord there = markov_move(w, markov::Conjugate{beta});
    PseudoWord back = markov_move(there, markov::Conjugate{beta.inverse()});
    CHECK(free_reduce(back) == free_reduce(w));
    CHECK(there.degree_stats() == w.degree_stats());
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(W("1 2 -2 -1 p1")) == W("p1", 3));
  CHECK(free_reduce(W("1 p1 -1")) == W("1 p1 -1"));
  CHECK(free_reduce(W("1 1")) == W("1 1"));
}

TEST_CASE("random words") {
  CHECK(random_word(1, 0, 0, 3).empty());
  CHECK(random_word(1, 5, 2, 3).empty());
  for (std::uint64_t s = 0; s < 50; ++s) {
    PseudoWord w = random_word(3, 5, 0, s);
    CHECK(w.size() == 5);
    CHECK(w.is_classical());
    CHECK(random_word(4, 8, 2, s).pseudo_degree() <= 2);
    CHECK(random_word(4, 8, 2, s) == random_word(4, 8, 2, s));
  }
  CHECK(random_word(5, 12, 4, 1) != random_word(5, 12, 4, 2));
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}
