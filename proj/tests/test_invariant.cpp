#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phomfly/invariant.hpp"
#include "test_support.hpp"

using namespace phomfly;
using namespace phomfly::testing;

namespace {

PseudoWord W(const char* text, std::optional<int> n = std::nullopt) { return parse_word(text, n); }
const Constants& K() { return constants(); }
ExtScalar z_minus() { return frac(w(), q()); }
ExtScalar pseudo_factor() { return sX() * sz() + sY() * z_minus(); }

}  // namespace

TEST_CASE("normalization constants") {
  const Constants& c = K();
  CHECK(c.A * c.B * sz() == ExtScalar(1));
  CHECK(c.A * c.B_inverse * z_minus() == ExtScalar(1));
  CHECK(c.A * c.C * pseudo_factor() == ExtScalar(1));
  CHECK(c.B * c.B == z_minus() * sz().inverse());
  CHECK(c.B * c.B_inverse == ExtScalar(1));
  CHECK(c.A == ExtScalar(RationalFn(0), RationalFn(q(), w())));
  CHECK(c.z_minus == z_minus());
  CHECK(c.pseudo_factor == pseudo_factor());
  CHECK(c.lambda_plus + c.lambda_minus == ExtScalar(1));
  CHECK(normalization(1, 0, 0) == ExtScalar(1));
  CHECK(normalization(3, -2, 1) == c.A * c.A * c.B_inverse * c.B_inverse * c.C);
}

TEST_CASE("resolve examples") {
  ExtScalar q_inv = sq().inverse();
  Permutation e = Permutation::identity(2), s1 = Permutation::from_generators(2, {1});
  HeckeElement p1 = HeckeElement::basis(s1, sX() + sY() * q_inv) +
                    HeckeElement::basis(e, sY() * (q_inv - ExtScalar(1)));
  CHECK(resolve(W("p1")) == p1);
  HeckeElement g1p1 = HeckeElement::basis(s1, sX() * (sq() - ExtScalar(1))) +
                      HeckeElement::basis(e, sX() * sq() + sY());
  CHECK(resolve(W("1 p1")) == g1p1);
  for (std::uint64_t s = 0; s < 30; ++s) {
    PseudoWord c = random_word(2 + static_cast<int>(s % 3), 6, 0, s);
    CHECK(resolve(c) == word_to_element(c));
  }
}

TEST_CASE("resolution respects every defining relation") {
  for (int n = 2; n <= 5; ++n) {
    Report r = rho_relation_check(n);
    CHECK(r.instances > 0);
    CHECK(r.failures.empty());
  }
  CHECK(resolve(W("p1 p3")) == resolve(W("p3 p1")));
  CHECK(resolve(W("1 2 p1")) == resolve(W("p2 1 2")));
  CHECK(resolve(W("p1 1")) == resolve(W("1 p1")));
  CHECK(resolve(W("p1 -1")) == resolve(W("-1 p1")));
  CHECK_THROWS_AS(rho_relation_check(1), std::invalid_argument);
}

TEST_CASE("resolution does not respect pseudo commutation with a neighbour") {
  // p1 p2 = p2 p1 is not a relation of the monoid; the images differ.
  CHECK(resolve(W("p1 p2")) != resolve(W("p2 p1")));
}

TEST_CASE("induced trace and P examples") {
  CHECK(induced_trace(W("p1")) == pseudo_factor());
  CHECK(induced_trace(W("1 p1")) == sX() * ((sq() - ExtScalar(1)) * sz() + sq()) + sY());
  CHECK(induced_trace(PseudoWord()) == ExtScalar(1));
  const Constants& c = K();
  CHECK(invariant_P(PseudoWord()) == ExtScalar(1));
  CHECK(invariant_P(W("p1")) == ExtScalar(1));
  CHECK(invariant_P(W("1")) == ExtScalar(1));
  CHECK(invariant_P(W("1 p1")) == c.A * c.B * c.C * (sX() * ((sq() - ExtScalar(1)) * sz() + sq()) + sY()));
  CHECK(invariant_P(W("", 2)) == c.A);
}

TEST_CASE("classical invariant") {
  const Constants& c = K();
  CHECK(classical_H(W("1")) == ExtScalar(1));
  CHECK(classical_H(W("-1")) == ExtScalar(1));
  CHECK(classical_H(W("1 1 1")) == c.A * c.B.pow(3) * tr2_power_oracle(3));
  CHECK(tr2_power_oracle(3) == (sq() * sq() - sq() + ExtScalar(1)) * sz() + sq() * sq() - sq());
  CHECK_THROWS_AS(classical_H(W("p1")), PseudoLetterPresent);
  for (std::uint64_t s = 0; s < 30; ++s) {
    PseudoWord cw = random_word(1 + static_cast<int>(s % 4), 6, 0, s);
    CHECK(classical_H(cw) == invariant_P(cw));
  }
}

TEST_CASE("distinguishes the trefoil from the unknot") {
  CHECK(invariant_P(W("1 1 1")) != invariant_P(PseudoWord()));
  CHECK(invariant_P(W("1 1 1")) != invariant_P(W("-1 -1 -1")));
}

TEST_CASE("states") {
  StateResolution s = StateResolution::from_index(5, 3);
  CHECK(s.choices == std::vector<int>{-1, 1, -1});
  CHECK(s.r_plus == 1);
  CHECK(s.r_minus == 2);
  PseudoWord w = W("p1 2 p2 -1 p1");
  PseudoWord ws = apply_state(w, s);
  CHECK(ws == W("-1 2 2 -1 -1"));
  CHECK(ws.exponent_sum() == w.exponent_sum() + s.r_plus - s.r_minus);
  CHECK_THROWS_AS(apply_state(w, StateResolution::from_index(0, 2)), std::invalid_argument);
}

TEST_CASE("state sum") {
  const Constants& c = K();
  CHECK(c.C * (sX() * c.B_inverse + sY() * c.B) == ExtScalar(1));
  CHECK(state_sum_P(W("p1")) == ExtScalar(1));
  CHECK(state_sum_P(W("1 1 -2", 3)) == classical_H(W("1 1 -2", 3)));
  for (std::uint64_t s = 0; s < 40; ++s) {
    PseudoWord pw = random_word(2 + static_cast<int>(s % 3), 7, 5, derive_seed(3, s));
    CHECK(state_sum_P(pw) == invariant_P(pw));
  }
  CHECK_THROWS_AS(state_sum_P(W("p1 p1 p1"), 4), StateBudgetExceeded);
  CHECK_NOTHROW(state_sum_P(W("p1 p1"), 4));
}

TEST_CASE("pseudo skein") {
  PseudoSkeinResult r = pseudo_skein_check(W("p1"), 0);
  CHECK(r.holds);
  CHECK(r.p_pseudo == ExtScalar(1));
  CHECK(r.p_plus == ExtScalar(1));
  CHECK(r.p_minus == ExtScalar(1));
  PseudoSkeinResult g = pseudo_skein_check(W("1 p1"), 1);
  CHECK(g.holds);
  CHECK(g.p_pseudo == invariant_P(W("1 p1")));
  CHECK_THROWS_AS(pseudo_skein_check(W("1 p1"), 0), MarkNotPseudo);
  CHECK_THROWS_AS(pseudo_skein_check(W("1 p1"), 2), MarkNotPseudo);
}

TEST_CASE("classical skein") {
  const Constants& c = K();
  ClassicalSkeinResult r = classical_skein_check(W("", 2), 0, 1);
  CHECK(r.holds);
  CHECK(r.p_zero == c.A);
  CHECK(c.B_inverse - sq() * c.B == (sq() - ExtScalar(1)) * c.A);
  CHECK(classical_skein_check(W("1 1"), 2, 1).holds);
  CHECK(classical_skein_check(W("1 -2 p1 2", 4), 1, 3).holds);
  CHECK_THROWS_AS(classical_skein_check(W("1"), 2, 1), std::out_of_range);
}

TEST_CASE("skein evaluation") {
  CHECK(skein_evaluate(W("p1")) == ExtScalar(1));
  CHECK(skein_evaluate(W("1 1 1")) == classical_H(W("1 1 1")));
  for (std::uint64_t s = 0; s < 40; ++s) {
    PseudoWord pw = random_word(2 + static_cast<int>(s % 3), 7, 4, derive_seed(4, s));
    ExtScalar p = invariant_P(pw);
    CHECK(skein_evaluate(pw) == p);
    CHECK(skein_evaluate(pw, ResolutionOrder::rightmost) == p);
  }
}

TEST_CASE("family s1^k p1") {
  const Constants& c = K();
  CHECK(family_word(2) == W("1 1 p1"));
  CHECK(family_word(-1) == W("-1 p1"));
  CHECK(family_alpha_k(0).invariant == ExtScalar(1));
  CHECK(family_alpha_k(1).invariant == c.A * c.B * c.C * (sX() * ((sq() - ExtScalar(1)) * sz() + sq()) + sY()));
  for (int k = -3; k <= 5; ++k) {
    CAPTURE(k);
    FamilyResult r = family_alpha_k(k);
    CHECK(r.agrees);
    ExtScalar b_power = k >= 0 ? c.B.pow(k) : c.B_inverse.pow(-k);
    ExtScalar oracle = c.A * b_power * c.C * (sX() * tr2_power_oracle(k + 1) + sY() * tr2_power_oracle(k - 1));
    CHECK(r.invariant == oracle);
  }
}

TEST_CASE("dropping the pseudo normalization breaks invariance") {
  // Without the C^d factor, P would change under pseudo-stabilization.
  PseudoWord w = W("1 p1");
  PseudoWord stab = markov_move(w, markov::StabPseudo{});
  auto without_c = [](const PseudoWord& x) {
    return normalization(x.strands(), x.exponent_sum(), 0) * induced_trace(x);
  };
  CHECK(without_c(stab) != without_c(w));
  CHECK(invariant_P(stab) == invariant_P(w));
}

TEST_CASE("evaluation at a consistent point") {
  std::mt19937_64 rng(8);
  EvalPoint p = random_point(rng);
  CHECK(invariant_P(W("p1")).evaluate(p) == 1);
  CHECK(K().C.evaluate(p) * (p.vars[2] / p.b + p.vars[3] * p.b) == 1);
}
