#include "phomfly/invariant.hpp"

#include <chrono>

namespace phomfly {

using nlohmann::json;

json Report::to_json() const {
  return json{{"check", check}, {"instances", instances}, {"failures", failures}, {"elapsed_ms", elapsed_ms}};
}

namespace {

Constants build_constants() {
  const MultiPoly q = MultiPoly::variable(Var::q);
  const MultiPoly z = MultiPoly::variable(Var::z);
  const MultiPoly x = MultiPoly::variable(Var::X);
  const MultiPoly y = MultiPoly::variable(Var::Y);
  const MultiPoly w = z + MultiPoly(1) - q;  // q z_-
  const MultiPoly qz = q * z;
  const MultiPoly qu = x * qz + y * w;       // q (X z + Y z_-)

  Constants c;
  c.B = ExtScalar::B();
  c.B_inverse = ExtScalar(RationalFn(0), RationalFn(qz, w));
  c.A = ExtScalar(RationalFn(0), RationalFn(q, w));
  c.C = ExtScalar(RationalFn(0), RationalFn(qz, qu));
  c.z = ExtScalar(RationalFn(z));
  c.z_minus = ExtScalar(RationalFn(w, q));
  c.pseudo_factor = ExtScalar(RationalFn(qu, q));
  c.lambda_plus = ExtScalar::variable(Var::X) * c.C * c.B_inverse;
  c.lambda_minus = ExtScalar::variable(Var::Y) * c.C * c.B;
  return c;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

PseudoWord sigma_power(int k) {
  std::vector<Letter> letters;
  for (int i = 0; i < std::abs(k); ++i) letters.push_back(Letter::sigma(1, k < 0 ? -1 : 1));
  return {2, std::move(letters)};
}

}  // namespace

const Constants& constants() {
  static const Constants c = build_constants();
  return c;
}

ExtScalar normalization(int strands, int e, int d) {
  const Constants& c = constants();
  ExtScalar b_power = e >= 0 ? c.B.pow(e) : c.B_inverse.pow(-e);
  return c.A.pow(strands - 1) * b_power * c.C.pow(d);
}

HeckeElement resolve(const PseudoWord& w) {
  static const ExtScalar x = ExtScalar::variable(Var::X);
  static const ExtScalar y = ExtScalar::variable(Var::Y);
  HeckeElement e = HeckeElement::identity(w.strands());
  for (const auto& l : w.letters()) {
    if (l.is_pseudo()) {
      e = e.right_mul_gen(l.index, 1).scaled(x) + e.right_mul_gen(l.index, -1).scaled(y);
    } else {
      e = e.right_mul_gen(l.index, l.sign);
    }
  }
  return e;
}

Report rho_relation_check(int strands) {
  if (strands < 2) throw std::invalid_argument("relation check needs at least 2 strands");
  auto start = std::chrono::steady_clock::now();
  Report report{"rho", 0, {}, 0.0};
  const int top = strands - 1;
  auto check = [&](RelationRule rule, std::vector<Letter> lhs_letters) {
    PseudoWord lhs(strands, std::move(lhs_letters));
    PseudoWord rhs = apply_relation(lhs, {rule, 0, Direction::forward, std::nullopt});
    ++report.instances;
    if (resolve(lhs) != resolve(rhs))
      report.failures.push_back(json{{"strands", strands},
                                     {"rule", std::string(rule_name(rule))},
                                     {"lhs", lhs.to_string()},
                                     {"rhs", rhs.to_string()}});
  };
  const int signs[] = {1, -1};
  for (int i = 1; i <= top; ++i) {
    for (int j = 1; j <= top; ++j) {
      if (std::abs(i - j) < 2) continue;
      for (int a : signs)
        for (int b : signs) check(RelationRule::braid_comm, {Letter::sigma(i, a), Letter::sigma(j, b)});
      check(RelationRule::pp_comm, {Letter::pseudo(i), Letter::pseudo(j)});
      for (int a : signs) check(RelationRule::ps_far_comm, {Letter::pseudo(i), Letter::sigma(j, a)});
    }
    for (int a : signs) {
      check(RelationRule::ps_adjacent_comm, {Letter::pseudo(i), Letter::sigma(i, a)});
      check(RelationRule::free_inverse, {Letter::sigma(i, a), Letter::sigma(i, -a)});
    }
    if (i + 1 <= top) {
      for (int a : signs)
        check(RelationRule::braid_yang_baxter, {Letter::sigma(i, a), Letter::sigma(i + 1, a), Letter::sigma(i, a)});
      check(RelationRule::mixed_left, {Letter::sigma(i), Letter::sigma(i + 1), Letter::pseudo(i)});
      check(RelationRule::mixed_right, {Letter::sigma(i + 1), Letter::sigma(i), Letter::pseudo(i + 1)});
    }
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

ExtScalar induced_trace(const PseudoWord& w) { return ocneanu_trace(resolve(w)); }

ExtScalar invariant_P(const PseudoWord& w) {
  DegreeStats s = w.degree_stats();
  return normalization(w.strands(), s.e, s.d) * induced_trace(w);
}

ExtScalar classical_H(const PseudoWord& w) {
  if (!w.is_classical()) throw PseudoLetterPresent();
  return normalization(w.strands(), w.exponent_sum(), 0) * ocneanu_trace(word_to_element(w));
}

StateResolution StateResolution::from_index(std::uint64_t index, int d) {
  StateResolution s;
  s.choices.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    bool negative = (index >> k) & 1u;
    s.choices.push_back(negative ? -1 : 1);
    ++(negative ? s.r_minus : s.r_plus);
  }
  return s;
}

PseudoWord apply_state(const PseudoWord& w, const StateResolution& s) {
  std::vector<Letter> out;
  out.reserve(w.size());
  std::size_t k = 0;
  for (const auto& l : w.letters()) {
    if (!l.is_pseudo()) {
      out.push_back(l);
      continue;
    }
    if (k >= s.choices.size()) throw std::invalid_argument("state has fewer choices than pseudo letters");
    out.push_back(Letter::sigma(l.index, s.choices[k++]));
  }
  if (k != s.choices.size()) throw std::invalid_argument("state has more choices than pseudo letters");
  return {w.strands(), std::move(out)};
}

ExtScalar state_sum_P(const PseudoWord& w, std::uint64_t state_cap) {
  const int d = w.pseudo_degree();
  if (d >= 63 || (std::uint64_t{1} << d) > state_cap)
    throw StateBudgetExceeded("2^" + std::to_string(d) + " states exceed the cap of " + std::to_string(state_cap));
  const Constants& c = constants();
  const ExtScalar plus_weight = ExtScalar::variable(Var::X) * c.B_inverse;
  const ExtScalar minus_weight = ExtScalar::variable(Var::Y) * c.B;
  std::vector<ExtScalar> plus_pow{ExtScalar(1)}, minus_pow{ExtScalar(1)};
  for (int k = 1; k <= d; ++k) {
    plus_pow.push_back(plus_pow.back() * plus_weight);
    minus_pow.push_back(minus_pow.back() * minus_weight);
  }
  ExtScalar sum;
  const std::uint64_t states = std::uint64_t{1} << d;
  for (std::uint64_t index = 0; index < states; ++index) {
    StateResolution s = StateResolution::from_index(index, d);
    sum += plus_pow[static_cast<std::size_t>(s.r_plus)] * minus_pow[static_cast<std::size_t>(s.r_minus)] *
           classical_H(apply_state(w, s));
  }
  return c.C.pow(d) * sum;
}

ExtScalar skein_evaluate(const PseudoWord& w, ResolutionOrder order) {
  std::optional<std::size_t> mark;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!w[k].is_pseudo()) continue;
    mark = k;
    if (order == ResolutionOrder::leftmost) break;
  }
  if (!mark) return classical_H(w);
  const Constants& c = constants();
  int i = w[*mark].index;
  return c.lambda_plus * skein_evaluate(w.replaced(*mark, {Letter::sigma(i, 1)}), order) +
         c.lambda_minus * skein_evaluate(w.replaced(*mark, {Letter::sigma(i, -1)}), order);
}

PseudoSkeinResult pseudo_skein_check(const PseudoWord& w, std::size_t mark) {
  if (mark >= w.size() || !w[mark].is_pseudo()) throw MarkNotPseudo();
  const Constants& c = constants();
  int i = w[mark].index;
  PseudoSkeinResult r;
  r.p_pseudo = invariant_P(w);
  r.p_plus = invariant_P(w.replaced(mark, {Letter::sigma(i, 1)}));
  r.p_minus = invariant_P(w.replaced(mark, {Letter::sigma(i, -1)}));
  r.holds = r.p_pseudo == c.lambda_plus * r.p_plus + c.lambda_minus * r.p_minus;
  return r;
}

ClassicalSkeinResult classical_skein_check(const PseudoWord& context, std::size_t mark, int generator) {
  if (mark > context.size()) throw std::out_of_range("skein mark beyond word length");
  auto with = [&](std::optional<Letter> l) {
    std::vector<Letter> letters = context.letters();
    if (l) letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(mark), *l);
    return PseudoWord(context.strands(), std::move(letters));
  };
  const Constants& c = constants();
  const ExtScalar q = ExtScalar::variable(Var::q);
  ClassicalSkeinResult r;
  r.p_plus = invariant_P(with(Letter::sigma(generator, 1)));
  r.p_minus = invariant_P(with(Letter::sigma(generator, -1)));
  r.p_zero = invariant_P(with(std::nullopt));
  r.holds = c.B_inverse * r.p_plus - q * c.B * r.p_minus == (q - ExtScalar(1)) * r.p_zero;
  return r;
}

PseudoWord family_word(int k) {
  PseudoWord w = sigma_power(k);
  std::vector<Letter> letters = w.letters();
  letters.push_back(Letter::pseudo(1));
  return {2, std::move(letters)};
}

FamilyResult family_alpha_k(int k) {
  const Constants& c = constants();
  auto tr2 = [](int m) { return ocneanu_trace(word_to_element(sigma_power(m))); };
  ExtScalar b_power = k >= 0 ? c.B.pow(k) : c.B_inverse.pow(-k);
  FamilyResult r;
  r.invariant = invariant_P(family_word(k));
  r.closed_form = c.A * b_power * c.C *
                  (ExtScalar::variable(Var::X) * tr2(k + 1) + ExtScalar::variable(Var::Y) * tr2(k - 1));
  r.agrees = r.invariant == r.closed_form;
  return r;
}

}  // namespace phomfly
