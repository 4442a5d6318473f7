// Heuristic multivariate gcd: evaluate one variable at a large integer,
// recurse, and lift the result back by symmetric xi-adic expansion. Every
// candidate is confirmed by exact division, so a wrong guess is never
// returned; the heuristic only ever fails by giving up.

#include <algorithm>

#include "phomfly/multi_poly.hpp"

namespace phomfly {

namespace {

constexpr std::size_t kMaxEvaluationBits = 60000;
constexpr int kAttempts = 6;

MultiPoly positive_lead(MultiPoly p) {
  if (!p.is_zero() && p.leading().coeff < 0) return -p;
  return p;
}

/// Coefficients of p as a polynomial in v; index k holds the part with v^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, Var v) {
  std::vector<std::vector<Term>> buckets(p.degree(v) + 1);
  for (const auto& t : p.terms()) buckets[t.mono.exponent(v)].push_back({t.mono.without(v), t.coeff});
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(std::move(b)));
  return out;
}

std::optional<Var> first_variable(const MultiPoly& a, const MultiPoly& b) {
  for (unsigned i = 0; i < kNumVars; ++i)
    if (a.degree(i) > 0 || b.degree(i) > 0) return static_cast<Var>(i);
  return std::nullopt;
}

std::optional<MultiPoly> lift(MultiPoly gamma, const Integer& xi, Var v, unsigned max_degree) {
  Integer half = xi / 2;
  std::vector<Term> out;
  for (unsigned k = 0; !gamma.is_zero(); ++k) {
    if (k > max_degree) return std::nullopt;
    std::vector<Term> digit;
    digit.reserve(gamma.size());
    for (const auto& t : gamma.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.push_back({t.mono, r});
    }
    MultiPoly g = MultiPoly::from_terms(digit);
    for (auto& t : digit) out.push_back({t.mono * Monomial::of(v, k), std::move(t.coeff)});
    gamma = (gamma - g).div_exact(xi);
  }
  return MultiPoly::from_terms(std::move(out));
}

std::optional<MultiPoly> gcd_rec(const MultiPoly& a, const MultiPoly& b);

std::optional<MultiPoly> gcd_primitive(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  Var v = *first_variable(a, b);
  unsigned da = a.degree(v), db = b.degree(v);
  if (da == 0 || db == 0) {
    // One side is free of v: fold its gcd over the other side's v-coefficients.
    const MultiPoly& with_v = da == 0 ? b : a;
    std::optional<MultiPoly> g = da == 0 ? a : b;
    for (const auto& c : coefficients_in(with_v, v)) {
      if (c.is_zero()) continue;
      g = gcd_rec(*g, c);
      if (!g) return std::nullopt;
      if (g->is_constant()) break;
    }
    return g;
  }

  Integer xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(da, db) > kMaxEvaluationBits) return std::nullopt;
    auto gamma = gcd_rec(a.substitute(v, xi), b.substitute(v, xi));
    if (gamma) {
      auto lifted = lift(*gamma, xi, v, std::min(da, db));
      if (lifted && !lifted->is_zero()) {
        MultiPoly g = positive_lead(lifted->div_exact(lifted->content()));
        if (a.try_divide(g) && b.try_divide(g)) return g;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

std::optional<MultiPoly> gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  Monomial mono = Monomial::gcd(a.monomial_content(), b.monomial_content());
  MultiPoly ma = a.div_exact(a.monomial_content());
  MultiPoly mb = b.div_exact(b.monomial_content());
  Integer ca = ma.content(), cb = mb.content();
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  auto g = gcd_primitive(ma.div_exact(ca), mb.div_exact(cb));
  if (!g) return std::nullopt;
  return g->scaled(c).shifted(mono);
}

}  // namespace

std::optional<MultiPoly> poly_gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_rec(a, b); }

}  // namespace phomfly
