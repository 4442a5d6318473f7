#include "phomfly/multi_poly.hpp"

#include <algorithm>
#include <sstream>

namespace phomfly {

namespace {

constexpr std::uint64_t kOverflowMask = 0x8000800080008000ull;

void merge_sorted_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer acc = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      acc += terms[j].coeff;
      ++j;
    }
    if (acc != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(acc);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Monomial Monomial::from_exponents(unsigned eq, unsigned ez, unsigned ex, unsigned ey) {
  if (eq > kMaxExponent || ez > kMaxExponent || ex > kMaxExponent || ey > kMaxExponent)
    throw std::overflow_error("monomial exponent out of range");
  return Monomial((std::uint64_t{eq} << 48) | (std::uint64_t{ez} << 32) |
                  (std::uint64_t{ex} << 16) | std::uint64_t{ey});
}

Monomial Monomial::of(Var v, unsigned power) {
  if (power > kMaxExponent) throw std::overflow_error("monomial exponent out of range");
  return Monomial(std::uint64_t{power} << shift(v));
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (unsigned i = 0; i < kNumVars; ++i) d += exponent(i);
  return d;
}

Monomial Monomial::operator*(Monomial rhs) const {
  std::uint64_t sum = packed_ + rhs.packed_;
  if (sum & kOverflowMask) throw std::overflow_error("monomial exponent overflow");
  return Monomial(sum);
}

bool Monomial::divides(Monomial other) const {
  for (unsigned i = 0; i < kNumVars; ++i)
    if (exponent(i) > other.exponent(i)) return false;
  return true;
}

Monomial Monomial::gcd(Monomial a, Monomial b) {
  return from_exponents(std::min(a.exponent(0u), b.exponent(0u)), std::min(a.exponent(1u), b.exponent(1u)),
                        std::min(a.exponent(2u), b.exponent(2u)), std::min(a.exponent(3u), b.exponent(3u)));
}

Monomial Monomial::lcm(Monomial a, Monomial b) {
  return from_exponents(std::max(a.exponent(0u), b.exponent(0u)), std::max(a.exponent(1u), b.exponent(1u)),
                        std::max(a.exponent(2u), b.exponent(2u)), std::max(a.exponent(3u), b.exponent(3u)));
}

std::string Monomial::to_string() const {
  std::string out;
  for (unsigned i = 0; i < kNumVars; ++i) {
    unsigned e = exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.push_back({Monomial(), Integer(c)});
}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

MultiPoly::MultiPoly(Monomial m, Integer c) {
  if (c != 0) terms_.push_back({m, std::move(c)});
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  merge_sorted_terms(terms);
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

unsigned MultiPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = Monomial::kMaxExponent;
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
  return d;
}

Integer MultiPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
  return g;
}

Integer MultiPoly::max_norm() const {
  Integer m = 0;
  for (const auto& t : terms_)
    if (mpz_cmpabs(t.coeff.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coeff);
  return m;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly r;
  r.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = rhs.terms_.begin(), be = rhs.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->mono < b->mono)) {
      r.terms_.push_back(*a++);
    } else if (a == ae || b->mono < a->mono) {
      r.terms_.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) r.terms_.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  if (rhs.is_constant()) return scaled(rhs.terms_[0].coeff);
  if (is_constant()) return rhs.scaled(terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(std::move(prod));
}

MultiPoly MultiPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::shifted(Monomial m) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::div_exact(const Integer& c) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return r;
}

MultiPoly MultiPoly::div_exact(Monomial m) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.mono = m.quotient_of(t.mono);
  return r;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return MultiPoly();
  if (rhs.is_monomial()) {
    const Term& d = rhs.terms_[0];
    MultiPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!d.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), d.coeff.get_mpz_t()))
        return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), d.coeff.get_mpz_t());
      r.terms_.push_back({d.mono.quotient_of(t.mono), std::move(c)});
    }
    return r;
  }
  // Every quotient term must fit in the degree box deg(this) - deg(rhs).
  unsigned bound[kNumVars];
  for (unsigned i = 0; i < kNumVars; ++i) {
    unsigned da = degree(i), db = rhs.degree(i);
    if (db > da) return std::nullopt;
    bound[i] = da - db;
  }
  const Term& lead = rhs.leading();
  std::vector<Term> quotient;
  MultiPoly rem = *this;
  while (!rem.is_zero()) {
    const Term& rt = rem.leading();
    if (!lead.mono.divides(rt.mono) || !mpz_divisible_p(rt.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
      return std::nullopt;
    Monomial qm = lead.mono.quotient_of(rt.mono);
    for (unsigned i = 0; i < kNumVars; ++i)
      if (qm.exponent(i) > bound[i]) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), rt.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
    MultiPoly step = rhs.shifted(qm).scaled(qc);
    quotient.push_back({qm, std::move(qc)});
    rem -= step;
  }
  return from_terms(std::move(quotient));
}

MultiPoly MultiPoly::substitute(Var v, const Integer& value) const {
  unsigned top = degree(v);
  std::vector<Integer> powers(top + 1);
  powers[0] = 1;
  for (unsigned i = 1; i <= top; ++i) powers[i] = powers[i - 1] * value;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.without(v), t.coeff * powers[t.mono.exponent(v)]});
  return from_terms(std::move(out));
}

Rational MultiPoly::evaluate(const Rational (&point)[kNumVars]) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    for (unsigned i = 0; i < kNumVars; ++i) {
      unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      p.canonicalize();
      value *= p;
    }
    sum += value;
  }
  return sum;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff) return false;
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (it->mono.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << it->mono.to_string();
    }
  }
  return os.str();
}

}  // namespace phomfly
