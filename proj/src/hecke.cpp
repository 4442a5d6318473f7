#include "phomfly/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace phomfly {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v < 1 || v > images_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::from_generators(int n, const std::vector<int>& gens) {
  Permutation p = identity(n);
  for (int i : gens) p = p.times_generator(i);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::times_generator(int i) const {
  if (i < 1 || i >= size()) throw IndexOutOfRange("generator index out of range");
  Permutation p = *this;
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < w.size(); ++i) {
      if (w.has_descent(i)) {
        word.push_back(i);
        w = w.times_generator(i);
        found = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation Permutation::embedded(int n) const {
  if (n < size()) throw std::invalid_argument("cannot embed into fewer strands");
  Permutation p = *this;
  for (int i = size(); i < n; ++i) p.images_.push_back(static_cast<std::uint8_t>(i + 1));
  return p;
}

Permutation Permutation::stripped() const {
  Permutation p = *this;
  while (p.images_.size() > 1 && p.images_.back() == p.images_.size()) p.images_.pop_back();
  return p;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

CosetDecomposition coset_decompose(const Permutation& w) {
  const int n = w.size();
  int j = n;
  while (w[j] != n) --j;
  std::vector<std::uint8_t> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos)
    if (pos != j) v.push_back(static_cast<std::uint8_t>(w[pos]));
  v.push_back(static_cast<std::uint8_t>(n));
  std::vector<int> tail;
  for (int i = n - 1; i >= j; --i) tail.push_back(i);
  return {Permutation(std::move(v)), std::move(tail)};
}

// ---------------------------------------------------------------------------

namespace {

const ExtScalar& q_scalar() {
  static const ExtScalar v = ExtScalar::variable(Var::q);
  return v;
}
const ExtScalar& q_minus_one() {
  static const ExtScalar v = ExtScalar::variable(Var::q) - ExtScalar(1);
  return v;
}
const ExtScalar& q_inverse() {
  static const ExtScalar v = ExtScalar::variable(Var::q).inverse();
  return v;
}
const ExtScalar& q_inverse_minus_one() {
  static const ExtScalar v = q_inverse() - ExtScalar(1);
  return v;
}

}  // namespace

HeckeElement HeckeElement::identity(int n) { return basis(Permutation::identity(n)); }

HeckeElement HeckeElement::basis(const Permutation& w, ExtScalar coeff) {
  HeckeElement e(w.size());
  e.add_term(w, coeff);
  return e;
}

ExtScalar HeckeElement::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ExtScalar() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const ExtScalar& c) {
  if (w.size() != n_) throw std::invalid_argument("permutation size does not match the algebra");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& rhs) const {
  int n = std::max(n_, rhs.n_);
  HeckeElement out = embedded(n);
  for (const auto& [w, c] : rhs.embedded(n).terms_) out.add_term(w, c);
  return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& rhs) const { return *this + rhs.scaled(ExtScalar(-1)); }

HeckeElement HeckeElement::scaled(const ExtScalar& c) const {
  HeckeElement out(n_);
  if (c.is_zero()) return out;
  for (const auto& [w, coef] : terms_) out.terms_.emplace(w, coef * c);
  return out;
}

HeckeElement HeckeElement::operator*(const HeckeElement& rhs) const {
  int n = std::max(n_, rhs.n_);
  HeckeElement lhs = embedded(n);
  HeckeElement out(n);
  for (const auto& [w, c] : rhs.embedded(n).terms_) {
    HeckeElement part = lhs;
    for (int i : w.reduced_word()) part = part.right_mul_gen(i, 1);
    for (const auto& [u, d] : part.terms_) out.add_term(u, d * c);
  }
  return out;
}

HeckeElement HeckeElement::right_mul_gen(int i, int sign) const {
  if (i < 1 || i >= n_) throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range");
  HeckeElement out(n_);
  for (const auto& [w, c] : terms_) {
    Permutation ws = w.times_generator(i);
    bool descent = w.has_descent(i);
    if (sign > 0) {
      if (!descent) {
        out.add_term(ws, c);
      } else {
        out.add_term(w, c * q_minus_one());
        out.add_term(ws, c * q_scalar());
      }
    } else {
      // g^-1 = q^-1 g + (q^-1 - 1); on a descent the two pieces collapse to T_ws.
      if (!descent) {
        out.add_term(ws, c * q_inverse());
        out.add_term(w, c * q_inverse_minus_one());
      } else {
        out.add_term(ws, c);
      }
    }
  }
  return out;
}

HeckeElement HeckeElement::embedded(int n) const {
  if (n == n_) return *this;
  HeckeElement out(n);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w.embedded(n), c);
  return out;
}

bool HeckeElement::operator==(const HeckeElement& rhs) const {
  int n = std::max(n_, rhs.n_);
  HeckeElement a = embedded(n), b = rhs.embedded(n);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") * T" + w.to_string();
  }
  return out;
}

HeckeElement word_to_element(const PseudoWord& w) {
  if (!w.is_classical()) throw PseudoLetterPresent();
  HeckeElement e = HeckeElement::identity(w.strands());
  for (const auto& l : w.letters()) e = e.right_mul_gen(l.index, l.sign);
  return e;
}

// ---------------------------------------------------------------------------

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

struct TraceCache {
  std::shared_mutex mutex;
  std::unordered_map<Permutation, MultiPoly, PermHash> values;
};

TraceCache& trace_cache() {
  static TraceCache cache;
  return cache;
}

using PolyTerms = std::map<Permutation, MultiPoly>;

void add_poly_term(PolyTerms& terms, const Permutation& w, const MultiPoly& c) {
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

// Positive generators only, so coefficients stay in Z[q].
PolyTerms poly_right_mul(const PolyTerms& terms, int i) {
  static const MultiPoly q = MultiPoly::variable(Var::q);
  static const MultiPoly q1 = q - MultiPoly(1);
  PolyTerms out;
  for (const auto& [w, c] : terms) {
    Permutation ws = w.times_generator(i);
    if (!w.has_descent(i)) {
      add_poly_term(out, ws, c);
    } else {
      add_poly_term(out, w, c * q1);
      add_poly_term(out, ws, c * q);
    }
  }
  return out;
}

MultiPoly compute_basis_trace(const Permutation& w) {
  const int n = w.size();
  if (n <= 1) return MultiPoly(1);
  // w is stripped, so w(n) != n and the coset tail is non-empty:
  // tr(T_v g_{n-1} g_{n-2} ... g_j) = z tr(T_v g_{n-2} ... g_j), all inside H_{n-1}.
  CosetDecomposition cd = coset_decompose(w);
  std::vector<std::uint8_t> head(cd.v.images().begin(), cd.v.images().end() - 1);
  PolyTerms inner;
  inner.emplace(Permutation(std::move(head)), MultiPoly(1));
  for (std::size_t k = 1; k < cd.tail.size(); ++k) inner = poly_right_mul(inner, cd.tail[k]);
  MultiPoly sum;
  for (const auto& [u, c] : inner) sum += c * basis_trace(u);
  return sum * MultiPoly::variable(Var::z);
}

}  // namespace

const MultiPoly& basis_trace(const Permutation& w) {
  Permutation key = w.stripped();
  TraceCache& cache = trace_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;
  }
  MultiPoly value = compute_basis_trace(key);
  std::unique_lock lock(cache.mutex);
  return cache.values.try_emplace(std::move(key), std::move(value)).first->second;
}

std::size_t basis_trace_cache_size() {
  std::shared_lock lock(trace_cache().mutex);
  return trace_cache().values.size();
}

ExtScalar ocneanu_trace(const HeckeElement& elem) {
  ExtScalar sum;
  for (const auto& [w, c] : elem.terms()) sum += c * ExtScalar(RationalFn(basis_trace(w)));
  return sum;
}

}  // namespace phomfly
