// The Hecke algebra H_n(q) in the permutation basis {T_w}.
//
// Permutations are one-line arrays acting on positions; w * s_i swaps the
// entries in positions i and i+1, so products compose left to right.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "phomfly/braid_words.hpp"
#include "phomfly/coeff_ring.hpp"

namespace phomfly {

class Permutation {
 public:
  Permutation() = default;
  /// images holds w(1..n); throws std::invalid_argument if not a bijection.
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(int n);
  /// identity * s_{i1} * ... * s_{ik}
  static Permutation from_generators(int n, const std::vector<int>& gens);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int pos) const { return images_[static_cast<std::size_t>(pos - 1)]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  /// Inversion count.
  int length() const;
  bool is_identity() const;
  /// True when length(w * s_i) < length(w).
  bool has_descent(int i) const { return images_[i - 1] > images_[i]; }
  Permutation times_generator(int i) const;
  /// A reduced word: identity * s_{r1} * ... * s_{rk} == *this, k == length().
  std::vector<int> reduced_word() const;
  Permutation embedded(int n) const;
  /// Drops trailing fixed points, leaving size >= 1.
  Permutation stripped() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

inline int perm_length(const Permutation& w) { return w.length(); }

struct CosetDecomposition {
  Permutation v;          // v(n) == n
  std::vector<int> tail;  // empty, or n-1, n-2, ..., j
};

/// w = v * s_{n-1} * ... * s_j with length additive.
CosetDecomposition coset_decompose(const Permutation& w);

class HeckeElement {
 public:
  using TermMap = std::map<Permutation, ExtScalar>;

  explicit HeckeElement(int n = 1) : n_(n) {}
  static HeckeElement identity(int n);
  static HeckeElement basis(const Permutation& w, ExtScalar coeff = ExtScalar(1));

  int strands() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Zero when w is absent.
  ExtScalar coefficient(const Permutation& w) const;

  void add_term(const Permutation& w, const ExtScalar& c);
  HeckeElement operator+(const HeckeElement& rhs) const;
  HeckeElement operator-(const HeckeElement& rhs) const;
  HeckeElement scaled(const ExtScalar& c) const;
  HeckeElement operator*(const HeckeElement& rhs) const;

  /// elem * g_i^sign. Throws IndexOutOfRange unless 1 <= i <= n-1.
  HeckeElement right_mul_gen(int i, int sign) const;
  /// Reindexes into H_n for n >= strands().
  HeckeElement embedded(int n) const;

  bool operator==(const HeckeElement& rhs) const;
  bool operator!=(const HeckeElement& rhs) const { return !(*this == rhs); }

  /// "coef * T[3,1,2] + ..." in lex order of the one-line arrays.
  std::string to_string() const;

 private:
  int n_;
  TermMap terms_;
};

inline HeckeElement right_mul_gen(const HeckeElement& e, int i, int sign) { return e.right_mul_gen(i, sign); }

/// Left-to-right product of the generators of a classical word, from 1*T_e.
/// Throws PseudoLetterPresent.
HeckeElement word_to_element(const PseudoWord& w);

/// tr(T_w) as a polynomial in q and z; memoized on the stripped permutation.
const MultiPoly& basis_trace(const Permutation& w);

/// The Ocneanu trace: tr_1(1) = 1, tr_{n+1}(a) = tr_n(a),
/// tr_{n+1}(a g_n) = z tr_n(a), extended linearly.
ExtScalar ocneanu_trace(const HeckeElement& elem);

/// Number of memoized basis traces (for tests and diagnostics).
std::size_t basis_trace_cache_size();

}  // namespace phomfly
