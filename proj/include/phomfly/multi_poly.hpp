// Sparse integer polynomials in the commuting variables q, z, X, Y.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace phomfly {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Var : unsigned { q = 0, z = 1, X = 2, Y = 3 };

inline constexpr unsigned kNumVars = 4;
inline constexpr const char* kVarNames[kNumVars] = {"q", "z", "X", "Y"};

/// Exponent vector (eq, ez, eX, eY) packed into 16-bit fields, q in the high
/// field, so that integer comparison of the packed word is lex order.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 0x7fff;

  constexpr Monomial() = default;

  static Monomial from_exponents(unsigned eq, unsigned ez, unsigned ex, unsigned ey);
  static Monomial of(Var v, unsigned power = 1);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((packed_ >> shift(v)) & 0xffffu);
  }
  unsigned exponent(unsigned idx) const { return exponent(static_cast<Var>(idx)); }
  unsigned total_degree() const;
  bool is_one() const { return packed_ == 0; }
  std::uint64_t packed() const { return packed_; }

  Monomial operator*(Monomial rhs) const;
  bool divides(Monomial other) const;
  /// Requires divides(other).
  Monomial quotient_of(Monomial other) const { return Monomial(other.packed_ - packed_); }
  Monomial without(Var v) const { return Monomial(packed_ & ~(std::uint64_t{0xffff} << shift(v))); }

  static Monomial gcd(Monomial a, Monomial b);
  static Monomial lcm(Monomial a, Monomial b);

  auto operator<=>(const Monomial&) const = default;

  std::string to_string() const;

 private:
  explicit constexpr Monomial(std::uint64_t packed) : packed_(packed) {}
  static constexpr unsigned shift(Var v) { return 48u - 16u * static_cast<unsigned>(v); }

  std::uint64_t packed_ = 0;
};

struct Term {
  Monomial mono;
  Integer coeff;
};

/// Terms are kept sorted by ascending monomial with no zero coefficients, so
/// the leading term under lex order is terms().back().
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const Integer& c);
  MultiPoly(Monomial m, Integer c);

  static MultiPoly variable(Var v) { return MultiPoly(Monomial::of(v), Integer(1)); }
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.back(); }
  unsigned degree(Var v) const;
  unsigned degree(unsigned idx) const { return degree(static_cast<Var>(idx)); }
  unsigned min_degree(Var v) const;

  /// gcd of all coefficients (non-negative; zero for the zero polynomial).
  Integer content() const;
  /// gcd of all monomials.
  Monomial monomial_content() const;
  /// Largest absolute coefficient.
  Integer max_norm() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly& operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
  MultiPoly& operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }
  MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

  MultiPoly scaled(const Integer& c) const;
  MultiPoly shifted(Monomial m) const;
  MultiPoly pow(unsigned e) const;

  /// Exact division by an integer dividing every coefficient.
  MultiPoly div_exact(const Integer& c) const;
  /// Exact division by a monomial dividing every term.
  MultiPoly div_exact(Monomial m) const;
  /// Quotient if rhs divides this exactly over Z, nullopt otherwise.
  std::optional<MultiPoly> try_divide(const MultiPoly& rhs) const;

  /// Substitutes x_v = value, leaving a polynomial in the other variables.
  MultiPoly substitute(Var v, const Integer& value) const;
  Rational evaluate(const Rational (&point)[kNumVars]) const;

  bool operator==(const MultiPoly& rhs) const;
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  /// Terms in descending lex order, e.g. "3*q^2*z*X - z + 1".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// A common divisor of a and b over Z, found by heuristic evaluation and
/// interpolation. Returns nullopt when the heuristic gives up; callers treat
/// that as "no known common factor". Any returned value divides both inputs
/// exactly and has positive leading coefficient.
std::optional<MultiPoly> poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace phomfly
