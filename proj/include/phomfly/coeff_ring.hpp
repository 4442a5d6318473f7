// Coefficient field Q(q, z, X, Y)[B] / (B^2 - (z + 1 - q) / (q z)).
#pragma once

#include <array>
#include <string>

#include "phomfly/errors.hpp"
#include "phomfly/multi_poly.hpp"

namespace phomfly {

/// num / den over Z[q, z, X, Y]. Kept with unit joint content, no common
/// monomial factor and den's leading coefficient positive; common polynomial
/// factors are cancelled when the heuristic gcd finds them. Equality is
/// decided by cross-multiplication, so the representation need not be unique.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(MultiPoly num) : num_(std::move(num)), den_(1) { normalize(false); }  // NOLINT
  RationalFn(MultiPoly num, MultiPoly den);

  static RationalFn variable(Var v) { return RationalFn(MultiPoly::variable(v)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  RationalFn operator-() const;
  RationalFn operator+(const RationalFn& rhs) const;
  RationalFn operator-(const RationalFn& rhs) const { return *this + (-rhs); }
  RationalFn operator*(const RationalFn& rhs) const;
  RationalFn operator/(const RationalFn& rhs) const { return *this * rhs.inverse(); }
  RationalFn& operator+=(const RationalFn& rhs) { return *this = *this + rhs; }
  RationalFn& operator-=(const RationalFn& rhs) { return *this = *this - rhs; }
  RationalFn& operator*=(const RationalFn& rhs) { return *this = *this * rhs; }
  RationalFn& operator/=(const RationalFn& rhs) { return *this = *this / rhs; }

  /// Throws DivisionByZero on zero.
  RationalFn inverse() const;
  RationalFn pow(int e) const;

  /// a/b == c/d iff a*d == c*b.
  bool operator==(const RationalFn& rhs) const;
  bool operator!=(const RationalFn& rhs) const { return !(*this == rhs); }

  /// Throws InvalidPoint when the denominator vanishes at the point.
  Rational evaluate(const Rational (&point)[kNumVars]) const;

  /// "num" when den is 1, "(num)/(den)" otherwise.
  std::string to_string() const;

 private:
  void normalize(bool try_gcd);

  MultiPoly num_;
  MultiPoly den_;
};

/// A point for evaluation: values of q, z, X, Y and of B.
struct EvalPoint {
  Rational vars[kNumVars];
  Rational b;

  /// Picks q and B freely and solves B^2 q z = z + 1 - q for z.
  static EvalPoint consistent(const Rational& q, const Rational& b, const Rational& x,
                              const Rational& y);
};

/// part0 + part1 * B, with B^2 rewritten to (z + 1 - q) / (q z) on every
/// multiplication.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(long c) : part0_(c) {}                          // NOLINT(google-explicit-constructor)
  ExtScalar(RationalFn p0) : part0_(std::move(p0)) {}       // NOLINT(google-explicit-constructor)
  ExtScalar(RationalFn p0, RationalFn p1) : part0_(std::move(p0)), part1_(std::move(p1)) {}

  static ExtScalar variable(Var v) { return ExtScalar(RationalFn::variable(v)); }
  static ExtScalar B() { return ExtScalar(RationalFn(0), RationalFn(1)); }
  /// (z + 1 - q) / (q z), the value of B^2.
  static const RationalFn& b_squared();

  const RationalFn& part0() const { return part0_; }
  const RationalFn& part1() const { return part1_; }
  bool is_zero() const { return part0_.is_zero() && part1_.is_zero(); }

  ExtScalar operator-() const { return {-part0_, -part1_}; }
  ExtScalar operator+(const ExtScalar& rhs) const;
  ExtScalar operator-(const ExtScalar& rhs) const;
  ExtScalar operator*(const ExtScalar& rhs) const;
  ExtScalar operator/(const ExtScalar& rhs) const { return *this * rhs.inverse(); }
  ExtScalar& operator+=(const ExtScalar& rhs) { return *this = *this + rhs; }
  ExtScalar& operator-=(const ExtScalar& rhs) { return *this = *this - rhs; }
  ExtScalar& operator*=(const ExtScalar& rhs) { return *this = *this * rhs; }

  /// a^2 - b^2 (z + 1 - q)/(q z) for a + bB.
  RationalFn norm() const;
  /// Throws NotInvertible when the norm vanishes.
  ExtScalar inverse() const;
  /// Negative exponents go through inverse().
  ExtScalar pow(int e) const;

  bool operator==(const ExtScalar& rhs) const;
  bool operator!=(const ExtScalar& rhs) const { return !(*this == rhs); }

  /// Throws InvalidPoint if the point violates B^2 q z = z + 1 - q or a
  /// denominator vanishes.
  Rational evaluate(const EvalPoint& point) const;

  /// "(num0)/(den0) + ((num1)/(den1))*B"; unit denominators are dropped and a
  /// zero B-part is omitted.
  std::string to_string() const;

 private:
  RationalFn part0_;
  RationalFn part1_;
};

inline ExtScalar operator*(long c, const ExtScalar& s) { return ExtScalar(c) * s; }

}  // namespace phomfly
