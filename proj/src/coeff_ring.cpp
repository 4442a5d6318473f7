#include "phomfly/coeff_ring.hpp"

namespace phomfly {

namespace {

const Rational& at(const Rational (&point)[kNumVars], Var v) { return point[static_cast<unsigned>(v)]; }

}  // namespace

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize(true);
}

void RationalFn::normalize(bool try_gcd) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  Monomial m = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!m.is_one()) {
    num_ = num_.div_exact(m);
    den_ = den_.div_exact(m);
  }
  if (try_gcd && !den_.is_monomial() && !num_.is_constant()) {
    if (auto g = poly_gcd(num_, den_); g && !g->is_constant()) {
      num_ = *num_.try_divide(*g);
      den_ = *den_.try_divide(*g);
    }
  }
  Integer c = num_.content();
  Integer dc = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
  if (den_.leading().coeff < 0) c = -c;
  if (c != 1) {
    num_ = num_.div_exact(c);
    den_ = den_.div_exact(c);
  }
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn RationalFn::operator+(const RationalFn& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  RationalFn r;
  if (den_ == rhs.den_) {
    r.num_ = num_ + rhs.num_;
    r.den_ = den_;
    r.normalize(!den_.is_monomial());
    return r;
  }
  if (den_.is_monomial() && rhs.den_.is_monomial()) {
    const Term& a = den_.leading();
    const Term& b = rhs.den_.leading();
    Monomial lm = Monomial::lcm(a.mono, b.mono);
    Integer lc;
    mpz_lcm(lc.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    r.num_ = num_.shifted(a.mono.quotient_of(lm)).scaled(lc / a.coeff) +
             rhs.num_.shifted(b.mono.quotient_of(lm)).scaled(lc / b.coeff);
    r.den_ = MultiPoly(lm, lc);
    r.normalize(false);
    return r;
  }
  MultiPoly g(1);
  if (auto found = poly_gcd(den_, rhs.den_)) g = *found;
  MultiPoly left = *den_.try_divide(g);
  MultiPoly right = *rhs.den_.try_divide(g);
  r.num_ = num_ * right + rhs.num_ * left;
  r.den_ = left * rhs.den_;
  r.normalize(true);
  return r;
}

RationalFn RationalFn::operator*(const RationalFn& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  MultiPoly a = num_, b = den_, c = rhs.num_, d = rhs.den_;
  auto cancel = [](MultiPoly& top, MultiPoly& bottom) {
    if (bottom.is_monomial() || top.is_constant()) return;
    if (auto g = poly_gcd(top, bottom); g && !g->is_constant()) {
      top = *top.try_divide(*g);
      bottom = *bottom.try_divide(*g);
    }
  };
  cancel(a, d);
  cancel(c, b);
  RationalFn r;
  r.num_ = a * c;
  r.den_ = b * d;
  r.normalize(false);
  return r;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RationalFn r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize(false);
  return r;
}

RationalFn RationalFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFn r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.normalize(false);
  return r;
}

bool RationalFn::operator==(const RationalFn& rhs) const {
  if (num_ == rhs.num_ && den_ == rhs.den_) return true;
  if (is_zero() != rhs.is_zero()) return false;
  return num_ * rhs.den_ == rhs.num_ * den_;
}

Rational RationalFn::evaluate(const Rational (&point)[kNumVars]) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw InvalidPoint("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFn::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

EvalPoint EvalPoint::consistent(const Rational& q, const Rational& b, const Rational& x,
                                const Rational& y) {
  Rational denom = b * b * q - 1;
  if (denom == 0 || q == 0) throw InvalidPoint("no consistent z for this choice of q and B");
  EvalPoint p;
  p.vars[static_cast<unsigned>(Var::q)] = q;
  p.vars[static_cast<unsigned>(Var::z)] = (1 - q) / denom;
  p.vars[static_cast<unsigned>(Var::X)] = x;
  p.vars[static_cast<unsigned>(Var::Y)] = y;
  p.b = b;
  return p;
}

const RationalFn& ExtScalar::b_squared() {
  static const RationalFn value(
      MultiPoly::variable(Var::z) + MultiPoly(1) - MultiPoly::variable(Var::q),
      MultiPoly::variable(Var::q) * MultiPoly::variable(Var::z));
  return value;
}

ExtScalar ExtScalar::operator+(const ExtScalar& rhs) const {
  return {part0_ + rhs.part0_, part1_ + rhs.part1_};
}

ExtScalar ExtScalar::operator-(const ExtScalar& rhs) const {
  return {part0_ - rhs.part0_, part1_ - rhs.part1_};
}

ExtScalar ExtScalar::operator*(const ExtScalar& rhs) const {
  if (part1_.is_zero() && rhs.part1_.is_zero()) return ExtScalar(part0_ * rhs.part0_);
  if (part1_.is_zero()) return {part0_ * rhs.part0_, part0_ * rhs.part1_};
  if (rhs.part1_.is_zero()) return {part0_ * rhs.part0_, part1_ * rhs.part0_};
  RationalFn p0 = part0_ * rhs.part0_ + part1_ * rhs.part1_ * b_squared();
  RationalFn p1 = part0_ * rhs.part1_ + part1_ * rhs.part0_;
  return {std::move(p0), std::move(p1)};
}

RationalFn ExtScalar::norm() const {
  return part0_ * part0_ - part1_ * part1_ * b_squared();
}

ExtScalar ExtScalar::inverse() const {
  if (is_zero()) throw NotInvertible();
  if (part1_.is_zero()) return ExtScalar(part0_.inverse());
  RationalFn n = norm();
  if (n.is_zero()) throw NotInvertible();
  RationalFn inv = n.inverse();
  return {part0_ * inv, -(part1_ * inv)};
}

ExtScalar ExtScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  ExtScalar result(1);
  ExtScalar base = *this;
  auto k = static_cast<unsigned>(e);
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

bool ExtScalar::operator==(const ExtScalar& rhs) const {
  return part0_ == rhs.part0_ && part1_ == rhs.part1_;
}

Rational ExtScalar::evaluate(const EvalPoint& point) const {
  const Rational& q = at(point.vars, Var::q);
  const Rational& z = at(point.vars, Var::z);
  if (point.b * point.b * q * z != z + 1 - q)
    throw InvalidPoint("evaluation point violates B^2 q z = z + 1 - q");
  Rational value = part0_.evaluate(point.vars);
  if (!part1_.is_zero()) value += part1_.evaluate(point.vars) * point.b;
  return value;
}

std::string ExtScalar::to_string() const {
  if (part1_.is_zero()) return part0_.to_string();
  std::string b_part = part1_.den().is_one() ? "(" + part1_.num().to_string() + ")*B"
                                             : "(" + part1_.to_string() + ")*B";
  if (part0_.is_zero()) return b_part;
  return part0_.to_string() + " + " + b_part;
}

}  // namespace phomfly
