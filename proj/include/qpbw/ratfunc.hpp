#pragma once

#include "qpbw/laurent.hpp"

namespace qpbw {

/// Remainder of ordinary polynomial division (both arguments with lowest
/// exponent >= 0, b nonzero).
inline LaurentPoly polyMod(LaurentPoly a, const LaurentPoly& b) {
  while (!a.isZero() && a.highExp() >= b.highExp()) {
    Rational c = a.leadCoeff() / b.leadCoeff();
    a -= LaurentPoly::monomial(a.highExp() - b.highExp(), c) * b;
  }
  return a;
}

/// Monic gcd of the ordinary polynomials obtained by shifting away the
/// lowest q-power of each argument.  gcd(0, 0) is 0.
inline LaurentPoly laurentGcd(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.isZero() && y.isZero()) return LaurentPoly::zero();
  if (x.isZero()) return y.shifted(-y.lowExp()).scaled(Rational(1) / y.leadCoeff());
  if (y.isZero()) return x.shifted(-x.lowExp()).scaled(Rational(1) / x.leadCoeff());
  LaurentPoly a = x.shifted(-x.lowExp());
  LaurentPoly b = y.shifted(-y.lowExp());
  while (!b.isZero()) {
    LaurentPoly r = polyMod(a, b);
    a = b;
    b = r.isZero() ? r : r.shifted(-r.lowExp());
  }
  return a.scaled(Rational(1) / a.leadCoeff());
}

/// Reduced fraction of Laurent polynomials.  Canonical form: denominator has
/// lowest exponent 0 and leading coefficient 1, common polynomial factors
/// removed.  Zero is 0/1.  Equality of values is equality of canonical forms.
class RationalFunctionQ {
 public:
  RationalFunctionQ() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}

  RationalFunctionQ(LaurentPoly num, LaurentPoly den = LaurentPoly::one())
      : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  static RationalFunctionQ fromRational(const Rational& r) {
    return RationalFunctionQ(LaurentPoly::constant(r));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool isZero() const { return num_.isZero(); }

  RationalFunctionQ operator-() const {
    RationalFunctionQ r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return RationalFunctionQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return RationalFunctionQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return RationalFunctionQ(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (b.isZero()) fail(Err::DivisionByZero, "division by zero rational function");
    return RationalFunctionQ(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunctionQ& operator+=(const RationalFunctionQ& o) { return *this = *this + o; }
  RationalFunctionQ& operator-=(const RationalFunctionQ& o) { return *this = *this - o; }
  RationalFunctionQ& operator*=(const RationalFunctionQ& o) { return *this = *this * o; }

  bool operator==(const RationalFunctionQ& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunctionQ& o) const { return !(*this == o); }

  std::string str() const {
    if (den_.isOne()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void canonicalize() {
    if (den_.isZero()) fail(Err::DivisionByZero, "zero denominator");
    if (num_.isZero()) {
      den_ = LaurentPoly::one();
      return;
    }
    LaurentPoly g = laurentGcd(num_, den_);
    if (!g.isOne()) {
      num_ = num_.exactDivide(g);
      den_ = den_.exactDivide(g);
    }
    std::int64_t k = den_.lowExp();
    if (k != 0) {
      num_ = num_.shifted(-k);
      den_ = den_.shifted(-k);
    }
    Rational lc = den_.leadCoeff();
    if (lc != 1) {
      Rational inv = Rational(1) / lc;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Canonicalize a fraction; the constructor already does, so this is a
/// value-level restatement used where the reduction itself is the point.
inline RationalFunctionQ rfReduce(const LaurentPoly& num, const LaurentPoly& den) {
  return RationalFunctionQ(num, den);
}

}  // namespace qpbw
