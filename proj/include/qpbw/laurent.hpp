#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qpbw/error.hpp"
#include "qpbw/rational.hpp"

namespace qpbw {

/// Laurent polynomial in q over the rationals, stored as a finitely
/// supported exponent -> coefficient map.  Zero coefficients are never kept.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }

  static LaurentPoly constant(const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.t_[0] = c;
    return p;
  }

  static LaurentPoly one() { return constant(1); }

  static LaurentPoly monomial(std::int64_t exp, const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.t_[exp] = c;
    return p;
  }

  /// q^k
  static LaurentPoly q(std::int64_t k = 1) { return monomial(k, 1); }

  /// qhat = q - q^-1
  static LaurentPoly qhat() {
    LaurentPoly p;
    p.t_[1] = 1;
    p.t_[-1] = -1;
    return p;
  }

  /// (-q)^k, k >= 0
  static LaurentPoly minusQPow(std::int64_t k) {
    return monomial(k, (k % 2 == 0) ? 1 : -1);
  }

  bool isZero() const { return t_.empty(); }
  bool isOne() const { return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1; }
  bool isMonomial() const { return t_.size() == 1; }

  const Terms& terms() const { return t_; }

  std::int64_t lowExp() const {
    if (isZero()) fail(Err::InvalidArgument, "lowExp of zero polynomial");
    return t_.begin()->first;
  }
  std::int64_t highExp() const {
    if (isZero()) fail(Err::InvalidArgument, "highExp of zero polynomial");
    return t_.rbegin()->first;
  }
  const Rational& leadCoeff() const {
    if (isZero()) fail(Err::InvalidArgument, "leadCoeff of zero polynomial");
    return t_.rbegin()->second;
  }

  void addTerm(std::int64_t exp, const Rational& c) {
    if (c == 0) return;
    auto it = t_.find(exp);
    if (it == t_.end()) {
      t_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) addTerm(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) addTerm(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.addTerm(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : t_) r.t_[e] = k * c;
    return r;
  }

  LaurentPoly shifted(std::int64_t k) const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentPoly& o) const { return t_ != o.t_; }
  bool operator<(const LaurentPoly& o) const { return t_ < o.t_; }

  /// Exact division in the Laurent ring; throws NotDivisible / DivisionByZero.
  LaurentPoly exactDivide(const LaurentPoly& b) const {
    if (b.isZero()) fail(Err::DivisionByZero, "division by zero Laurent polynomial");
    if (isZero()) return zero();
    // Shift both to ordinary polynomials; q-powers are units so the shift is free.
    LaurentPoly a = shifted(-lowExp());
    LaurentPoly d = b.shifted(-b.lowExp());
    LaurentPoly quot;
    while (!a.isZero() && a.highExp() >= d.highExp()) {
      std::int64_t e = a.highExp() - d.highExp();
      Rational c = a.leadCoeff() / d.leadCoeff();
      LaurentPoly t = monomial(e, c);
      quot += t;
      a -= t * d;
    }
    if (!a.isZero()) fail(Err::NotDivisible, "nonzero remainder in Laurent division");
    return quot.shifted(lowExp() - b.lowExp());
  }

  /// Multiplicative inverse of a monomial c*q^k.
  LaurentPoly monomialInverse() const {
    if (!isMonomial()) fail(Err::InvalidArgument, "inverse of a non-monomial Laurent polynomial");
    const auto& [e, c] = *t_.begin();
    return monomial(-e, Rational(1) / c);
  }

  /// Evaluate at a nonzero rational value of q.
  Rational evaluate(const Rational& qval) const {
    if (qval == 0) fail(Err::DivisionByZero, "evaluation at q = 0");
    Rational acc = 0;
    for (const auto& [e, c] : t_) {
      Rational p = 1;
      std::int64_t n = e < 0 ? -e : e;
      for (std::int64_t i = 0; i < n; ++i) p *= qval;
      if (e < 0) p = Rational(1) / p;
      acc += c * p;
    }
    return acc;
  }

  /// Positive rational content: gcd of numerators over lcm of denominators.
  Rational content() const {
    if (isZero()) return 0;
    BigInt g = 0, l = 1;
    for (const auto& [e, c] : t_) {
      g = intGcd(g, ratNum(c));
      l = intLcm(l, ratDen(c));
    }
    return Rational(g, l);
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = c < 0;
      Rational a = ratAbs(c);
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      if (e == 0) {
        os << ratStr(a);
      } else {
        if (a != 1) os << ratStr(a) << "*";
        os << "q";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

  /// Serialization as [exponent, numerator, denominator] triples, exponent ascending.
  std::vector<std::array<std::string, 3>> toTriples() const {
    std::vector<std::array<std::string, 3>> out;
    for (const auto& [e, c] : t_)
      out.push_back({std::to_string(e), ratNum(c).str(), ratDen(c).str()});
    return out;
  }

  static LaurentPoly fromTriples(const std::vector<std::array<std::string, 3>>& triples) {
    LaurentPoly p;
    for (const auto& t : triples)
      p.addTerm(std::stoll(t[0]), Rational(BigInt(t[1]), BigInt(t[2])));
    return p;
  }

 private:
  Terms t_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p.scaled(c); }

/// Balanced q-integer [l] = (q^l - q^-l)/(q - q^-1), l >= 0.
inline LaurentPoly qInt(std::int64_t l) {
  if (l < 0) fail(Err::InvalidArgument, "q-integer of a negative argument");
  if (l == 0) return LaurentPoly::zero();
  LaurentPoly num = LaurentPoly::q(l) - LaurentPoly::q(-l);
  return num.exactDivide(LaurentPoly::qhat());
}

inline LaurentPoly qFactorial(std::int64_t l) {
  if (l < 0) fail(Err::InvalidArgument, "q-factorial of a negative argument");
  LaurentPoly acc = LaurentPoly::one();
  for (std::int64_t i = 1; i <= l; ++i) acc *= qInt(i);
  return acc;
}

inline LaurentPoly qBinomial(std::int64_t l, std::int64_t m) {
  if (m < 0 || m > l) fail(Err::InvalidArgument, "q-binomial arguments out of range");
  return qFactorial(l).exactDivide(qFactorial(m) * qFactorial(l - m));
}

}  // namespace qpbw
