#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qpbw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ratNum(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt ratDen(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational ratAbs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline std::string ratStr(const Rational& r) { return r.str(); }

inline BigInt intGcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

inline BigInt intLcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / intGcd(a, b) * b;
}

}  // namespace qpbw
