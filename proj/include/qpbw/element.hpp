#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpbw/lattice.hpp"
#include "qpbw/laurent.hpp"

namespace qpbw {

/// Generator of a presented algebra: position in the PBW order, display name,
/// lattice degree.
struct GeneratorInfo {
  int id = 0;
  std::string name;
  LatticeVector degree;
};

using Word = std::vector<std::int32_t>;

inline Word concatWords(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

/// Finite linear combination of words over a generator alphabet with
/// LaurentPoly coefficients.  Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Word, LaurentPoly>;

  Element() = default;

  static Element zero() { return Element(); }

  static Element ofWord(Word w, LaurentPoly c = LaurentPoly::one()) {
    Element e;
    if (!c.isZero()) e.t_.emplace(std::move(w), std::move(c));
    return e;
  }

  static Element ofScalar(LaurentPoly c) { return ofWord(Word{}, std::move(c)); }

  bool isZero() const { return t_.empty(); }
  std::size_t termCount() const { return t_.size(); }
  const Terms& terms() const { return t_; }

  void add(const Word& w, const LaurentPoly& c) {
    if (c.isZero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.isZero()) t_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const {
    Element r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
  }

  Element scaled(const LaurentPoly& c) const {
    Element r;
    if (c.isZero()) return r;
    for (const auto& [w, k] : t_) r.add(w, k * c);
    return r;
  }

  /// Free (concatenation) product.
  Element concatMul(const Element& o) const {
    Element r;
    for (const auto& [wa, ca] : t_)
      for (const auto& [wb, cb] : o.t_) r.add(concatWords(wa, wb), ca * cb);
    return r;
  }

  int maxGeneratorId() const {
    int m = -1;
    for (const auto& [w, c] : t_)
      for (auto g : w)
        if (g > m) m = g;
    return m;
  }

  bool operator==(const Element& o) const { return t_ == o.t_; }
  bool operator!=(const Element& o) const { return t_ != o.t_; }
  bool operator<(const Element& o) const { return t_ < o.t_; }

 private:
  Terms t_;
};

inline Element operator*(const LaurentPoly& c, const Element& e) { return e.scaled(c); }

/// Concatenation product with an alphabet bound check.
inline Element multiplyElements(const Element& a, const Element& b, std::size_t alphabetSize) {
  if (a.maxGeneratorId() >= (int)alphabetSize || b.maxGeneratorId() >= (int)alphabetSize)
    fail(Err::AlphabetMismatch, "generator id outside the alphabet");
  return a.concatMul(b);
}

inline LatticeVector wordDegree(const std::vector<GeneratorInfo>& gens, const Word& w) {
  if (gens.empty()) fail(Err::InvalidArgument, "empty alphabet");
  LatticeVector d;
  d.e.assign(gens[0].degree.e.size(), 0);
  for (auto g : w) {
    if (g < 0 || g >= (int)gens.size()) fail(Err::AlphabetMismatch, "generator id out of range");
    d += gens[g].degree;
  }
  return d;
}

/// True when every word of x has the same lattice degree; degree returned via
/// degOut when nonzero terms exist.
inline bool isHomogeneous(const std::vector<GeneratorInfo>& gens, const Element& x,
                          LatticeVector* degOut = nullptr) {
  bool first = true;
  LatticeVector d;
  for (const auto& [w, c] : x.terms()) {
    LatticeVector wd = wordDegree(gens, w);
    if (first) {
      d = wd;
      first = false;
    } else if (wd != d) {
      return false;
    }
  }
  if (!first && degOut) *degOut = d;
  return true;
}

}  // namespace qpbw
