#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qpbw/laurent.hpp"

namespace qpbw {

enum class Family { A, D, AffineA, AffineD };

inline const char* familyName(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::AffineA: return "affineA";
    case Family::AffineD: return "affineD";
  }
  return "?";
}

inline Family familyFromName(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "D") return Family::D;
  if (s == "affineA") return Family::AffineA;
  if (s == "affineD") return Family::AffineD;
  fail(Err::FormatError, "unknown lattice family '" + s + "'");
}

/// Element of a root lattice in e-coordinates plus an isotropic delta slot.
struct LatticeVector {
  std::vector<std::int64_t> e;
  std::int64_t delta = 0;

  LatticeVector() = default;
  LatticeVector(std::vector<std::int64_t> ee, std::int64_t d = 0) : e(std::move(ee)), delta(d) {}

  static LatticeVector basis(std::size_t dim, std::size_t i, std::int64_t c = 1) {
    LatticeVector v;
    v.e.assign(dim, 0);
    v.e[i] = c;
    return v;
  }

  bool operator==(const LatticeVector& o) const { return e == o.e && delta == o.delta; }
  bool operator!=(const LatticeVector& o) const { return !(*this == o); }
  bool operator<(const LatticeVector& o) const {
    return std::tie(e, delta) < std::tie(o.e, o.delta);
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    if (e.size() != o.e.size()) fail(Err::RankMismatch, "lattice vector dimension mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
    delta += o.delta;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  LatticeVector& operator-=(const LatticeVector& o) {
    if (e.size() != o.e.size()) fail(Err::RankMismatch, "lattice vector dimension mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
    delta -= o.delta;
    return *this;
  }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  LatticeVector scaled(std::int64_t c) const {
    LatticeVector r = *this;
    for (auto& x : r.e) x *= c;
    r.delta *= c;
    return r;
  }
  bool isZero() const {
    return delta == 0 && std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e[i]);
    }
    s += "]";
    if (delta != 0) s += "+" + std::to_string(delta) + "d";
    return s;
  }
};

/// A root lattice with its simple-root table.  The delta coordinate is
/// isotropic: the pairing only sees e-coordinates.
class RootSystemSpec {
 public:
  static RootSystemSpec make(Family f, int rank) {
    RootSystemSpec s;
    s.family_ = f;
    s.rank_ = rank;
    switch (f) {
      case Family::A:
      case Family::AffineA: {
        if (rank < 1) fail(Err::RankTooSmall, "type A needs rank >= 1");
        int m = rank;
        s.dim_ = m + 1;
        for (int i = 1; i <= m; ++i) {
          LatticeVector a = LatticeVector::basis(s.dim_, i - 1);
          a.e[i] = -1;  // e_i - e_{i+1}
          s.labels_.push_back(i);
          s.simple_.push_back(a);
        }
        if (f == Family::AffineA) {
          // alpha_0 = delta - theta with theta = e_1 - e_{m+1}.
          LatticeVector a0 = LatticeVector::basis(s.dim_, m);
          a0.e[0] = -1;
          a0.delta = 1;
          s.labels_.insert(s.labels_.begin(), 0);
          s.simple_.insert(s.simple_.begin(), a0);
        }
        break;
      }
      case Family::D:
      case Family::AffineD: {
        if (rank < 2) fail(Err::RankTooSmall, "type D needs rank >= 2");
        int n = rank;
        s.dim_ = n + 1;
        // alpha_1 = e_1 + e_2, alpha_i = e_i - e_{i-1} for 2 <= i <= n+1.
        {
          LatticeVector a1 = LatticeVector::basis(s.dim_, 0);
          a1.e[1] = 1;
          s.labels_.push_back(1);
          s.simple_.push_back(a1);
        }
        for (int i = 2; i <= n + 1; ++i) {
          LatticeVector a = LatticeVector::basis(s.dim_, i - 1);
          a.e[i - 2] = -1;
          s.labels_.push_back(i);
          s.simple_.push_back(a);
        }
        if (f == Family::AffineD) {
          // alpha_0 = -e_{n+1} - e_n + delta.
          LatticeVector a0;
          a0.e.assign(s.dim_, 0);
          a0.e[n] = -1;
          a0.e[n - 1] = -1;
          a0.delta = 1;
          s.labels_.insert(s.labels_.begin(), 0);
          s.simple_.insert(s.simple_.begin(), a0);
        }
        break;
      }
    }
    s.checkCartan();
    return s;
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  bool affine() const { return family_ == Family::AffineA || family_ == Family::AffineD; }
  const std::vector<int>& labels() const { return labels_; }

  const LatticeVector& simpleRoot(int label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
      if (labels_[k] == label) return simple_[k];
    fail(Err::BadIndex, "no simple root with label " + std::to_string(label));
  }

  std::int64_t pairing(const LatticeVector& u, const LatticeVector& v) const {
    if ((int)u.e.size() != dim_ || (int)v.e.size() != dim_)
      fail(Err::RankMismatch, "vector does not match lattice dimension");
    std::int64_t s = 0;
    for (int i = 0; i < dim_; ++i) s += u.e[i] * v.e[i];
    return s;  // delta is isotropic
  }

  LatticeVector reflect(int label, const LatticeVector& v) const {
    const LatticeVector& a = simpleRoot(label);
    std::int64_t n = pairing(a, a);
    std::int64_t p = pairing(v, a);
    // All roots here have square length 2, but keep the general formula.
    if (n == 0 || (2 * p) % n != 0) fail(Err::InvalidArgument, "non-integral reflection");
    return v - a.scaled(2 * p / n);
  }

  /// beta_1 = alpha_{i_1}, beta_k = s_{i_1}...s_{i_{k-1}} alpha_{i_k}.
  std::vector<LatticeVector> rootsOfWord(const std::vector<int>& word) const {
    if (word.empty()) fail(Err::InvalidArgument, "empty reduced word");
    std::vector<LatticeVector> out;
    out.reserve(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
      LatticeVector v = simpleRoot(word[k]);
      for (std::size_t j = k; j-- > 0;) v = reflect(word[j], v);
      out.push_back(v);
    }
    return out;
  }

  /// Integer coordinates of v in the simple-root basis; NotInRootLattice when
  /// no integer expansion exists.
  std::vector<std::int64_t> simpleCoordinates(const LatticeVector& v) const {
    if ((int)v.e.size() != dim_) fail(Err::RankMismatch, "vector does not match lattice dimension");
    const std::size_t L = simple_.size();
    const std::size_t R = dim_ + 1;  // e-rows plus the delta row
    std::vector<std::vector<Rational>> m(R, std::vector<Rational>(L + 1, 0));
    for (std::size_t c = 0; c < L; ++c) {
      for (int r = 0; r < dim_; ++r) m[r][c] = simple_[c].e[r];
      m[dim_][c] = simple_[c].delta;
    }
    for (int r = 0; r < dim_; ++r) m[r][L] = v.e[r];
    m[dim_][L] = v.delta;

    std::vector<int> pivotCol;
    std::size_t row = 0;
    for (std::size_t col = 0; col < L && row < R; ++col) {
      std::size_t p = row;
      while (p < R && m[p][col] == 0) ++p;
      if (p == R) fail(Err::InvalidArgument, "simple roots not independent");
      std::swap(m[p], m[row]);
      Rational inv = Rational(1) / m[row][col];
      for (std::size_t c = col; c <= L; ++c) m[row][c] *= inv;
      for (std::size_t r = 0; r < R; ++r) {
        if (r == row || m[r][col] == 0) continue;
        Rational f = m[r][col];
        for (std::size_t c = col; c <= L; ++c) m[r][c] -= f * m[row][c];
      }
      pivotCol.push_back((int)col);
      ++row;
    }
    for (std::size_t r = row; r < R; ++r)
      if (m[r][L] != 0) fail(Err::NotInRootLattice, "vector is outside the root lattice span");
    std::vector<std::int64_t> coords(L, 0);
    for (std::size_t r = 0; r < pivotCol.size(); ++r) {
      const Rational& c = m[r][L];
      if (ratDen(c) != 1) fail(Err::NotInRootLattice, "no integer simple-root expansion");
      coords[pivotCol[r]] = (std::int64_t)ratNum(c);
    }
    return coords;
  }

 private:
  void checkCartan() const {
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      std::int64_t nrm = pairing(simple_[i], simple_[i]);
      if (nrm <= 0) fail(Err::InvalidArgument, "simple root with non-positive norm");
      for (std::size_t j = 0; j < simple_.size(); ++j) {
        if (i == j) continue;
        std::int64_t c = 2 * pairing(simple_[i], simple_[j]) / nrm;
        if (c > 0) fail(Err::InvalidArgument, "positive off-diagonal Cartan entry");
      }
    }
  }

  Family family_{};
  int rank_ = 0;
  int dim_ = 0;
  std::vector<int> labels_;
  std::vector<LatticeVector> simple_;
};

/// Lattice bicharacter given by its values on ordered pairs of simple roots
/// (unit Laurent monomials, default 1), extended multiplicatively.
struct Bicharacter {
  std::map<std::pair<int, int>, LaurentPoly> table;

  void set(int i, int j, LaurentPoly u) {
    if (!u.isMonomial()) fail(Err::InvalidArgument, "bicharacter entries must be units");
    table[{i, j}] = std::move(u);
  }

  LaurentPoly value(int i, int j) const {
    auto it = table.find({i, j});
    return it == table.end() ? LaurentPoly::one() : it->second;
  }

  LaurentPoly eval(const RootSystemSpec& spec, const LatticeVector& u,
                   const LatticeVector& v) const {
    std::vector<std::int64_t> cu = spec.simpleCoordinates(u);
    std::vector<std::int64_t> cv = spec.simpleCoordinates(v);
    const auto& labels = spec.labels();
    LaurentPoly acc = LaurentPoly::one();
    for (const auto& [key, val] : table) {
      auto pos = [&](int label) -> std::int64_t {
        for (std::size_t k = 0; k < labels.size(); ++k)
          if (labels[k] == label) return (std::int64_t)k;
        fail(Err::BadIndex, "bicharacter label outside lattice");
      };
      std::int64_t mult = cu[pos(key.first)] * cv[pos(key.second)];
      if (mult == 0) continue;
      LaurentPoly base = val;
      if (mult < 0) {
        base = val.monomialInverse();
        mult = -mult;
      }
      for (std::int64_t k = 0; k < mult; ++k) acc *= base;
    }
    return acc;
  }

  Bicharacter inverse() const {
    Bicharacter b;
    for (const auto& [key, val] : table) b.table[key] = val.monomialInverse();
    return b;
  }
};

}  // namespace qpbw
