#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "qpbw/presentation.hpp"
#include "qpbw/span.hpp"

namespace qpbw {

// ---------------------------------------------------------------------------
// Stored reduced words.

/// w_n = (s_{n+1} ... s_2 s_1)(s_3 s_4 ... s_n s_{n+1}) in W(D_{n+1}).
inline std::vector<int> reducedWordWn(int n) {
  std::vector<int> w;
  for (int i = n + 1; i >= 1; --i) w.push_back(i);
  for (int i = 3; i <= n + 1; ++i) w.push_back(i);
  return w;
}

/// what_n = (s_{n+1}...s_1)(s_3...s_{n+1}) s_0 (s_n...s_3)(s_1...s_n) s_0.
inline std::vector<int> reducedWordWhatN(int n) {
  std::vector<int> w = reducedWordWn(n);
  w.push_back(0);
  for (int i = n; i >= 3; --i) w.push_back(i);
  for (int i = 1; i <= n; ++i) w.push_back(i);
  w.push_back(0);
  return w;
}

/// c_m = s_1 ... s_m in W(A_m).
inline std::vector<int> reducedWordCm(int m) {
  std::vector<int> w;
  for (int i = 1; i <= m; ++i) w.push_back(i);
  return w;
}

/// chat_m = (s_1 ... s_m)(s_0 s_1 ... s_{m-1}).
inline std::vector<int> reducedWordChatM(int m) {
  std::vector<int> w = reducedWordCm(m);
  w.push_back(0);
  for (int i = 1; i <= m - 1; ++i) w.push_back(i);
  return w;
}

namespace detail {

inline void requireDistinct(const std::vector<LatticeVector>& roots, const std::string& who) {
  std::set<LatticeVector> seen(roots.begin(), roots.end());
  if (seen.size() != roots.size())
    fail(Err::InvalidArgument, who + ": repeated root in reduced word");
}

inline void checkRelationCount(const Presentation& p) {
  std::size_t t = p.generators.size();
  if (p.relations.size() != t * (t - 1) / 2)
    fail(Err::InvalidArgument,
         p.name + ": expected one relation per unordered generator pair");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generator id layout helpers.
//
// Euclidean-style alphabets list x_n,...,x_1,y_1,...,y_n (the PBW order of
// the stored reduced word); the affine alphabets repeat the pattern with the
// barred block after the plain one.

struct EuclideanIds {
  int n;
  int x(int i) const { return n - i; }          // x_i, 1 <= i <= n
  int y(int i) const { return n - 1 + i; }      // y_i, 1 <= i <= n
};

struct AffineDIds {
  int n;
  int X(int i) const { return n - i; }
  int Y(int i) const { return n - 1 + i; }
  int Xb(int i) const { return 3 * n - i; }
  int Yb(int i) const { return 3 * n - 1 + i; }
};

/// Row-major matrix-entry alphabet X[r,c], r in 1..rows, c in 1..cols.
struct MatrixIds {
  int rows, cols;
  int at(int r, int c) const { return (r - 1) * cols + (c - 1); }
  std::string name(int r, int c) const {
    return "X[" + std::to_string(r) + "," + std::to_string(c) + "]";
  }
};

// ---------------------------------------------------------------------------
// Named presentations.

/// O_q(ok^{2n}) = U_q^{w_n}: x_i x_j = q^-1 x_j x_i, y_i y_j = q y_j y_i
/// (i < j), x_i y_j = q^{1-d_ij} y_j x_i + d_ij qhat sum_{r<i} (-q)^{i-r-1} x_r y_r.
inline Presentation buildEuclidean(int n) {
  if (n < 3) fail(Err::RankTooSmall, "euclidean requires rank >= 3");
  Presentation p;
  p.name = "euclidean";
  p.provenance = "built-in catalog, rank " + std::to_string(n);
  p.rank = n;
  p.lattice = RootSystemSpec::make(Family::D, n);
  EuclideanIds id{n};

  auto roots = p.lattice.rootsOfWord(reducedWordWn(n));
  detail::requireDistinct(roots, p.name);
  p.generators.resize(2 * n);
  for (int i = 1; i <= n; ++i) {
    p.generators[id.x(i)] = {id.x(i), "x" + std::to_string(i), roots[id.x(i)]};
    p.generators[id.y(i)] = {id.y(i), "y" + std::to_string(i), roots[id.y(i)]};
  }

  const LaurentPoly qh = LaurentPoly::qhat();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Element rx;  // x_i x_j - q^-1 x_j x_i
      rx.add({id.x(i), id.x(j)}, LaurentPoly::one());
      rx.add({id.x(j), id.x(i)}, -LaurentPoly::q(-1));
      p.relations.push_back(rx);
      Element ry;  // y_i y_j - q y_j y_i
      ry.add({id.y(i), id.y(j)}, LaurentPoly::one());
      ry.add({id.y(j), id.y(i)}, -LaurentPoly::q(1));
      p.relations.push_back(ry);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Element r;  // x_i y_j - q^{1-d} y_j x_i - d qhat sum
      r.add({id.x(i), id.y(j)}, LaurentPoly::one());
      r.add({id.y(j), id.x(i)}, -LaurentPoly::q(i == j ? 0 : 1));
      if (i == j)
        for (int s = 1; s < i; ++s)
          r.add({id.x(s), id.y(s)}, -(qh * LaurentPoly::minusQPow(i - s - 1)));
      p.relations.push_back(r);
    }
  }
  detail::checkRelationCount(p);
  return p;
}

/// O_q(k^m) = U_q^{c_m}: z_i z_j = q z_j z_i for i < j.
inline Presentation buildAffineSpace(int m) {
  if (m < 2) fail(Err::RankTooSmall, "affine_space requires rank >= 2");
  Presentation p;
  p.name = "affine_space";
  p.provenance = "built-in catalog, rank " + std::to_string(m);
  p.rank = m;
  p.lattice = RootSystemSpec::make(Family::A, m);

  auto roots = p.lattice.rootsOfWord(reducedWordCm(m));
  detail::requireDistinct(roots, p.name);
  for (int i = 1; i <= m; ++i)
    p.generators.push_back({i - 1, "z" + std::to_string(i), roots[i - 1]});

  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      Element r;  // z_i z_j - q z_j z_i
      r.add({i - 1, j - 1}, LaurentPoly::one());
      r.add({j - 1, i - 1}, -LaurentPoly::q(1));
      p.relations.push_back(r);
    }
  detail::checkRelationCount(p);
  return p;
}

/// U_q^{what_n}: the affine presentation on X_i, Y_i, Xb_i, Yb_i.
inline Presentation buildAffineD(int n) {
  if (n < 3) fail(Err::RankTooSmall, "affineD requires rank >= 3");
  Presentation p;
  p.name = "affineD";
  p.provenance = "built-in catalog, rank " + std::to_string(n);
  p.rank = n;
  p.lattice = RootSystemSpec::make(Family::AffineD, n);
  AffineDIds id{n};

  auto roots = p.lattice.rootsOfWord(reducedWordWhatN(n));
  detail::requireDistinct(roots, p.name);
  p.generators.resize(4 * n);
  for (int i = 1; i <= n; ++i) {
    p.generators[id.X(i)] = {id.X(i), "X" + std::to_string(i), roots[id.X(i)]};
    p.generators[id.Y(i)] = {id.Y(i), "Y" + std::to_string(i), roots[id.Y(i)]};
    p.generators[id.Xb(i)] = {id.Xb(i), "Xb" + std::to_string(i), roots[id.Xb(i)]};
    p.generators[id.Yb(i)] = {id.Yb(i), "Yb" + std::to_string(i), roots[id.Yb(i)]};
  }

  const LaurentPoly qh = LaurentPoly::qhat();
  const LaurentPoly qhInv = qh * LaurentPoly::q(-1);  // qhat q^-1

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Element r1;  // X_i X_j = q^-1 X_j X_i
      r1.add({id.X(i), id.X(j)}, LaurentPoly::one());
      r1.add({id.X(j), id.X(i)}, -LaurentPoly::q(-1));
      p.relations.push_back(r1);
      Element r1y;  // Y_j Y_i = q^-1 Y_i Y_j
      r1y.add({id.Y(j), id.Y(i)}, LaurentPoly::one());
      r1y.add({id.Y(i), id.Y(j)}, -LaurentPoly::q(-1));
      p.relations.push_back(r1y);
      Element r2;  // Xb_i Xb_j = q^-1 Xb_j Xb_i
      r2.add({id.Xb(i), id.Xb(j)}, LaurentPoly::one());
      r2.add({id.Xb(j), id.Xb(i)}, -LaurentPoly::q(-1));
      p.relations.push_back(r2);
      Element r2y;  // Yb_j Yb_i = q^-1 Yb_i Yb_j
      r2y.add({id.Yb(j), id.Yb(i)}, LaurentPoly::one());
      r2y.add({id.Yb(i), id.Yb(j)}, -LaurentPoly::q(-1));
      p.relations.push_back(r2y);
    }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Element r3;  // Y_j X_i = q^{d-1} X_i Y_j - d qhat sum_{r<i} (-q)^{i-r-1} X_r Y_r
      r3.add({id.Y(j), id.X(i)}, LaurentPoly::one());
      r3.add({id.X(i), id.Y(j)}, -LaurentPoly::q(i == j ? 0 : -1));
      if (i == j)
        for (int s = 1; s < i; ++s)
          r3.add({id.X(s), id.Y(s)}, qh * LaurentPoly::minusQPow(i - s - 1));
      p.relations.push_back(r3);
      Element r4;  // barred copy of r3
      r4.add({id.Yb(j), id.Xb(i)}, LaurentPoly::one());
      r4.add({id.Xb(i), id.Yb(j)}, -LaurentPoly::q(i == j ? 0 : -1));
      if (i == j)
        for (int s = 1; s < i; ++s)
          r4.add({id.Xb(s), id.Yb(s)}, qh * LaurentPoly::minusQPow(i - s - 1));
      p.relations.push_back(r4);
    }

  for (int i = 1; i <= n; ++i) {
    Element r5;  // Xb_i X_i = q^-2 X_i Xb_i
    r5.add({id.Xb(i), id.X(i)}, LaurentPoly::one());
    r5.add({id.X(i), id.Xb(i)}, -LaurentPoly::q(-2));
    p.relations.push_back(r5);
    Element r5y;  // Yb_i Y_i = q^-2 Y_i Yb_i
    r5y.add({id.Yb(i), id.Y(i)}, LaurentPoly::one());
    r5y.add({id.Y(i), id.Yb(i)}, -LaurentPoly::q(-2));
    p.relations.push_back(r5y);
  }

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Element r6;  // Xb_j X_i = q^-1 X_i Xb_j   (i < j)
      r6.add({id.Xb(j), id.X(i)}, LaurentPoly::one());
      r6.add({id.X(i), id.Xb(j)}, -LaurentPoly::q(-1));
      p.relations.push_back(r6);
      Element r6y;  // Yb_i Y_j = q^-1 Y_j Yb_i   (i < j)
      r6y.add({id.Yb(i), id.Y(j)}, LaurentPoly::one());
      r6y.add({id.Y(j), id.Yb(i)}, -LaurentPoly::q(-1));
      p.relations.push_back(r6y);
      Element r7;  // Xb_i X_j = q^-1 X_j Xb_i - q^-1 qhat X_i Xb_j   (i < j)
      r7.add({id.Xb(i), id.X(j)}, LaurentPoly::one());
      r7.add({id.X(j), id.Xb(i)}, -LaurentPoly::q(-1));
      r7.add({id.X(i), id.Xb(j)}, qhInv);
      p.relations.push_back(r7);
      Element r7y;  // Yb_j Y_i = q^-1 Y_i Yb_j - q^-1 qhat Y_j Yb_i   (i < j)
      r7y.add({id.Yb(j), id.Y(i)}, LaurentPoly::one());
      r7y.add({id.Y(i), id.Yb(j)}, -LaurentPoly::q(-1));
      r7y.add({id.Y(j), id.Yb(i)}, qhInv);
      p.relations.push_back(r7y);
    }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Element r8;  // Xb_i Y_j = q^{-1+d} Y_j Xb_i + d qhat q^-1 sum_{m>i} (-q)^{m-i} Y_m Xb_m
      r8.add({id.Xb(i), id.Y(j)}, LaurentPoly::one());
      r8.add({id.Y(j), id.Xb(i)}, -LaurentPoly::q(i == j ? 0 : -1));
      if (i == j)
        for (int s = i + 1; s <= n; ++s)
          r8.add({id.Y(s), id.Xb(s)}, -(qhInv * LaurentPoly::minusQPow(s - i)));
      p.relations.push_back(r8);

      Element r9;  // Yb_i X_j = q^{-1+d} X_j Yb_i - qhat q^-1 Y_i Xb_j
                   //            + d qhat q^-1 [ sum_m (-q)^{i+m-2} Y_m Xb_m
                   //                            + sum_{m<i} (-q)^{i-m} X_m Yb_m ]
      r9.add({id.Yb(i), id.X(j)}, LaurentPoly::one());
      r9.add({id.X(j), id.Yb(i)}, -LaurentPoly::q(i == j ? 0 : -1));
      r9.add({id.Y(i), id.Xb(j)}, qhInv);
      if (i == j) {
        for (int s = 1; s <= n; ++s)
          r9.add({id.Y(s), id.Xb(s)}, -(qhInv * LaurentPoly::minusQPow(i + s - 2)));
        for (int s = 1; s < i; ++s)
          r9.add({id.X(s), id.Yb(s)}, -(qhInv * LaurentPoly::minusQPow(i - s)));
      }
      p.relations.push_back(r9);
    }

  detail::checkRelationCount(p);
  return p;
}

/// X_{n,q}: generators X[r,c] for r in {1,2}, c in 1..2n, with the
/// rows-of-a-matrix style relations and the c' = 2n+1-c pairing.
inline Presentation buildXAlgebra(int n) {
  if (n < 2) fail(Err::RankTooSmall, "xalgebra requires rank >= 2");
  Presentation p;
  p.name = "xalgebra";
  p.provenance = "built-in catalog, rank " + std::to_string(n);
  p.rank = n;
  p.lattice = RootSystemSpec::make(Family::AffineD, n);
  MatrixIds id{2, 2 * n};

  // Degrees are transported from the affine PBW order: X[1,c] carries the
  // degree of the c-th affine root, X[2,c] the (2n+c)-th.
  auto roots = p.lattice.rootsOfWord(reducedWordWhatN(n));
  detail::requireDistinct(roots, p.name);
  p.generators.resize(4 * n);
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 2 * n; ++c) {
      int g = id.at(r, c);
      p.generators[g] = {g, id.name(r, c), roots[g]};
    }

  const LaurentPoly qh = LaurentPoly::qhat();
  auto prime = [n](int c) { return 2 * n + 1 - c; };

  // Same-row relations.
  for (int r = 1; r <= 2; ++r) {
    for (int s = 1; s <= 2 * n; ++s)
      for (int t = s + 1; t <= 2 * n; ++t) {
        if (t == prime(s)) continue;
        Element rel;  // X[r,t] X[r,s] = q^-1 X[r,s] X[r,t]
        rel.add({id.at(r, t), id.at(r, s)}, LaurentPoly::one());
        rel.add({id.at(r, s), id.at(r, t)}, -LaurentPoly::q(-1));
        p.relations.push_back(rel);
      }
    for (int s = 1; s <= n; ++s) {
      Element rel;  // X[r,s'] X[r,s] = X[r,s] X[r,s'] + qhat sum_{l>s}^n q^{l-s-1} X[r,l] X[r,l']
      rel.add({id.at(r, prime(s)), id.at(r, s)}, LaurentPoly::one());
      rel.add({id.at(r, s), id.at(r, prime(s))}, -LaurentPoly::one());
      for (int l = s + 1; l <= n; ++l)
        rel.add({id.at(r, l), id.at(r, prime(l))}, -(qh * LaurentPoly::q(l - s - 1)));
      p.relations.push_back(rel);
    }
  }

  // Cross-row relations.
  for (int s = 1; s <= 2 * n; ++s) {
    Element rel;  // X[2,s] X[1,s] = q^-1 X[1,s] X[2,s]
    rel.add({id.at(2, s), id.at(1, s)}, LaurentPoly::one());
    rel.add({id.at(1, s), id.at(2, s)}, -LaurentPoly::q(-1));
    p.relations.push_back(rel);
  }
  for (int s = 1; s <= 2 * n; ++s)
    for (int t = s + 1; t <= 2 * n; ++t) {
      if (t == prime(s)) continue;
      Element ra;  // X[2,s] X[1,t] = X[1,t] X[2,s]
      ra.add({id.at(2, s), id.at(1, t)}, LaurentPoly::one());
      ra.add({id.at(1, t), id.at(2, s)}, -LaurentPoly::one());
      p.relations.push_back(ra);
      Element rb;  // X[2,t] X[1,s] = X[1,s] X[2,t] - qhat X[1,t] X[2,s]
      rb.add({id.at(2, t), id.at(1, s)}, LaurentPoly::one());
      rb.add({id.at(1, s), id.at(2, t)}, -LaurentPoly::one());
      rb.add({id.at(1, t), id.at(2, s)}, qh);
      p.relations.push_back(rb);
    }
  for (int s = 1; s <= n; ++s) {
    Element rf;  // X[2,s] X[1,s'] = q X[1,s'] X[2,s] + qhat sum_{l<s} q^{s-l} X[1,l'] X[2,l]
    rf.add({id.at(2, s), id.at(1, prime(s))}, LaurentPoly::one());
    rf.add({id.at(1, prime(s)), id.at(2, s)}, -LaurentPoly::q(1));
    for (int l = 1; l < s; ++l)
      rf.add({id.at(1, prime(l)), id.at(2, l)}, -(qh * LaurentPoly::q(s - l)));
    p.relations.push_back(rf);

    Element rg;  // X[2,s'] X[1,s] = q X[1,s] X[2,s'] + qhat sum_{l>s}^n q^{l-s} X[1,l] X[2,l']
                 //                + qhat q^-1 sum_l^n q^{l'-s} X[1,l'] X[2,l] - qhat X[1,s'] X[2,s]
    rg.add({id.at(2, prime(s)), id.at(1, s)}, LaurentPoly::one());
    rg.add({id.at(1, s), id.at(2, prime(s))}, -LaurentPoly::q(1));
    for (int l = s + 1; l <= n; ++l)
      rg.add({id.at(1, l), id.at(2, prime(l))}, -(qh * LaurentPoly::q(l - s)));
    for (int l = 1; l <= n; ++l)
      rg.add({id.at(1, prime(l)), id.at(2, l)},
             -(qh * LaurentPoly::q(-1) * LaurentPoly::q(prime(l) - s)));
    rg.add({id.at(1, prime(s)), id.at(2, s)}, qh);
    p.relations.push_back(rg);
  }

  detail::checkRelationCount(p);
  return p;
}

// ---------------------------------------------------------------------------
// Smash presentation of type D, transcribed.  The derived version lives in
// smash.hpp; this one is the catalog's own copy of the relation lists.

namespace detail {

/// The four cross-relation families of the type-D smash presentation.
/// kind: 1 = (1#x_i)(x_j#1), 2 = (1#y_i)(y_j#1), 3 = (1#y_i)(x_j#1),
/// 4 = (1#x_i)(y_j#1).  Returned over the doubled euclidean alphabet where
/// copy-1 occupies ids 0..2n-1 and copy-2 ids 2n..4n-1.
inline Element smashDCross(int n, int kind, int i, int j) {
  EuclideanIds id{n};
  const int T = 2 * n;
  auto c1x = [&](int k) { return id.x(k); };
  auto c1y = [&](int k) { return id.y(k); };
  auto c2x = [&](int k) { return T + id.x(k); };
  auto c2y = [&](int k) { return T + id.y(k); };
  const LaurentPoly qh = LaurentPoly::qhat();
  const LaurentPoly qhInv = qh * LaurentPoly::q(-1);
  Element r;
  switch (kind) {
    case 1:  // (1#x_i)(x_j#1)
      r.add({c2x(i), c1x(j)}, LaurentPoly::one());
      if (i < j) {
        r.add({c1x(j), c2x(i)}, -LaurentPoly::q(-1));
        r.add({c1x(i), c2x(j)}, qhInv);
      } else if (i == j) {
        r.add({c1x(j), c2x(i)}, -LaurentPoly::q(-2));
      } else {
        r.add({c1x(j), c2x(i)}, -LaurentPoly::q(-1));
      }
      break;
    case 2:  // (1#y_i)(y_j#1)
      r.add({c2y(i), c1y(j)}, LaurentPoly::one());
      if (i > j) {
        r.add({c1y(j), c2y(i)}, -LaurentPoly::q(-1));
        r.add({c1y(i), c2y(j)}, qhInv);
      } else if (i == j) {
        r.add({c1y(j), c2y(i)}, -LaurentPoly::q(-2));
      } else {
        r.add({c1y(j), c2y(i)}, -LaurentPoly::q(-1));
      }
      break;
    case 3:  // (1#y_i)(x_j#1)
      r.add({c2y(i), c1x(j)}, LaurentPoly::one());
      r.add({c1x(j), c2y(i)}, -LaurentPoly::q(i == j ? 0 : -1));
      r.add({c1y(i), c2x(j)}, qhInv);
      if (i == j) {
        for (int s = 1; s <= n; ++s)
          r.add({c1y(s), c2x(s)}, -(qhInv * LaurentPoly::minusQPow(i + s - 2)));
        for (int s = 1; s < i; ++s)
          r.add({c1x(s), c2y(s)}, -(qhInv * LaurentPoly::minusQPow(i - s)));
      }
      break;
    case 4:  // (1#x_i)(y_j#1)
      r.add({c2x(i), c1y(j)}, LaurentPoly::one());
      r.add({c1y(j), c2x(i)}, -LaurentPoly::q(i == j ? 0 : -1));
      if (i == j)
        for (int s = i + 1; s <= n; ++s)
          r.add({c1y(s), c2x(s)}, -(qhInv * LaurentPoly::minusQPow(s - i)));
      break;
    default:
      fail(Err::InvalidArgument, "unknown cross-relation kind");
  }
  return r;
}

}  // namespace detail

/// (U_q^{w_n})^#: two euclidean blocks plus the cross relations, transcribed.
inline Presentation buildSmashD(int n) {
  if (n < 3) fail(Err::RankTooSmall, "smashD requires rank >= 3");
  Presentation base = buildEuclidean(n);
  Presentation p;
  p.name = "smashD";
  p.provenance = "built-in catalog, rank " + std::to_string(n);
  p.rank = n;
  p.lattice = RootSystemSpec::make(Family::AffineD, n);
  const int T = 2 * n;

  auto roots = p.lattice.rootsOfWord(reducedWordWhatN(n));
  detail::requireDistinct(roots, p.name);
  p.generators.resize(2 * T);
  for (int k = 0; k < T; ++k) {
    if (roots[k] != base.generators[k].degree)
      fail(Err::InvalidArgument, "smashD: first affine block does not match the base degrees");
    p.generators[k] = {k, base.generators[k].name, roots[k]};
    p.generators[T + k] = {T + k, base.generators[k].name + "b", roots[T + k]};
  }
  // Display convention: copy-1 names are the base names (u#1), copy-2 names
  // carry the trailing b (1#u).
  EuclideanIds id{n};
  for (int i = 1; i <= n; ++i) {
    p.generators[T + id.x(i)].name = "xb" + std::to_string(i);
    p.generators[T + id.y(i)].name = "yb" + std::to_string(i);
  }

  // Base relations on each tensor factor.
  for (const auto& r : base.relations) p.relations.push_back(r);
  for (const auto& r : base.relations) {
    Element moved;
    for (const auto& [w, c] : r.terms()) moved.add({(int)(w[0] + T), (int)(w[1] + T)}, c);
    p.relations.push_back(moved);
  }
  // Cross relations, one per ordered pair of base generators.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) p.relations.push_back(detail::smashDCross(n, 1, i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) p.relations.push_back(detail::smashDCross(n, 2, i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) p.relations.push_back(detail::smashDCross(n, 3, i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) p.relations.push_back(detail::smashDCross(n, 4, i, j));

  detail::checkRelationCount(p);
  return p;
}

inline Presentation buildNamed(const std::string& name, int rank) {
  if (name == "euclidean") return buildEuclidean(rank);
  if (name == "affine_space") return buildAffineSpace(rank);
  if (name == "affineD") return buildAffineD(rank);
  if (name == "smashD") return buildSmashD(rank);
  if (name == "xalgebra") return buildXAlgebra(rank);
  fail(Err::UnknownName, "no catalog presentation named '" + name + "'");
}

// ---------------------------------------------------------------------------
// R-matrices and the FRT construction.

/// R acting on V (x) V: R(v_i (x) v_j) = sum R_{ij}^{st} v_s (x) v_t.
/// Entries are keyed (s, t, i, j) with 1-based indices.
struct RMatrix {
  int N = 0;
  std::map<std::array<int, 4>, LaurentPoly> entries;

  void add(int s, int t, int i, int j, const LaurentPoly& c) {
    if (c.isZero()) return;
    auto key = std::array<int, 4>{s, t, i, j};
    auto it = entries.find(key);
    if (it == entries.end())
      entries.emplace(key, c);
    else {
      it->second += c;
      if (it->second.isZero()) entries.erase(it);
    }
  }

  LaurentPoly entry(int s, int t, int i, int j) const {
    auto it = entries.find({s, t, i, j});
    return it == entries.end() ? LaurentPoly::zero() : it->second;
  }
};

inline std::vector<int> rhoTupleD(int n) {
  // (n-1, n-2, ..., 1, 0, 0, -1, ..., -n+1)
  std::vector<int> rho(2 * n + 1, 0);  // 1-based
  for (int i = 1; i <= n; ++i) rho[i] = n - i;
  for (int i = n + 1; i <= 2 * n; ++i) rho[i] = n - i + 1;
  return rho;
}

/// Standard type-A R-matrix on k^m.
inline RMatrix rMatrixA(int m) {
  if (m < 2) fail(Err::RankTooSmall, "type A R-matrix needs size >= 2");
  RMatrix R;
  R.N = m;
  const LaurentPoly qh = LaurentPoly::qhat();
  for (int i = 1; i <= m; ++i) R.add(i, i, i, i, LaurentPoly::q(1));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j) R.add(i, j, i, j, LaurentPoly::one());
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < i; ++j) R.add(i, j, j, i, qh);  // E_ij (x) E_ji
  return R;
}

/// Standard type-D R-matrix on k^{2n}, with i' = 2n+1-i.
inline RMatrix rMatrixD(int n) {
  if (n < 2) fail(Err::RankTooSmall, "type D R-matrix needs size >= 2");
  RMatrix R;
  R.N = 2 * n;
  const int N = R.N;
  auto prime = [N](int i) { return N + 1 - i; };
  auto rho = rhoTupleD(n);
  const LaurentPoly qh = LaurentPoly::qhat();
  for (int i = 1; i <= N; ++i)
    if (i != prime(i)) R.add(i, i, i, i, LaurentPoly::q(1));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      if (i != j && i != prime(j)) R.add(i, j, i, j, LaurentPoly::one());
  for (int i = 1; i <= N; ++i)
    if (i != prime(i)) R.add(prime(i), i, prime(i), i, LaurentPoly::q(-1));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j < i; ++j) {
      R.add(i, j, j, i, qh);                                           // E_ij (x) E_ji
      R.add(i, prime(i), j, prime(j), -(qh * LaurentPoly::q(rho[i] - rho[j])));  // E_ij (x) E_i'j'
    }
  return R;
}

inline RMatrix rMatrix(Family f, int size) {
  switch (f) {
    case Family::A: return rMatrixA(size);
    case Family::D: return rMatrixD(size);
    default: fail(Err::InvalidArgument, "R-matrices exist for families A and D");
  }
}

/// FRT relations over the N^2 generators X[i,j]: for every (i,j,l,m),
/// sum R_{st}^{ji} X[s,l] X[t,m] - sum R_{lm}^{ts} X[i,s] X[j,t].
/// Zero relations and exact scalar multiples of already-emitted relations
/// are dropped; each returned element is an original FRT relation.
inline std::vector<Element> frtRelations(const RMatrix& R) {
  const int N = R.N;
  MatrixIds id{N, N};
  // Index entries by output pair and by input pair.
  std::map<std::pair<int, int>, std::vector<std::tuple<int, int, LaurentPoly>>> byOut, byIn;
  for (const auto& [key, c] : R.entries) {
    auto [s, t, i, j] = key;
    byOut[{s, t}].push_back({i, j, c});  // inputs with this output
    byIn[{i, j}].push_back({s, t, c});   // outputs with this input
  }

  std::vector<Element> out;
  std::set<Element> seen;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int l = 1; l <= N; ++l)
        for (int m = 1; m <= N; ++m) {
          Element rel;
          auto lhs = byOut.find({j, i});
          if (lhs != byOut.end())
            for (const auto& [s, t, c] : lhs->second) rel.add({id.at(s, l), id.at(t, m)}, c);
          auto rhs = byIn.find({l, m});
          if (rhs != byIn.end())
            for (const auto& [t, s, c] : rhs->second) rel.add({id.at(i, s), id.at(j, t)}, -c);
          if (rel.isZero()) continue;
          // Scalar-normalize for the duplicate check only.
          const LaurentPoly& lead = rel.terms().begin()->second;
          Element norm;
          bool unitLead = lead.isMonomial();
          if (unitLead) {
            LaurentPoly inv = lead.monomialInverse();
            norm = rel.scaled(inv);
          } else {
            norm = rel;
          }
          if (seen.insert(norm).second) out.push_back(rel);
        }
  return out;
}

/// Keep the FRT relations supported entirely on rows 1 and 2 (ids already
/// row-major, so they transfer to the 2-row alphabet unchanged) and build the
/// kernel elements Omega_1, Omega_2, Upsilon.
inline std::pair<std::vector<Element>, std::array<Element, 3>> rowsRestrictAndKernel(
    const std::vector<Element>& frtRels, int n) {
  const int N = 2 * n;
  std::vector<Element> kept;
  for (const auto& rel : frtRels) {
    bool ok = true;
    for (const auto& [w, c] : rel.terms())
      for (auto g : w)
        if (g >= 2 * N) ok = false;
    if (ok && !rel.isZero()) kept.push_back(rel);
  }
  MatrixIds id{2, N};
  auto prime = [N](int i) { return N + 1 - i; };
  auto rho = rhoTupleD(n);
  Element omega1, omega2, upsilon;
  for (int r = 1; r <= n; ++r) {
    omega1.add({id.at(1, r), id.at(1, prime(r))}, LaurentPoly::q(rho[prime(r)]));
    omega2.add({id.at(2, r), id.at(2, prime(r))}, LaurentPoly::q(rho[prime(r)]));
  }
  for (int r = 1; r <= N; ++r)
    upsilon.add({id.at(1, prime(r)), id.at(2, r)}, LaurentPoly::q(rho[r]));
  return {kept, {omega1, omega2, upsilon}};
}

/// O_q(M_{2,m}): rows {1,2} of the type-A FRT algebra, row-reduced and
/// oriented, with degrees transported from the affine type-A picture.
inline Presentation quantumMatrices(int m) {
  if (m < 2) fail(Err::RankTooSmall, "quantum_matrices requires rank >= 2");
  RMatrix R = rMatrixA(m);
  std::vector<Element> all = frtRelations(R);
  std::vector<Element> kept;
  for (const auto& rel : all) {
    bool ok = true;
    for (const auto& [w, c] : rel.terms())
      for (auto g : w)
        if (g >= 2 * m) ok = false;
    if (ok) kept.push_back(rel);
  }

  Presentation p;
  p.name = "quantum_matrices";
  p.provenance = "rows {1,2} of the type-A FRT algebra, rank " + std::to_string(m);
  p.rank = m;
  p.lattice = RootSystemSpec::make(Family::AffineA, m);
  MatrixIds id{2, m};

  auto roots = p.lattice.rootsOfWord(reducedWordChatM(m));
  detail::requireDistinct(roots, p.name);
  p.generators.resize(2 * m);
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= m; ++c) {
      int g = id.at(r, c);
      p.generators[g] = {g, id.name(r, c), roots[(r - 1) * m + (c - 1)]};
    }

  Degree2Span span = degree2Span(kept, 2 * m);
  for (std::size_t k = 0; k < span.rows.size(); ++k)
    p.relations.push_back(spanRowToElement(span, k));
  detail::checkRelationCount(p);
  return p;
}

}  // namespace qpbw
