#pragma once

#include "qpbw/smash.hpp"

namespace qpbw {

/// The bicharacter on Q(affine D_{n+1}) with beta(alpha_0, alpha_{n+1}) = q
/// and 1 elsewhere.
inline Bicharacter betaBicharacterD(int n) {
  Bicharacter b;
  b.set(0, n + 1, LaurentPoly::q(1));
  return b;
}

/// The bicharacter on Q(affine A_m) with gamma(alpha_0, alpha_1) = q.
inline Bicharacter gammaBicharacterA(int) {
  Bicharacter b;
  b.set(0, 1, LaurentPoly::q(1));
  return b;
}

/// Presentation of the b-twisted algebra.  With the twisted product
/// x'y' = b(deg x, deg y) (xy)', a defining relation sum c_w w = 0 reads
/// sum c_w [prod_{i<j} b(deg w_i, deg w_j)]^{-1} w' = 0 on the primed
/// generators, so each word's coefficient is divided by the pair product.
/// The grading is unchanged; twisting by b then by its pointwise inverse is
/// the identity.
inline Presentation twistPresentation(const Presentation& p, const Bicharacter& b) {
  Presentation out = p;
  out.name = p.name + "'";
  out.provenance = "cocycle twist of " + p.name + ", rank " + std::to_string(p.rank);
  out.relations.clear();
  for (const auto& g : p.generators)
    if ((int)g.degree.e.size() != p.lattice.dim())
      fail(Err::UngradedGenerator, "generator " + g.name + " has no degree in the lattice");
  for (const auto& rel : p.relations) {
    Element twisted;
    for (const auto& [w, c] : rel.terms()) {
      LaurentPoly scale = LaurentPoly::one();
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
          scale *= b.eval(p.lattice, p.generators[w[i]].degree, p.generators[w[j]].degree);
      twisted.add(w, c * scale.monomialInverse());
    }
    out.relations.push_back(twisted);
  }
  return out;
}

/// Relabel a presentation along a generator bijection with unit scalars; the
/// target alphabet supplies names and degrees.
inline Presentation applyGeneratorMap(const Presentation& p, const GeneratorMap& map,
                                      const Presentation& target) {
  map.validate(p.generators.size(), target.generators.size());
  Presentation out = target;
  out.name = p.name + "->" + target.name;
  out.provenance = "generator relabeling of " + p.name;
  out.relations.clear();
  for (const auto& rel : p.relations) out.relations.push_back(map.apply(rel));
  return out;
}

/// The signed relabeling X_i -> (-1)^{n+1-i} X[1,n+1-i], Y_i -> X[1,n+i],
/// Xb_i -> (-1)^{n+1-i} X[2,n+1-i], Yb_i -> X[2,n+i].  In the row-major
/// matrix alphabet these are the identity on positions; only signs remain.
inline GeneratorMap twistingMapD(int n) {
  AffineDIds aid{n};
  MatrixIds mid{2, 2 * n};
  GeneratorMap m;
  m.target.assign(4 * n, 0);
  m.scalar.assign(4 * n, LaurentPoly::one());
  for (int i = 1; i <= n; ++i) {
    LaurentPoly sign = LaurentPoly::constant((n + 1 - i) % 2 == 0 ? 1 : -1);
    m.target[aid.X(i)] = mid.at(1, n + 1 - i);
    m.scalar[aid.X(i)] = sign;
    m.target[aid.Y(i)] = mid.at(1, n + i);
    m.target[aid.Xb(i)] = mid.at(2, n + 1 - i);
    m.scalar[aid.Xb(i)] = sign;
    m.target[aid.Yb(i)] = mid.at(2, n + i);
  }
  return m;
}

/// Type-A analogue: z_i#1 -> X[1,i], 1#z_i -> X[2,i], no signs.
inline GeneratorMap twistingMapA(int m) {
  GeneratorMap g = GeneratorMap::identity(2 * m);
  return g;
}

}  // namespace qpbw
