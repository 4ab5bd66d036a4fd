#pragma once

#include <string>
#include <vector>

#include "qpbw/element.hpp"
#include "qpbw/rewrite.hpp"

namespace qpbw {

/// A named generators-and-relations package, graded over a root lattice.
struct Presentation {
  std::string name;
  std::string provenance;
  RootSystemSpec lattice;
  int rank = 0;
  std::vector<GeneratorInfo> generators;
  std::vector<Element> relations;

  int genId(const std::string& genName) const {
    for (const auto& g : generators)
      if (g.name == genName) return g.id;
    return -1;
  }

  RewriteSystem orient() const { return RewriteSystem::orient(generators, relations); }

  bool operator==(const Presentation& o) const {
    if (name != o.name || rank != o.rank || generators.size() != o.generators.size() ||
        relations != o.relations)
      return false;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].id != o.generators[i].id || generators[i].name != o.generators[i].name ||
          generators[i].degree != o.generators[i].degree)
        return false;
    }
    return true;
  }
};

/// Generator bijection with unit scalars: source id i maps to
/// scalar[i] * (target generator target[i]).
struct GeneratorMap {
  std::vector<int> target;
  std::vector<LaurentPoly> scalar;

  static GeneratorMap identity(std::size_t n) {
    GeneratorMap m;
    m.target.resize(n);
    m.scalar.assign(n, LaurentPoly::one());
    for (std::size_t i = 0; i < n; ++i) m.target[i] = (int)i;
    return m;
  }

  void validate(std::size_t sourceSize, std::size_t targetSize) const {
    if (target.size() != sourceSize || scalar.size() != sourceSize)
      fail(Err::BadMap, "generator map size mismatch");
    std::vector<bool> hit(targetSize, false);
    for (std::size_t i = 0; i < target.size(); ++i) {
      int t = target[i];
      if (t < 0 || t >= (int)targetSize || hit[t]) fail(Err::BadMap, "map is not a bijection");
      hit[t] = true;
      const LaurentPoly& s = scalar[i];
      if (!s.isMonomial() || ratAbs(s.terms().begin()->second) != 1)
        fail(Err::BadMap, "map scalar is not a unit of the form +-q^k");
    }
    if (sourceSize != targetSize) fail(Err::BadMap, "alphabets have different sizes");
  }

  Element apply(const Element& x) const {
    Element out;
    for (const auto& [w, c] : x.terms()) {
      Word nw;
      nw.reserve(w.size());
      LaurentPoly coeff = c;
      for (auto g : w) {
        if (g < 0 || g >= (int)target.size()) fail(Err::BadMap, "word uses unmapped generator");
        nw.push_back(target[g]);
        coeff *= scalar[g];
      }
      out.add(nw, coeff);
    }
    return out;
  }
};

}  // namespace qpbw
