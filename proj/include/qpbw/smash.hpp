#pragma once

#include <cctype>
#include <tuple>
#include <vector>

#include "qpbw/catalog.hpp"

namespace qpbw {

/// Symbolic left tensor factor appearing in a coproduct expansion.  The
/// E-string and eps actors are opaque labels with tabulated actions; only
/// Kappa acts by a formula (diagonally) and Product composes right-to-left.
struct Actor {
  enum class Kind { Kappa, EDown, EUp, Eps, RootVec, Product };

  Kind kind = Kind::Kappa;
  LatticeVector weight;        // Kappa
  int a = 0, b = 0;            // EDown(j,i) ~ E_{j v i+1}; EUp(j,i) ~ E_{j+1 ^ i}; Eps(i,j)
  int gen = -1;                // RootVec
  std::vector<Actor> factors;  // Product, applied right to left

  static Actor kappa(LatticeVector mu) {
    Actor x;
    x.kind = Kind::Kappa;
    x.weight = std::move(mu);
    return x;
  }
  static Actor eDown(int j, int i) {
    if (j <= i) fail(Err::UnknownActor, "EDown(j,i) requires j > i");
    Actor x;
    x.kind = Kind::EDown;
    x.a = j;
    x.b = i;
    return x;
  }
  /// Bare Chevalley generator E_j, the singleton down-string.
  static Actor chevalley(int j) { return eDown(j, j - 1); }
  static Actor eUp(int j, int i) {
    if (j >= i) fail(Err::UnknownActor, "EUp(j,i) requires j < i");
    Actor x;
    x.kind = Kind::EUp;
    x.a = j;
    x.b = i;
    return x;
  }
  static Actor eps(int i, int j) {
    Actor x;
    x.kind = Kind::Eps;
    x.a = i;
    x.b = j;
    return x;
  }
  static Actor rootVec(int gen) {
    Actor x;
    x.kind = Kind::RootVec;
    x.gen = gen;
    return x;
  }
  static Actor product(std::vector<Actor> fs) {
    Actor x;
    x.kind = Kind::Product;
    x.factors = std::move(fs);
    return x;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Kappa: return "K(" + weight.str() + ")";
      case Kind::EDown: return "Edown(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case Kind::EUp: return "Eup(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case Kind::Eps: return "eps(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case Kind::RootVec: return "rootvec(" + std::to_string(gen) + ")";
      case Kind::Product: {
        std::string s;
        for (std::size_t k = 0; k < factors.size(); ++k) {
          if (k) s += "*";
          s += factors[k].str();
        }
        return s;
      }
    }
    return "?";
  }
};

struct CoproductEntry {
  Actor actor;
  LaurentPoly scalar;
  int right = -1;  // base generator id, or -1 for the unit right factor
};

/// Coproduct expansions and tabulated action values for one base algebra.
class SmashTables {
 public:
  Family family{};
  int rank = 0;
  Presentation base;                                  // euclidean(n) or affine_space(m)
  std::map<int, std::vector<CoproductEntry>> coprod;  // by base generator id
  std::map<std::tuple<int, int, int, int>, Element> leaf;  // (kind, a, b, gen) -> value

  Element act(const Actor& x, int gen) const {
    if (gen < 0 || gen >= (int)base.generators.size())
      fail(Err::BadIndex, "action on unknown generator");
    switch (x.kind) {
      case Actor::Kind::Kappa: {
        std::int64_t k = base.lattice.pairing(x.weight, base.generators[gen].degree);
        return Element::ofWord({gen}, LaurentPoly::q(k));
      }
      case Actor::Kind::RootVec:
        return Element::zero();
      case Actor::Kind::Product: {
        Element acc = Element::ofWord({gen});
        for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it) {
          Element next;
          for (const auto& [w, c] : acc.terms()) {
            if (w.size() != 1)
              fail(Err::MissingActionValue, "action values must be single generators");
            next += c * act(*it, w[0]);
          }
          acc = next;
        }
        return acc;
      }
      case Actor::Kind::EDown:
      case Actor::Kind::EUp:
      case Actor::Kind::Eps: {
        auto it = leaf.find({(int)x.kind, x.a, x.b, gen});
        if (it == leaf.end())
          fail(Err::UnknownActor, "no tabulated value for " + x.str() + " on generator " +
                                      base.generators[gen].name);
        return it->second;
      }
    }
    fail(Err::UnknownActor, "unhandled actor kind");
  }
};

/// Build the coproduct and action tables.
///
/// Type D entries are the tabulated expansions of Delta(x_i), Delta(y_i) with
/// the E-string and eps actors.  Type A uses the analogous chain expansion
/// Delta(z_i) = K (x) z_i + z_i (x) 1 + qhat sum_{j<i} Eup(j,i) K (x) z_j with
/// Eup(j,i).z_r = -q d_{jr} z_i.
inline SmashTables smashTables(Family family, int rank) {
  SmashTables t;
  t.family = family;
  t.rank = rank;
  const LaurentPoly qh = LaurentPoly::qhat();

  if (family == Family::D) {
    int n = rank;
    t.base = buildEuclidean(n);
    EuclideanIds id{n};
    auto degOf = [&](int g) { return t.base.generators[g].degree; };

    for (int i = 1; i <= n; ++i) {
      // Delta(x_i)
      std::vector<CoproductEntry> ex;
      ex.push_back({Actor::kappa(degOf(id.x(i)).scaled(-1)), LaurentPoly::one(), id.x(i)});
      ex.push_back({Actor::rootVec(id.x(i)), LaurentPoly::one(), -1});
      for (int j = i + 1; j <= n; ++j)
        ex.push_back({Actor::product({Actor::eDown(j, i), Actor::kappa(degOf(id.x(j)).scaled(-1))}),
                      qh, id.x(j)});
      t.coprod[id.x(i)] = std::move(ex);

      // Delta(y_i)
      std::vector<CoproductEntry> ey;
      ey.push_back({Actor::kappa(degOf(id.y(i)).scaled(-1)), LaurentPoly::one(), id.y(i)});
      ey.push_back({Actor::rootVec(id.y(i)), LaurentPoly::one(), -1});
      for (int j = 1; j <= n; ++j)
        ey.push_back({Actor::product({Actor::eps(i, j), Actor::kappa(degOf(id.x(j)).scaled(-1))}),
                      qh, id.x(j)});
      for (int j = 1; j < i; ++j)
        ey.push_back({Actor::product({Actor::eUp(j, i), Actor::kappa(degOf(id.y(j)).scaled(-1))}),
                      qh, id.y(j)});
      t.coprod[id.y(i)] = std::move(ey);
    }

    // Tabulated leaf actions.
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        for (int r = 1; r <= n; ++r) {
          // EDown(j,i): .x_r = -q d_{jr} x_i ; .y_r = (-q)^{j-i} d_{ir} y_j
          Element onX = (j == r) ? Element::ofWord({id.x(i)}, -LaurentPoly::q(1)) : Element::zero();
          Element onY =
              (i == r) ? Element::ofWord({id.y(j)}, LaurentPoly::minusQPow(j - i)) : Element::zero();
          t.leaf[{(int)Actor::Kind::EDown, j, i, id.x(r)}] = onX;
          t.leaf[{(int)Actor::Kind::EDown, j, i, id.y(r)}] = onY;
        }
    for (int j = 1; j <= n; ++j)
      for (int i = j + 1; i <= n; ++i)
        for (int r = 1; r <= n; ++r) {
          // EUp(j,i): .x_r = (-q)^{i-j} d_{ir} x_j ; .y_r = -q d_{jr} y_i
          Element onX =
              (i == r) ? Element::ofWord({id.x(j)}, LaurentPoly::minusQPow(i - j)) : Element::zero();
          Element onY = (j == r) ? Element::ofWord({id.y(i)}, -LaurentPoly::q(1)) : Element::zero();
          t.leaf[{(int)Actor::Kind::EUp, j, i, id.x(r)}] = onX;
          t.leaf[{(int)Actor::Kind::EUp, j, i, id.y(r)}] = onY;
        }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int r = 1; r <= n; ++r) {
          // eps(i,j): .x_r = (-q)^{i+j-2} q^{d_ij} d_{ir} y_j - q d_{jr} y_i ; .y_r = 0
          Element onX;
          if (i == r)
            onX.add({id.y(j)},
                    LaurentPoly::minusQPow(i + j - 2) * LaurentPoly::q(i == j ? 1 : 0));
          if (j == r) onX.add({id.y(i)}, -LaurentPoly::q(1));
          t.leaf[{(int)Actor::Kind::Eps, i, j, id.x(r)}] = onX;
          t.leaf[{(int)Actor::Kind::Eps, i, j, id.y(r)}] = Element::zero();
        }
    // Bare E_1 and E_{n+1}, the two singleton strings outside the generic
    // pattern: E_1 sends x_1, x_2 to -q y_2, -q y_1 and kills y_r; E_{n+1}
    // kills everything.
    for (int r = 1; r <= n; ++r) {
      Element e1x;
      if (r == 1) e1x.add({id.y(2)}, -LaurentPoly::q(1));
      if (r == 2) e1x.add({id.y(1)}, -LaurentPoly::q(1));
      t.leaf[{(int)Actor::Kind::EDown, 1, 0, id.x(r)}] = e1x;
      t.leaf[{(int)Actor::Kind::EDown, 1, 0, id.y(r)}] = Element::zero();
      t.leaf[{(int)Actor::Kind::EDown, n + 1, n, id.x(r)}] = Element::zero();
      t.leaf[{(int)Actor::Kind::EDown, n + 1, n, id.y(r)}] = Element::zero();
    }
    return t;
  }

  if (family == Family::A) {
    int m = rank;
    t.base = buildAffineSpace(m);
    auto degOf = [&](int g) { return t.base.generators[g].degree; };
    for (int i = 1; i <= m; ++i) {
      std::vector<CoproductEntry> ez;
      ez.push_back({Actor::kappa(degOf(i - 1).scaled(-1)), LaurentPoly::one(), i - 1});
      ez.push_back({Actor::rootVec(i - 1), LaurentPoly::one(), -1});
      for (int j = 1; j < i; ++j)
        ez.push_back(
            {Actor::product({Actor::eUp(j, i), Actor::kappa(degOf(j - 1).scaled(-1))}), qh, j - 1});
      t.coprod[i - 1] = std::move(ez);
    }
    for (int j = 1; j <= m; ++j)
      for (int i = j + 1; i <= m; ++i)
        for (int r = 1; r <= m; ++r) {
          Element onZ = (j == r) ? Element::ofWord({i - 1}, -LaurentPoly::q(1)) : Element::zero();
          t.leaf[{(int)Actor::Kind::EUp, j, i, r - 1}] = onZ;
        }
    // Bare E_1 acts as zero in type A.
    for (int r = 1; r <= m; ++r)
      t.leaf[{(int)Actor::Kind::EUp, 0, 1, r - 1}] = Element::zero();
    return t;
  }

  fail(Err::InvalidArgument, "smash tables exist for families A and D");
}

/// Cross-relations of the smash product over the doubled alphabet
/// (copy-1 = u#1 on ids 0..t-1, copy-2 = 1#u on ids t..2t-1):
/// (1#g)(h#1) = sum over coproduct entries of scalar * (actor.h) # right.
inline std::vector<Element> deriveCrossRelations(const SmashTables& t) {
  const int T = (int)t.base.generators.size();
  std::vector<Element> out;
  for (int g = 0; g < T; ++g) {
    auto it = t.coprod.find(g);
    if (it == t.coprod.end()) fail(Err::MissingActionValue, "no coproduct entry for generator");
    for (int h = 0; h < T; ++h) {
      Element rel = Element::ofWord({T + g, h});
      for (const auto& entry : it->second) {
        Element acted = t.act(entry.actor, h);
        for (const auto& [w, c] : acted.terms()) {
          if (w.size() != 1)
            fail(Err::MissingActionValue, "action values must be single generators");
          Word word = entry.right < 0 ? Word{w[0]} : Word{w[0], (std::int32_t)(T + entry.right)};
          rel.add(word, -(entry.scalar * c));
        }
      }
      out.push_back(rel);
    }
  }
  return out;
}

/// Assemble the full smash presentation from an explicit base copy: two base
/// blocks plus the derived cross relations, graded by the affine roots.
inline Presentation assembleSmashPresentation(const SmashTables& t, const Presentation& base) {
  const int T = (int)base.generators.size();
  Presentation p;
  p.rank = t.rank;
  if (t.family == Family::D) {
    p.name = "smashD";
    p.lattice = RootSystemSpec::make(Family::AffineD, t.rank);
  } else {
    p.name = "smashA";
    p.lattice = RootSystemSpec::make(Family::AffineA, t.rank);
  }
  p.provenance = "derived smash presentation, rank " + std::to_string(t.rank);

  std::vector<int> word =
      t.family == Family::D ? reducedWordWhatN(t.rank) : reducedWordChatM(t.rank);
  auto roots = p.lattice.rootsOfWord(word);
  detail::requireDistinct(roots, p.name);
  if ((int)roots.size() != 2 * T)
    fail(Err::InvalidArgument, "affine reduced word length does not match the doubled alphabet");
  // Copy-2 names mirror the base with a 'b' after the letter: x1 -> xb1.
  auto barName = [](const std::string& s) {
    std::size_t k = 0;
    while (k < s.size() && !std::isdigit((unsigned char)s[k])) ++k;
    return s.substr(0, k) + "b" + s.substr(k);
  };
  p.generators.resize(2 * T);
  for (int k = 0; k < T; ++k) {
    if (roots[k] != base.generators[k].degree)
      fail(Err::InvalidArgument,
           p.name + ": first affine block does not reproduce the base degrees");
    p.generators[k] = {k, base.generators[k].name, roots[k]};
    p.generators[T + k] = {T + k, barName(base.generators[k].name), roots[T + k]};
  }

  for (const auto& r : base.relations) p.relations.push_back(r);
  for (const auto& r : base.relations) {
    Element moved;
    for (const auto& [w, c] : r.terms()) {
      Word nw;
      for (auto g : w) nw.push_back(g + T);
      moved.add(nw, c);
    }
    p.relations.push_back(moved);
  }
  for (auto& r : deriveCrossRelations(t)) p.relations.push_back(std::move(r));
  detail::checkRelationCount(p);
  return p;
}

/// The smash presentation with the catalog base algebra.
inline Presentation smashPresentation(Family family, int rank) {
  if (family == Family::D && rank < 3) fail(Err::RankTooSmall, "smashD requires rank >= 3");
  if (family == Family::A && rank < 2) fail(Err::RankTooSmall, "smashA requires rank >= 2");
  SmashTables t = smashTables(family, rank);
  return assembleSmashPresentation(t, t.base);
}

}  // namespace qpbw
