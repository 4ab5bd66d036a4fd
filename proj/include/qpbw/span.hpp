#pragma once

#include <map>
#include <vector>

#include "qpbw/presentation.hpp"
#include "qpbw/ratfunc.hpp"

namespace qpbw {

/// Canonical row-reduced basis of a set of quadratic relations inside the
/// length-2 word space.  Columns are the t^2 ordered words, largest word
/// first, so each basis row is pivoted on its leading word.
class Degree2Span {
 public:
  using Row = std::map<int, RationalFunctionQ>;  // column -> entry, pivot entry 1

  int numGens = 0;
  std::vector<int> pivots;      // ascending column indices
  std::vector<Row> rows;        // parallel to pivots

  int dimension() const { return (int)rows.size(); }

  bool operator==(const Degree2Span& o) const {
    return numGens == o.numGens && pivots == o.pivots && rows == o.rows;
  }
  bool operator!=(const Degree2Span& o) const { return !(*this == o); }

  /// Column index of the word [u, v]; smaller index = larger word.
  static int columnOf(int numGens, int u, int v) {
    return (numGens - 1 - u) * numGens + (numGens - 1 - v);
  }
  static std::pair<int, int> wordOf(int numGens, int col) {
    return {numGens - 1 - col / numGens, numGens - 1 - col % numGens};
  }

  /// True when v reduces to zero against this basis.
  bool contains(const Row& v) const {
    Row r = v;
    reduceInPlace(r);
    return r.empty();
  }

  bool containsSpan(const Degree2Span& o) const {
    if (numGens != o.numGens) return false;
    for (const auto& r : o.rows)
      if (!contains(r)) return false;
    return true;
  }

  void reduceInPlace(Row& r) const {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      auto it = r.find(pivots[k]);
      if (it == r.end()) continue;
      RationalFunctionQ f = it->second;
      for (const auto& [col, val] : rows[k]) {
        auto jt = r.find(col);
        RationalFunctionQ nv = (jt == r.end() ? RationalFunctionQ() : jt->second) - f * val;
        if (nv.isZero()) {
          if (jt != r.end()) r.erase(jt);
        } else {
          r[col] = nv;
        }
      }
    }
  }
};

namespace detail {

using LRow = std::map<int, LaurentPoly>;

/// Divide a row by its content: common polynomial factor, rational content,
/// and common q-shift; flip sign so the leading entry's top coefficient is
/// positive.
inline void primitivize(LRow& r) {
  if (r.empty()) return;
  LaurentPoly g = LaurentPoly::zero();
  for (const auto& [c, v] : r) {
    g = laurentGcd(g, v);
    if (g.isOne()) break;
  }
  if (!g.isOne() && !g.isZero())
    for (auto& [c, v] : r) v = v.exactDivide(g);
  Rational content = 0;
  std::int64_t shift = 0;
  bool first = true;
  for (const auto& [c, v] : r) {
    Rational rc = v.content();
    content = first ? rc : Rational(intGcd(ratNum(content) * ratDen(rc), ratNum(rc) * ratDen(content)),
                                    ratDen(content) * ratDen(rc));
    shift = first ? v.lowExp() : std::min(shift, v.lowExp());
    first = false;
  }
  bool flip = r.begin()->second.leadCoeff() < 0;
  for (auto& [c, v] : r) {
    v = v.scaled((flip ? Rational(-1) : Rational(1)) / content).shifted(-shift);
  }
}

}  // namespace detail

/// Row-reduce quadratic relations to a canonical basis.  Fraction-free
/// elimination with content removal; the final basis is normalized over the
/// rational-function field (pivot entries 1).
inline Degree2Span degree2Span(const std::vector<Element>& relations, int numGens) {
  using detail::LRow;
  std::vector<std::pair<int, LRow>> echelon;  // (pivot col, row), sorted by col

  auto insertRow = [&](LRow row) {
    detail::primitivize(row);
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto it = std::lower_bound(
          echelon.begin(), echelon.end(), lead,
          [](const std::pair<int, LRow>& p, int col) { return p.first < col; });
      if (it == echelon.end() || it->first != lead) {
        echelon.insert(it, {lead, std::move(row)});
        return;
      }
      const LRow& p = it->second;
      LaurentPoly pc = p.begin()->second;
      LaurentPoly rc = row.begin()->second;
      LRow next;
      for (const auto& [c, v] : row) {
        auto pv = p.find(c);
        LaurentPoly nv = pc * v - (pv == p.end() ? LaurentPoly::zero() : rc * pv->second);
        if (!nv.isZero()) next.emplace(c, std::move(nv));
      }
      // The lead cancels by construction.
      for (const auto& [c, v] : p) {
        if (row.count(c)) continue;
        LaurentPoly nv = -(rc * v);
        if (!nv.isZero()) next.emplace(c, std::move(nv));
      }
      row = std::move(next);
      detail::primitivize(row);
    }
  };

  for (const auto& rel : relations) {
    LRow row;
    for (const auto& [w, c] : rel.terms()) {
      if (w.size() != 2) fail(Err::NotQuadratic, "relation contains a word of length != 2");
      if (w[0] < 0 || w[0] >= numGens || w[1] < 0 || w[1] >= numGens)
        fail(Err::AlphabetMismatch, "relation uses a generator outside the alphabet");
      row[Degree2Span::columnOf(numGens, w[0], w[1])] = c;
    }
    if (!row.empty()) insertRow(std::move(row));
  }

  // Back-eliminate pivot columns from earlier tails, working upward.
  for (std::size_t i = echelon.size(); i-- > 0;) {
    for (std::size_t j = i + 1; j < echelon.size(); ++j) {
      auto& row = echelon[i].second;
      const auto& p = echelon[j].second;
      auto hit = row.find(echelon[j].first);
      if (hit == row.end()) continue;
      LaurentPoly pc = p.begin()->second;
      LaurentPoly rc = hit->second;
      LRow next;
      for (const auto& [c, v] : row) {
        auto pv = p.find(c);
        LaurentPoly nv = pc * v - (pv == p.end() ? LaurentPoly::zero() : rc * pv->second);
        if (!nv.isZero()) next.emplace(c, std::move(nv));
      }
      for (const auto& [c, v] : p) {
        if (row.count(c)) continue;
        LaurentPoly nv = -(rc * v);
        if (!nv.isZero()) next.emplace(c, std::move(nv));
      }
      row = std::move(next);
      detail::primitivize(row);
    }
  }

  Degree2Span span;
  span.numGens = numGens;
  for (auto& [col, row] : echelon) {
    Degree2Span::Row out;
    RationalFunctionQ lead(row.begin()->second);
    for (const auto& [c, v] : row) out[c] = RationalFunctionQ(v) / lead;
    span.pivots.push_back(col);
    span.rows.push_back(std::move(out));
  }
  return span;
}

/// Rebuild a basis row as an Element with Laurent coefficients (denominators
/// cleared, primitive).
inline Element spanRowToElement(const Degree2Span& span, std::size_t rowIdx) {
  const auto& row = span.rows.at(rowIdx);
  LaurentPoly lcm = LaurentPoly::one();
  for (const auto& [c, v] : row) {
    LaurentPoly g = laurentGcd(lcm, v.den());
    lcm = lcm * v.den().exactDivide(g.isZero() ? LaurentPoly::one() : g);
  }
  detail::LRow lrow;
  for (const auto& [c, v] : row) lrow[c] = v.num() * lcm.exactDivide(v.den());
  detail::primitivize(lrow);
  Element e;
  for (const auto& [c, v] : lrow) {
    auto [u, w] = Degree2Span::wordOf(span.numGens, c);
    e.add(Word{u, w}, v);
  }
  return e;
}

enum class CompareOutcome { Equal, StrictlyContained, Incomparable };

inline const char* compareOutcomeName(CompareOutcome o) {
  switch (o) {
    case CompareOutcome::Equal: return "Equal";
    case CompareOutcome::StrictlyContained: return "StrictlyContained";
    case CompareOutcome::Incomparable: return "Incomparable";
  }
  return "?";
}

struct CompareResult {
  CompareOutcome outcome = CompareOutcome::Incomparable;
  int dim1 = 0;
  int dim2 = 0;
  int gap = 0;
  std::vector<Element> complementBasis;  // basis of span2 modulo span1 when contained
};

/// Compare the relation span of span1 against span2 (same alphabet).
inline CompareResult compareSpans(const Degree2Span& s1, const Degree2Span& s2) {
  CompareResult res;
  res.dim1 = s1.dimension();
  res.dim2 = s2.dimension();
  if (s1.numGens != s2.numGens)
    fail(Err::AlphabetMismatch, "spans live over different alphabets");
  if (s1 == s2) {
    res.outcome = CompareOutcome::Equal;
    return res;
  }
  if (s2.containsSpan(s1)) {
    res.outcome = CompareOutcome::StrictlyContained;
    res.gap = res.dim2 - res.dim1;
    // Complement: rows of span2 with nonzero residue against span1.
    std::vector<Element> residues;
    for (std::size_t k = 0; k < s2.rows.size(); ++k) {
      Degree2Span::Row r = s2.rows[k];
      s1.reduceInPlace(r);
      if (r.empty()) continue;
      Degree2Span one;
      one.numGens = s2.numGens;
      one.pivots.push_back(r.begin()->first);
      Degree2Span::Row norm;
      RationalFunctionQ lead = r.begin()->second;
      for (const auto& [c, v] : r) norm[c] = v / lead;
      one.rows.push_back(norm);
      residues.push_back(spanRowToElement(one, 0));
    }
    // Reduce the residues to an independent set.
    Degree2Span resSpan = degree2Span(residues, s2.numGens);
    for (std::size_t k = 0; k < resSpan.rows.size(); ++k)
      res.complementBasis.push_back(spanRowToElement(resSpan, k));
    return res;
  }
  res.outcome = CompareOutcome::Incomparable;
  return res;
}

/// Transport p1's relations along the generator map, then compare the two
/// degree-2 relation spans inside p2's word space.
inline CompareResult comparePresentations(const Presentation& p1, const Presentation& p2,
                                          const GeneratorMap& map) {
  map.validate(p1.generators.size(), p2.generators.size());
  std::vector<Element> moved;
  moved.reserve(p1.relations.size());
  for (const auto& r : p1.relations) moved.push_back(map.apply(r));
  Degree2Span s1 = degree2Span(moved, (int)p2.generators.size());
  Degree2Span s2 = degree2Span(p2.relations, (int)p2.generators.size());
  return compareSpans(s1, s2);
}

}  // namespace qpbw
