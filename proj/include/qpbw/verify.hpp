#pragma once

#include <chrono>
#include <json.hpp>
#include <string>
#include <vector>

#include "qpbw/io.hpp"
#include "qpbw/twist.hpp"

namespace qpbw {

struct VerifyOptions {
  std::int64_t maxSteps = 10'000'000;
  bool parallel = true;
};

/// Machine-readable outcome of one claim check.
struct Evidence {
  std::string claim;
  int rank = 0;
  bool pass = false;
  nlohmann::ordered_json dimensions = nlohmann::ordered_json::object();
  std::vector<std::string> gapBasis;
  std::vector<std::vector<std::string>> failedTriples;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
  std::int64_t steps = 0;
  double elapsedSeconds = 0;

  nlohmann::ordered_json toJson(bool withMeta) const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["rank"] = rank;
    j["status"] = pass ? "pass" : "fail";
    j["dimensions"] = dimensions;
    j["gap_basis"] = gapBasis;
    j["failed_triples"] = failedTriples;
    if (!detail.empty()) j["detail"] = detail;
    j["steps"] = steps;
    if (withMeta) {
      j["meta"] = nlohmann::ordered_json::object();
      j["meta"]["elapsed_seconds"] = elapsedSeconds;
    }
    return j;
  }
};

namespace claims {

inline std::vector<std::string> pbwNames() {
  return {"euclidean", "affine_space", "affineD", "smashD", "xalgebra", "quantum_matrices",
          "smashA"};
}

inline Presentation buildForPbw(const std::string& name, int rank) {
  if (name == "quantum_matrices") return quantumMatrices(rank);
  if (name == "smashA") return smashPresentation(Family::A, rank);
  if (name == "smashD") return smashPresentation(Family::D, rank);
  return buildNamed(name, rank);
}

inline void recordTriples(Evidence& ev, const RewriteSystem& sys,
                          const std::vector<std::array<int, 3>>& failed) {
  for (const auto& t : failed)
    ev.failedTriples.push_back({sys.generators()[t[0]].name, sys.generators()[t[1]].name,
                                sys.generators()[t[2]].name});
}

/// PBW certification of one presentation: orientation + empty diamond check.
inline Evidence pbwEvidence(const Presentation& p, const VerifyOptions& opt) {
  Evidence ev;
  RewriteSystem sys = p.orient();
  sys.setStepBudget(opt.maxSteps);
  auto failed = sys.diamondCheck(opt.parallel, &ev.steps);
  ev.pass = failed.empty();
  ev.dimensions["generators"] = p.generators.size();
  ev.dimensions["relations"] = p.relations.size();
  recordTriples(ev, sys, failed);
  return ev;
}

/// Derived cross-relations against the transcribed ones, coefficient for
/// coefficient.
inline Evidence propCrossEvidence(int n, const VerifyOptions&) {
  Evidence ev;
  SmashTables t = smashTables(Family::D, n);
  std::vector<Element> derived = deriveCrossRelations(t);
  const int T = 2 * n;
  auto leadOf = [T](const Element& e) {
    for (const auto& [w, c] : e.terms())
      if (w[0] >= T) return w;
    fail(Err::InvalidArgument, "cross relation without a mixed leading word");
  };
  std::map<Word, Element> expectedByLead;  // keyed by the word (1#g)(h#1)
  for (int kind = 1; kind <= 4; ++kind)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Element e = detail::smashDCross(n, kind, i, j);
        expectedByLead[leadOf(e)] = e;
      }
  int mismatches = 0;
  nlohmann::ordered_json diffs = nlohmann::ordered_json::array();
  std::vector<std::string> names = idNamesDoubled(t.base);
  for (const auto& d : derived) {
    Word lead = leadOf(d);
    auto it = expectedByLead.find(lead);
    if (it == expectedByLead.end() || it->second != d) {
      ++mismatches;
      nlohmann::ordered_json entry;
      entry["pair"] = {names[lead[0]], names[lead[1]]};
      entry["derived"] = elementToString(d, names);
      entry["expected"] =
          it == expectedByLead.end() ? "(none)" : elementToString(it->second, names);
      diffs.push_back(entry);
    }
  }
  ev.pass = mismatches == 0 && derived.size() == expectedByLead.size();
  ev.dimensions["cross_relations"] = derived.size();
  ev.dimensions["mismatches"] = mismatches;
  if (mismatches) ev.detail["diffs"] = diffs;
  return ev;
}

/// affineD(n) equals the derived smash presentation under the positional map.
inline Evidence affineSmashDEvidence(const Presentation& affD, const Presentation& smashDerived,
                                     const VerifyOptions&) {
  Evidence ev;
  GeneratorMap m = GeneratorMap::identity(affD.generators.size());
  CompareResult res = comparePresentations(affD, smashDerived, m);
  ev.pass = res.outcome == CompareOutcome::Equal;
  ev.dimensions["affine_span"] = res.dim1;
  ev.dimensions["smash_span"] = res.dim2;
  ev.detail["outcome"] = compareOutcomeName(res.outcome);
  if (!ev.pass)
    for (const auto& e : res.complementBasis)
      ev.gapBasis.push_back(elementToString(e, presentationNames(smashDerived)));
  return ev;
}

/// FRT rows {1,2} strictly contain the xalgebra span with gap exactly 3,
/// spanned by Omega_1, Omega_2, Upsilon.
inline Evidence frtKernelEvidence(const Presentation& xalg, int n, const VerifyOptions&) {
  Evidence ev;
  auto [kept, kernel] = rowsRestrictAndKernel(frtRelations(rMatrixD(n)), n);
  const int gens = 4 * n;
  Degree2Span tSpan = degree2Span(kept, gens);
  Degree2Span xSpan = degree2Span(xalg.relations, gens);
  CompareResult res = compareSpans(xSpan, tSpan);
  ev.dimensions["xalgebra_span"] = xSpan.dimension();
  ev.dimensions["frt_rows12_span"] = tSpan.dimension();
  ev.dimensions["gap"] = res.gap;
  ev.detail["outcome"] = compareOutcomeName(res.outcome);

  // The three kernel elements must close the gap exactly.
  std::vector<Element> extended = xalg.relations;
  extended.push_back(kernel[0]);
  extended.push_back(kernel[1]);
  extended.push_back(kernel[2]);
  Degree2Span xPlus = degree2Span(extended, gens);
  bool closes = xPlus == tSpan;
  ev.detail["kernel_closes_gap"] = closes;
  ev.pass = res.outcome == CompareOutcome::StrictlyContained && res.gap == 3 && closes;
  for (const auto& e : res.complementBasis)
    ev.gapBasis.push_back(elementToString(e, presentationNames(xalg)));
  return ev;
}

/// Twisted affineD, relabeled, spans the same relations as xalgebra; both
/// sides also certify their own PBW bases.
inline Evidence twistingDEvidence(const Presentation& affD, const Presentation& xalg, int n,
                                  const VerifyOptions& opt) {
  Evidence ev;
  Presentation twisted = twistPresentation(affD, betaBicharacterD(n));
  Presentation mapped = applyGeneratorMap(twisted, twistingMapD(n), xalg);
  Degree2Span s1 = degree2Span(mapped.relations, (int)xalg.generators.size());
  Degree2Span s2 = degree2Span(xalg.relations, (int)xalg.generators.size());
  CompareResult res = compareSpans(s1, s2);
  ev.dimensions["twisted_span"] = res.dim1;
  ev.dimensions["xalgebra_span"] = res.dim2;
  ev.detail["outcome"] = compareOutcomeName(res.outcome);
  bool spansEqual = res.outcome == CompareOutcome::Equal;

  RewriteSystem sysA = affD.orient();
  sysA.setStepBudget(opt.maxSteps);
  RewriteSystem sysX = xalg.orient();
  sysX.setStepBudget(opt.maxSteps);
  auto f1 = sysA.diamondCheck(opt.parallel, &ev.steps);
  auto f2 = sysX.diamondCheck(opt.parallel, &ev.steps);
  recordTriples(ev, sysA, f1);
  recordTriples(ev, sysX, f2);
  ev.detail["pbw_both_sides"] = f1.empty() && f2.empty();
  ev.pass = spansEqual && f1.empty() && f2.empty();
  if (!spansEqual)
    for (const auto& e : res.complementBasis)
      ev.gapBasis.push_back(elementToString(e, presentationNames(xalg)));
  return ev;
}

/// The machine-checkable content of the affine-A smash theorem: the affine
/// roots of chat_m grade the derived presentation (block 1 = base roots,
/// every derived relation homogeneous) and the presentation is PBW.
inline Evidence affineSmashAEvidence(int m, const VerifyOptions& opt) {
  Evidence ev;
  Presentation p = smashPresentation(Family::A, m);  // asserts the grading facts
  LatticeVector delta;                               // second block sits delta above the first
  bool shifted = true;
  for (int k = 0; k < m; ++k) {
    LatticeVector d = p.generators[m + k].degree - p.generators[k].degree;
    if (k == 0)
      delta = d;
    else if (d != delta)
      shifted = false;
  }
  ev.detail["second_block_shift"] = delta.str();
  RewriteSystem sys = p.orient();
  sys.setStepBudget(opt.maxSteps);
  auto failed = sys.diamondCheck(opt.parallel, &ev.steps);
  recordTriples(ev, sys, failed);
  ev.dimensions["generators"] = p.generators.size();
  ev.dimensions["relations"] = p.relations.size();
  ev.pass = shifted && failed.empty() && delta.delta == 1;
  return ev;
}

/// gamma-twist of the derived type-A smash presentation spans the same
/// relations as the 2 x m quantum matrix algebra from the FRT construction.
inline Evidence twistingAEvidence(int m, const VerifyOptions& opt) {
  Evidence ev;
  Presentation smashA = smashPresentation(Family::A, m);
  Presentation qm = quantumMatrices(m);
  Presentation twisted = twistPresentation(smashA, gammaBicharacterA(m));
  Presentation mapped = applyGeneratorMap(twisted, twistingMapA(m), qm);
  Degree2Span s1 = degree2Span(mapped.relations, (int)qm.generators.size());
  Degree2Span s2 = degree2Span(qm.relations, (int)qm.generators.size());
  CompareResult res = compareSpans(s1, s2);
  ev.dimensions["twisted_span"] = res.dim1;
  ev.dimensions["quantum_matrices_span"] = res.dim2;
  ev.detail["outcome"] = compareOutcomeName(res.outcome);
  bool spansEqual = res.outcome == CompareOutcome::Equal;

  RewriteSystem sysS = smashA.orient();
  sysS.setStepBudget(opt.maxSteps);
  RewriteSystem sysQ = qm.orient();
  sysQ.setStepBudget(opt.maxSteps);
  auto f1 = sysS.diamondCheck(opt.parallel, &ev.steps);
  auto f2 = sysQ.diamondCheck(opt.parallel, &ev.steps);
  recordTriples(ev, sysS, f1);
  recordTriples(ev, sysQ, f2);
  ev.pass = spansEqual && f1.empty() && f2.empty();
  if (!spansEqual)
    for (const auto& e : res.complementBasis)
      ev.gapBasis.push_back(elementToString(e, presentationNames(qm)));
  return ev;
}

}  // namespace claims

inline std::vector<std::string> allClaimIds() {
  std::vector<std::string> ids = {"prop-cross", "prop-frt-kernel", "thm-affineA-smash",
                                  "thm-affineD-smash", "thm-twisting-A", "thm-twisting-D"};
  for (const auto& n : claims::pbwNames()) ids.push_back("pbw-" + n);
  std::sort(ids.begin(), ids.end());
  return ids;
}

/// Minimum admissible rank for a claim; UnknownClaim for bad ids.
inline int claimMinRank(const std::string& id) {
  if (id == "pbw-affine_space" || id == "pbw-quantum_matrices" || id == "pbw-smashA" ||
      id == "thm-affineA-smash" || id == "thm-twisting-A")
    return 2;
  if (id == "pbw-xalgebra" || id == "prop-frt-kernel") return 2;
  if (id == "pbw-euclidean" || id == "pbw-affineD" || id == "pbw-smashD" || id == "prop-cross" ||
      id == "thm-affineD-smash" || id == "thm-twisting-D")
    return 3;
  fail(Err::UnknownClaim, "no claim with id '" + id + "'");
}

inline Evidence verifyClaim(const std::string& id, int rank, const VerifyOptions& opt = {}) {
  int minRank = claimMinRank(id);
  if (rank < minRank)
    fail(Err::RankTooSmall,
         "claim " + id + " requires rank >= " + std::to_string(minRank));

  auto start = std::chrono::steady_clock::now();
  Evidence ev;
  if (id.rfind("pbw-", 0) == 0) {
    ev = claims::pbwEvidence(claims::buildForPbw(id.substr(4), rank), opt);
  } else if (id == "prop-cross") {
    ev = claims::propCrossEvidence(rank, opt);
  } else if (id == "thm-affineD-smash") {
    ev = claims::affineSmashDEvidence(buildAffineD(rank), smashPresentation(Family::D, rank), opt);
  } else if (id == "prop-frt-kernel") {
    ev = claims::frtKernelEvidence(buildXAlgebra(rank), rank, opt);
  } else if (id == "thm-twisting-D") {
    ev = claims::twistingDEvidence(buildAffineD(rank), buildXAlgebra(rank), rank, opt);
  } else if (id == "thm-affineA-smash") {
    ev = claims::affineSmashAEvidence(rank, opt);
  } else if (id == "thm-twisting-A") {
    ev = claims::twistingAEvidence(rank, opt);
  } else {
    fail(Err::UnknownClaim, "no claim with id '" + id + "'");
  }
  ev.claim = id;
  ev.rank = rank;
  ev.elapsedSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return ev;
}

/// Run every claim admissible at the given rank; results sorted by claim id.
inline std::vector<Evidence> runAllClaims(int rank, const VerifyOptions& opt = {}) {
  std::vector<Evidence> out;
  for (const auto& id : allClaimIds()) {
    if (rank < claimMinRank(id)) continue;
    out.push_back(verifyClaim(id, rank, opt));
  }
  return out;
}

}  // namespace qpbw
