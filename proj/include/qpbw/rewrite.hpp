#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>

#include "qpbw/element.hpp"

namespace qpbw {

/// Word order used throughout: graded by length, then lexicographic on the id
/// sequence read left to right.
inline int cmpWords(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

inline bool wordSorted(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) return false;
  return true;
}

/// Oriented quadratic rewrite system: one rule g_b g_a -> RHS per out-of-order
/// pair (b > a).  Immutable after construction apart from the step budget.
class RewriteSystem {
 public:
  enum class Strategy { LeftmostFirst, RightmostFirst };
  using Trace = std::function<void(const Word& word, int pos, const Element& rhs)>;

  /// Orients a list of homogeneous quadratic relations.  Each relation must
  /// contain exactly one out-of-order word, solvable with RHS words strictly
  /// below the LHS in the word order.
  static RewriteSystem orient(std::vector<GeneratorInfo> gens,
                              const std::vector<Element>& relations) {
    RewriteSystem sys;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].id != (int)i) fail(Err::InvalidArgument, "generator ids must be consecutive");
    sys.gens_ = std::move(gens);
    for (std::size_t r = 0; r < relations.size(); ++r) {
      const Element& rel = relations[r];
      const std::string where = "relation #" + std::to_string(r);
      if (rel.isZero()) fail(Err::NotOrientable, where + " is zero");
      for (const auto& [w, c] : rel.terms()) {
        if (w.size() != 2) fail(Err::NotOrientable, where + " has a non-quadratic word");
        if (w[0] < 0 || w[0] >= (int)sys.gens_.size() || w[1] < 0 ||
            w[1] >= (int)sys.gens_.size())
          fail(Err::AlphabetMismatch, where + " uses an unknown generator");
      }
      if (!isHomogeneous(sys.gens_, rel))
        fail(Err::NotOrientable, where + " is not homogeneous in the lattice grading");

      const Word* lead = nullptr;
      for (const auto& [w, c] : rel.terms()) {
        if (w[0] > w[1]) {
          if (lead) fail(Err::NotOrientable, where + " has two out-of-order words");
          lead = &w;
        }
      }
      if (!lead) fail(Err::NotOrientable, where + " has no out-of-order word");

      LaurentPoly leadCoeff = rel.terms().at(*lead);
      Element rhs;
      for (const auto& [w, c] : rel.terms()) {
        if (w == *lead) continue;
        LaurentPoly scaled;
        try {
          scaled = (-c).exactDivide(leadCoeff);
        } catch (const Error&) {
          fail(Err::NotOrientable, where + " leading coefficient does not divide the tail");
        }
        if (cmpWords(w, *lead) >= 0)
          fail(Err::NonDecreasing, where + " has a tail word not below the leading word");
        rhs.add(w, scaled);
      }
      auto key = std::make_pair((int)(*lead)[0], (int)(*lead)[1]);
      if (sys.rules_.count(key))
        fail(Err::DuplicatePair, where + " duplicates the rule for (" +
                                     sys.gens_[key.first].name + ", " + sys.gens_[key.second].name +
                                     ")");
      sys.rules_.emplace(key, std::move(rhs));
    }
    return sys;
  }

  const std::vector<GeneratorInfo>& generators() const { return gens_; }
  std::size_t generatorCount() const { return gens_.size(); }
  const std::map<std::pair<int, int>, Element>& rules() const { return rules_; }

  const Element* rule(int b, int a) const {
    auto it = rules_.find({b, a});
    return it == rules_.end() ? nullptr : &it->second;
  }

  bool complete() const {
    std::size_t t = gens_.size();
    return rules_.size() == t * (t - 1) / 2;
  }

  std::int64_t stepBudget() const { return budget_; }
  void setStepBudget(std::int64_t b) { budget_ = b; }

  /// Rewrites x to its unique normal form (all words sorted ascending).
  /// Linear, idempotent; requires a complete system.
  Element normalize(const Element& x, Strategy strategy = Strategy::LeftmostFirst,
                    const Trace& trace = {}, std::int64_t* stepsOut = nullptr) const {
    if (!complete()) fail(Err::IncompleteSystem, "rewrite system is missing pair rules");
    std::int64_t steps = 0;
    std::map<Word, Element> memo;
    Element out;
    for (const auto& [w, c] : x.terms()) out += c * normalWord(w, strategy, trace, memo, steps);
    if (stepsOut) *stepsOut += steps;
    return out;
  }

  /// Overlap-ambiguity check: for every triple c > b > a the word g_c g_b g_a
  /// is rewritten first at positions (1,2) and separately at (2,3), then to
  /// normal form; returns the triples where the two results differ, sorted.
  std::vector<std::array<int, 3>> diamondCheck(bool parallel = true,
                                               std::int64_t* stepsOut = nullptr) const {
    if (!complete()) fail(Err::IncompleteSystem, "rewrite system is missing pair rules");
    std::vector<std::array<int, 3>> triples;
    const int t = (int)gens_.size();
    for (int c = 2; c < t; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) triples.push_back({c, b, a});

    std::vector<std::array<int, 3>> failed;
    std::atomic<std::int64_t> steps{0};
    auto checkRange = [&](std::size_t lo, std::size_t hi,
                          std::vector<std::array<int, 3>>& bad) {
      std::int64_t local = 0;
      for (std::size_t k = lo; k < hi; ++k) {
        auto [c, b, a] = triples[k];
        Element viaLeft;
        for (const auto& [w, coef] : rules_.at({c, b}).terms())
          viaLeft.add(concatWords(w, {a}), coef);
        Element viaRight;
        for (const auto& [w, coef] : rules_.at({b, a}).terms())
          viaRight.add(concatWords({c}, w), coef);
        Element n1 = normalize(viaLeft, Strategy::LeftmostFirst, {}, &local);
        Element n2 = normalize(viaRight, Strategy::LeftmostFirst, {}, &local);
        if (n1 != n2) bad.push_back(triples[k]);
      }
      steps += local;
    };

    unsigned hw = std::thread::hardware_concurrency();
    unsigned nThreads = parallel ? std::min(hw ? hw : 1u, 8u) : 1u;
    if (nThreads <= 1 || triples.size() < 64) {
      checkRange(0, triples.size(), failed);
    } else {
      std::vector<std::vector<std::array<int, 3>>> bad(nThreads);
      std::vector<std::thread> pool;
      std::exception_ptr eptr;
      std::mutex em;
      std::size_t chunk = (triples.size() + nThreads - 1) / nThreads;
      for (unsigned i = 0; i < nThreads; ++i) {
        std::size_t lo = i * chunk, hi = std::min(triples.size(), (i + 1) * chunk);
        pool.emplace_back([&, lo, hi, i] {
          try {
            checkRange(lo, hi, bad[i]);
          } catch (...) {
            std::lock_guard<std::mutex> g(em);
            if (!eptr) eptr = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      if (eptr) std::rethrow_exception(eptr);
      for (auto& v : bad) failed.insert(failed.end(), v.begin(), v.end());
      std::sort(failed.begin(), failed.end());
    }
    if (stepsOut) *stepsOut += steps.load();
    return failed;
  }

 private:
  Element normalWord(const Word& w, Strategy strategy, const Trace& trace,
                     std::map<Word, Element>& memo, std::int64_t& steps) const {
    if (trace == nullptr) {
      auto it = memo.find(w);
      if (it != memo.end()) return it->second;
    }
    int pos = -1;
    if (strategy == Strategy::LeftmostFirst) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
          pos = (int)i;
          break;
        }
    } else {
      for (std::size_t i = w.size(); i-- > 1;)
        if (w[i - 1] > w[i]) {
          pos = (int)(i - 1);
          break;
        }
    }
    Element result;
    if (pos < 0) {
      result = Element::ofWord(w);
    } else {
      if (++steps > budget_)
        fail(Err::StepBudgetExceeded,
             "normalization exceeded the step budget of " + std::to_string(budget_));
      const Element& rhs = rules_.at({w[pos], w[pos + 1]});
      if (trace) trace(w, pos, rhs);
      for (const auto& [rw, rc] : rhs.terms()) {
        Word nw(w.begin(), w.begin() + pos);
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + pos + 2, w.end());
        result += rc * normalWord(nw, strategy, trace, memo, steps);
      }
    }
    if (trace == nullptr) memo.emplace(w, result);
    return result;
  }

  std::vector<GeneratorInfo> gens_;
  std::map<std::pair<int, int>, Element> rules_;
  std::int64_t budget_ = 10'000'000;
};

}  // namespace qpbw
