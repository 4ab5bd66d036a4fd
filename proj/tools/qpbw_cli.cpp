// Command-line driver: build catalog presentations, normalize expressions,
// run confluence checks, and verify the named claims.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <iostream>

#include "qpbw/qpbw.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool isUsageError(qpbw::Err kind) {
  using qpbw::Err;
  switch (kind) {
    case Err::SyntaxError:
    case Err::UnknownGenerator:
    case Err::FormatError:
    case Err::UnknownClaim:
    case Err::UnknownName:
    case Err::RankTooSmall:
    case Err::InvalidArgument:
    case Err::BadIndex:
      return true;
    default:
      return false;
  }
}

qpbw::Presentation buildByName(const std::string& name, int rank) {
  if (name == "quantum_matrices") return qpbw::quantumMatrices(rank);
  if (name == "smashA") return qpbw::smashPresentation(qpbw::Family::A, rank);
  return qpbw::buildNamed(name, rank);
}

void printEvidenceText(const qpbw::Evidence& ev) {
  std::cout << ev.claim << " rank " << ev.rank << ": " << (ev.pass ? "pass" : "FAIL") << "\n";
  for (auto it = ev.dimensions.begin(); it != ev.dimensions.end(); ++it)
    std::cout << "  " << it.key() << " = " << it.value().dump() << "\n";
  if (!ev.failedTriples.empty()) {
    std::cout << "  failed triples:\n";
    for (const auto& t : ev.failedTriples)
      std::cout << "    (" << t[0] << ", " << t[1] << ", " << t[2] << ")\n";
  }
  if (!ev.gapBasis.empty()) {
    std::cout << "  gap basis:\n";
    for (const auto& e : ev.gapBasis) std::cout << "    " << e << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for quadratic PBW presentations over Z[q,q^-1]"};
  app.require_subcommand(1);

  long long maxSteps = 10'000'000;
  int maxRank = 8;
  app.add_option("--max-steps", maxSteps, "rewrite step budget per normalization");
  app.add_option("--max-rank", maxRank, "largest admissible rank parameter");

  // build
  auto* cmdBuild = app.add_subcommand("build", "write a catalog presentation to a file");
  std::string buildName, buildOut;
  int buildRank = 3;
  cmdBuild->add_option("name", buildName, "presentation name")->required();
  cmdBuild->add_option("--rank", buildRank, "rank parameter")->required();
  cmdBuild->add_option("--out", buildOut, "output file")->required();

  // normalize
  auto* cmdNorm = app.add_subcommand("normalize", "rewrite an expression to normal form");
  std::string normAlgebra, normExpr;
  bool normTrace = false;
  cmdNorm->add_option("--algebra", normAlgebra, "presentation file")->required();
  cmdNorm->add_option("--expr", normExpr, "expression to normalize")->required();
  cmdNorm->add_flag("--trace", normTrace, "print each rewrite step");

  // confluence
  auto* cmdConf = app.add_subcommand("confluence", "run the overlap-ambiguity check");
  std::string confAlgebra;
  cmdConf->add_option("--algebra", confAlgebra, "presentation file")->required();

  // verify
  auto* cmdVerify = app.add_subcommand("verify", "verify one claim");
  std::string claimId;
  int verifyRank = 3;
  bool verifyJson = false, verifyNoMeta = false;
  cmdVerify->add_option("claim", claimId, "claim id")->required();
  cmdVerify->add_option("--rank", verifyRank, "rank parameter")->required();
  cmdVerify->add_flag("--json", verifyJson, "emit the evidence bundle as JSON");
  cmdVerify->add_flag("--no-meta", verifyNoMeta, "omit timing metadata from JSON");

  // report
  auto* cmdReport = app.add_subcommand("report", "run every claim at one rank");
  bool reportAll = false, reportJson = false, reportNoMeta = false;
  int reportRank = 3;
  cmdReport->add_flag("--all", reportAll, "run all claims");
  cmdReport->add_option("--rank", reportRank, "rank parameter")->required();
  cmdReport->add_flag("--json", reportJson, "emit evidence bundles as JSON");
  cmdReport->add_flag("--no-meta", reportNoMeta, "omit timing metadata from JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  qpbw::VerifyOptions opts;
  opts.maxSteps = maxSteps;

  auto checkRank = [&](int rank) {
    if (rank > maxRank)
      qpbw::fail(qpbw::Err::InvalidArgument,
                 "rank " + std::to_string(rank) + " exceeds --max-rank " + std::to_string(maxRank));
    if (rank < 2) qpbw::fail(qpbw::Err::RankTooSmall, "rank must be at least 2");
  };

  try {
    if (*cmdBuild) {
      checkRank(buildRank);
      qpbw::Presentation p = buildByName(buildName, buildRank);
      qpbw::writePresentationFile(p, buildOut);
      std::cerr << "wrote " << p.name << " rank " << p.rank << " (" << p.generators.size()
                << " generators, " << p.relations.size() << " relations)\n";
      return kExitPass;
    }

    if (*cmdNorm) {
      qpbw::Presentation p = qpbw::readPresentationFile(normAlgebra);
      qpbw::Element x = qpbw::parseExpression(normExpr, p.generators);
      qpbw::RewriteSystem sys = p.orient();
      sys.setStepBudget(maxSteps);
      auto names = qpbw::presentationNames(p);
      qpbw::RewriteSystem::Trace trace;
      if (normTrace) {
        trace = [&](const qpbw::Word& w, int pos, const qpbw::Element& rhs) {
          std::cout << "rewrite " << names[w[pos]] << "*" << names[w[pos + 1]] << " -> "
                    << qpbw::elementToString(rhs, names) << "  at position " << pos << " in ";
          for (std::size_t k = 0; k < w.size(); ++k)
            std::cout << (k ? "*" : "") << names[w[k]];
          std::cout << "\n";
        };
      }
      qpbw::Element nf = sys.normalize(x, qpbw::RewriteSystem::Strategy::LeftmostFirst, trace);
      std::cout << qpbw::elementToString(nf, names) << "\n";
      return kExitPass;
    }

    if (*cmdConf) {
      qpbw::Presentation p = qpbw::readPresentationFile(confAlgebra);
      qpbw::RewriteSystem sys = p.orient();
      sys.setStepBudget(maxSteps);
      auto failed = sys.diamondCheck();
      if (failed.empty()) {
        std::cout << "confluent: all overlap ambiguities resolve\n";
        return kExitPass;
      }
      std::cout << failed.size() << " unresolved overlap(s)\n";
      for (const auto& t : failed)
        std::cout << "  (" << p.generators[t[0]].name << ", " << p.generators[t[1]].name << ", "
                  << p.generators[t[2]].name << ")\n";
      return kExitFail;
    }

    if (*cmdVerify) {
      checkRank(verifyRank);
      qpbw::Evidence ev = qpbw::verifyClaim(claimId, verifyRank, opts);
      if (verifyJson)
        std::cout << ev.toJson(!verifyNoMeta).dump(2) << "\n";
      else
        printEvidenceText(ev);
      return ev.pass ? kExitPass : kExitFail;
    }

    if (*cmdReport) {
      if (!reportAll) qpbw::fail(qpbw::Err::InvalidArgument, "report requires --all");
      checkRank(reportRank);
      auto results = qpbw::runAllClaims(reportRank, opts);
      bool allPass = true;
      if (reportJson) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& ev : results) {
          arr.push_back(ev.toJson(!reportNoMeta));
          allPass = allPass && ev.pass;
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& ev : results) {
          std::cout << (ev.pass ? "pass  " : "FAIL  ") << ev.claim << " (rank " << ev.rank
                    << ")\n";
          allPass = allPass && ev.pass;
        }
      }
      return allPass ? kExitPass : kExitFail;
    }
  } catch (const qpbw::Error& e) {
    std::cerr << e.what() << "\n";
    return isUsageError(e.kind()) ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
