#pragma once

#include <stdexcept>
#include <string>

namespace qpbw {

enum class Err {
  NotDivisible,
  DivisionByZero,
  InvalidArgument,
  RankMismatch,
  BadIndex,
  NotInRootLattice,
  AlphabetMismatch,
  NotOrientable,
  NonDecreasing,
  DuplicatePair,
  IncompleteSystem,
  StepBudgetExceeded,
  NotQuadratic,
  BadMap,
  UngradedGenerator,
  RankTooSmall,
  UnknownName,
  MissingActionValue,
  UnknownActor,
  UnknownClaim,
  SyntaxError,
  UnknownGenerator,
  FormatError,
};

inline const char* errName(Err e) {
  switch (e) {
    case Err::NotDivisible: return "NotDivisible";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::RankMismatch: return "RankMismatch";
    case Err::BadIndex: return "BadIndex";
    case Err::NotInRootLattice: return "NotInRootLattice";
    case Err::AlphabetMismatch: return "AlphabetMismatch";
    case Err::NotOrientable: return "NotOrientable";
    case Err::NonDecreasing: return "NonDecreasing";
    case Err::DuplicatePair: return "DuplicatePair";
    case Err::IncompleteSystem: return "IncompleteSystem";
    case Err::StepBudgetExceeded: return "StepBudgetExceeded";
    case Err::NotQuadratic: return "NotQuadratic";
    case Err::BadMap: return "BadMap";
    case Err::UngradedGenerator: return "UngradedGenerator";
    case Err::RankTooSmall: return "RankTooSmall";
    case Err::UnknownName: return "UnknownName";
    case Err::MissingActionValue: return "MissingActionValue";
    case Err::UnknownActor: return "UnknownActor";
    case Err::UnknownClaim: return "UnknownClaim";
    case Err::SyntaxError: return "SyntaxError";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::FormatError: return "FormatError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(errName(kind)) + ": " + msg), kind_(kind) {}

  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace qpbw
