#pragma once

#include <stdexcept>
#include <string>

namespace lucp {

// Every checked failure carries a machine-readable kind plus a human witness
// string. Validation routines throw; search routines that can legitimately
// fail to decide return a tri-state instead (see Verdict below).
enum class ErrorKind {
  Shape,
  Parse,
  Validation,
  NonAssociative,
  NotIdempotent,
  NoLocalUnit,
  NoCommonUnit,
  NotMultiplicative,
  UnitSetMismatch,
  NotBilinear,
  NotIso,
  EnumerationCap,
  SizeCap,
  CapExceeded,
  NotSummandOfFreeR,
  InvalidSplitData,
  NotInvertible,
  NotAutomorphism,
  ProductNotR,
  NotACocycle,
  NotNormalized,
  NotAnAction,
  AssocFail,
  UnitFail,
  NoSolution,
  NotRRingAut,
  NotInSubgroup,
  NotZInvariant,
  NotGInvariant,
  NoRepresentative,
  SimilarityWitnessMissing,
  LedgerIncomplete,
  ValueNotInPic0,
  FreeRank,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Outcome of a bounded search: Fail means a counterexample or exhaustive
// non-existence proof; Undecided means the cap was hit first.
enum class Verdict { Pass, Fail, Undecided };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "undecided";
  }
}

}  // namespace lucp
