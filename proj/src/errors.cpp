#include "lucp/errors.hpp"

namespace lucp {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Shape: return "Shape";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NoLocalUnit: return "NoLocalUnit";
    case ErrorKind::NoCommonUnit: return "NoCommonUnit";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::UnitSetMismatch: return "UnitSetMismatch";
    case ErrorKind::NotBilinear: return "NotBilinear";
    case ErrorKind::NotIso: return "NotIso";
    case ErrorKind::EnumerationCap: return "EnumerationCap";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotSummandOfFreeR: return "NotSummandOfFreeR";
    case ErrorKind::InvalidSplitData: return "InvalidSplitData";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::ProductNotR: return "ProductNotR";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::AssocFail: return "AssocFail";
    case ErrorKind::UnitFail: return "UnitFail";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotRRingAut: return "NotRRingAut";
    case ErrorKind::NotInSubgroup: return "NotInSubgroup";
    case ErrorKind::NotZInvariant: return "NotZInvariant";
    case ErrorKind::NotGInvariant: return "NotGInvariant";
    case ErrorKind::NoRepresentative: return "NoRepresentative";
    case ErrorKind::SimilarityWitnessMissing: return "SimilarityWitnessMissing";
    case ErrorKind::LedgerIncomplete: return "LedgerIncomplete";
    case ErrorKind::ValueNotInPic0: return "ValueNotInPic0";
    case ErrorKind::FreeRank: return "FreeRank";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lucp
