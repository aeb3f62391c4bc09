#include "twistk/errors.hpp"

namespace twistk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::GroupoidMismatch: return "GroupoidMismatch";
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::NormalizationViolation: return "NormalizationViolation";
    case ErrorCode::NotRootOfUnity: return "NotRootOfUnity";
    case ErrorCode::ExtensionViolation: return "ExtensionViolation";
    case ErrorCode::SampleInvalid: return "SampleInvalid";
    case ErrorCode::RankAmbiguous: return "RankAmbiguous";
    case ErrorCode::EigenGapAmbiguous: return "EigenGapAmbiguous";
    case ErrorCode::BlockSizeInconsistent: return "BlockSizeInconsistent";
    case ErrorCode::NotInverseSemigroup: return "NotInverseSemigroup";
    case ErrorCode::ActionViolation: return "ActionViolation";
    case ErrorCode::CocycleViolation: return "CocycleViolation";
    case ErrorCode::IllDefinedGerm: return "IllDefinedGerm";
    case ErrorCode::ConditionViolation: return "ConditionViolation";
    case ErrorCode::NotDirected: return "NotDirected";
    case ErrorCode::NotWellDefinedOnQuotient: return "NotWellDefinedOnQuotient";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace twistk
