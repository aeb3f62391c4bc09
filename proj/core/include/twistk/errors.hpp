#ifndef TWISTK_ERRORS_HPP
#define TWISTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twistk {

enum class ErrorCode {
  MalformedTable,
  AxiomViolation,
  NotAGroup,
  NotAnAction,
  SizeCapExceeded,
  GroupoidMismatch,
  MissingPair,
  IdentityViolation,
  NormalizationViolation,
  NotRootOfUnity,
  ExtensionViolation,
  SampleInvalid,
  RankAmbiguous,
  EigenGapAmbiguous,
  BlockSizeInconsistent,
  NotInverseSemigroup,
  ActionViolation,
  CocycleViolation,
  IllDefinedGerm,
  ConditionViolation,
  NotDirected,
  NotWellDefinedOnQuotient,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twistk

#endif
