#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freeknots {

enum class ErrorCode {
  MalformedToken,
  OccurrenceCountNotTwo,
  EmptyInputIsZeroComponents,
  UnknownCrossing,
  NotPure,
  NotMixed,
  FewerThanTwoComponents,
  NotTwoComponents,
  OddComponentLength,
  OddMixedCount,
  NotAKnot,
  InvalidSite,
  InvalidCycle,
  FilterUndecided,
  PatternUndecided,
  PatternIllFormed,
  SelfDualComponent,
  DuplicateName,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Domain error with a machine-readable code. `detail` carries the offending
// token or crossing label when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, const std::string& message = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace freeknots
