#include "freeknots/error.hpp"

namespace freeknots {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::OccurrenceCountNotTwo: return "OccurrenceCountNotTwo";
    case ErrorCode::EmptyInputIsZeroComponents: return "EmptyInputIsZeroComponents";
    case ErrorCode::UnknownCrossing: return "UnknownCrossing";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotMixed: return "NotMixed";
    case ErrorCode::FewerThanTwoComponents: return "FewerThanTwoComponents";
    case ErrorCode::NotTwoComponents: return "NotTwoComponents";
    case ErrorCode::OddComponentLength: return "OddComponentLength";
    case ErrorCode::OddMixedCount: return "OddMixedCount";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::InvalidSite: return "InvalidSite";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::FilterUndecided: return "FilterUndecided";
    case ErrorCode::PatternUndecided: return "PatternUndecided";
    case ErrorCode::PatternIllFormed: return "PatternIllFormed";
    case ErrorCode::SelfDualComponent: return "SelfDualComponent";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

static std::string compose(ErrorCode code, const std::string& detail, const std::string& message) {
  std::string out(to_string(code));
  if (!detail.empty()) out += "(" + detail + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

Error::Error(ErrorCode code, std::string detail, const std::string& message)
    : std::runtime_error(compose(code, detail, message)), code_(code), detail_(std::move(detail)) {}

}  // namespace freeknots
