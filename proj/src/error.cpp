#include "wgmds/error.hpp"

namespace wgmds {

  std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
      case ErrorCode::InvalidRank: return "InvalidRank";
      case ErrorCode::DimensionMismatch: return "DimensionMismatch";
      case ErrorCode::NotAPositiveRoot: return "NotAPositiveRoot";
      case ErrorCode::NonDominantWeight: return "NonDominantWeight";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::NotReduced: return "NotReduced";
      case ErrorCode::GroupTooLarge: return "GroupTooLarge";
      case ErrorCode::OrbitTooLarge: return "OrbitTooLarge";
      case ErrorCode::NotBraidless: return "NotBraidless";
      case ErrorCode::NotAPrefixSet: return "NotAPrefixSet";
      case ErrorCode::EncodeFailure: return "EncodeFailure";
      case ErrorCode::InfeasibleEntries: return "InfeasibleEntries";
      case ErrorCode::NonStrictlyDominant: return "NonStrictlyDominant";
      case ErrorCode::NotStable: return "NotStable";
      case ErrorCode::ContextInvalid: return "ContextInvalid";
      case ErrorCode::SumTooLarge: return "SumTooLarge";
      case ErrorCode::StabilityViolated: return "StabilityViolated";
      case ErrorCode::NonIntegralCoordinates: return "NonIntegralCoordinates";
      case ErrorCode::Overflow: return "Overflow";
      case ErrorCode::ParseError: return "ParseError";
      case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
  }

  bool is_internal(ErrorCode code) noexcept {
    return code == ErrorCode::EncodeFailure
           || code == ErrorCode::NonIntegralCoordinates
           || code == ErrorCode::InternalInvariant;
  }

}  // namespace wgmds
