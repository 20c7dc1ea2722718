#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wgmds {

  enum class ErrorCode {
    UnsupportedFamily,
    InvalidRank,
    DimensionMismatch,
    NotAPositiveRoot,
    NonDominantWeight,
    IndexOutOfRange,
    NotReduced,
    GroupTooLarge,
    OrbitTooLarge,
    NotBraidless,
    NotAPrefixSet,
    EncodeFailure,
    InfeasibleEntries,
    NonStrictlyDominant,
    NotStable,
    ContextInvalid,
    SumTooLarge,
    StabilityViolated,
    NonIntegralCoordinates,
    Overflow,
    ParseError,
    InternalInvariant,
  };

  std::string_view error_code_name(ErrorCode code) noexcept;

  // True for codes that can only be raised by a broken internal invariant.
  bool is_internal(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace wgmds
