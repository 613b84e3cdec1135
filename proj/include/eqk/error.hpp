#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqk {

/// Machine-readable failure categories. The CLI reports these verbatim.
enum class ErrorCode {
  NotSurjective,
  IncompatibleAction,
  NotInvolution,
  NotMinimalRank,
  RootSystemViolation,
  NotSubgroup,
  UnsupportedType,
  LatticeMismatch,
  ZeroCharacter,
  NotSmooth,
  NotSubdivision,
  NotInChamber,
  ConeNotInFan,
  NotInvariant,
  DecompositionResidual,
  RelationViolation,
  NoPreimageInBox,
  Overflow,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eqk
