#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmod8 {

enum class ErrorKind {
  InvalidInput,
  SingularForm,
  AnisotropicInput,
  DegenerateRestriction,
  NoGaussMatch,
  DimTooLarge,
  FormMismatch,
  NotLinearDifference,
  NotDivisibleBy4,
  NotUnimodular,
  DegenerateForm,
  OddDiagonal,
  NotTwoPrimary,
  GroupTooLarge,
  NotMod4Multiplicative,
  ShapeMismatch,
  InvalidClass,
  NotMiddleConcentrated,
  ZeroVector,
  OddDimension,
  NotSymplectic,
  OneMinusFSingular,
  CommutatorRelationViolated,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Precondition or domain failure raised by every module operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sigmod8
