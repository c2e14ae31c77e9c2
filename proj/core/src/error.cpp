#include "sigmod8/error.hpp"

namespace sigmod8 {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::AnisotropicInput: return "AnisotropicInput";
    case ErrorKind::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorKind::NoGaussMatch: return "NoGaussMatch";
    case ErrorKind::DimTooLarge: return "DimTooLarge";
    case ErrorKind::FormMismatch: return "FormMismatch";
    case ErrorKind::NotLinearDifference: return "NotLinearDifference";
    case ErrorKind::NotDivisibleBy4: return "NotDivisibleBy4";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::OddDiagonal: return "OddDiagonal";
    case ErrorKind::NotTwoPrimary: return "NotTwoPrimary";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotMod4Multiplicative: return "NotMod4Multiplicative";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidClass: return "InvalidClass";
    case ErrorKind::NotMiddleConcentrated: return "NotMiddleConcentrated";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::OneMinusFSingular: return "OneMinusFSingular";
    case ErrorKind::CommutatorRelationViolated: return "CommutatorRelationViolated";
  }
  return "Unknown";
}

}  // namespace sigmod8
