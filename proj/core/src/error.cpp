#include "relstab/error.hpp"

namespace relstab {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ClosureBoundExceeded: return "ClosureBoundExceeded";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::KindUnavailable: return "KindUnavailable";
    case ErrorKind::NotIntertwining: return "NotIntertwining";
    case ErrorKind::SquareNonzero: return "SquareNonzero";
    case ErrorKind::NotChainMap: return "NotChainMap";
    case ErrorKind::WindowExceeded: return "WindowExceeded";
    case ErrorKind::DimensionBudgetExceeded: return "DimensionBudgetExceeded";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorKind::ConditionalViolated: return "ConditionalViolated";
    case ErrorKind::CompositeNonzero: return "CompositeNonzero";
    case ErrorKind::FactorizationFailure: return "FactorizationFailure";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace relstab
