#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relstab {

enum class ErrorKind {
  DimensionMismatch,
  FieldMismatch,
  InvalidField,
  ClosureBoundExceeded,
  InvalidPermutation,
  ValidationFailure,
  RelationViolation,
  SingularMatrix,
  KindUnavailable,
  NotIntertwining,
  SquareNonzero,
  NotChainMap,
  WindowExceeded,
  DimensionBudgetExceeded,
  NotFinite,
  WellDefinednessFailure,
  ConditionalViolated,
  CompositeNonzero,
  FactorizationFailure,
  BudgetExceeded,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and is what the
/// CLI maps onto exit codes; the message carries the human-readable witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace relstab
