#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmstab {

enum class ErrorKind {
  kInvalidDiagram,
  kLevelBelowRank,
  kNotExtensible,
  kLevelTooSmall,
  kBoxesNonzero,
  kNotComparable,
  kNegativeEntry,
  kLevelMismatch,
  kNonIntegralBudget,
  kDegenerateLevel,
  kUnboundedWindow,
};

std::string_view to_string(ErrorKind kind);

/// A mathematical precondition of an operation does not hold for its input.
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(ErrorKind kind, const std::string& what)
      : std::domain_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// An internal invariant failed; always a bug, never an input problem.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kmstab
