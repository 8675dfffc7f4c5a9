#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lamzeta {

enum class ErrorKind {
  Usage,        // malformed request: unknown identity, bad or missing parameters
  Constraint,   // parameters violate an identity's side condition
  Domain,       // pole or precondition violation of a numeric operation
  Budget,       // truncation would need more terms than allowed
  Convergence,  // quadrature or expansion failed to settle
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

class ConstraintError : public Error {
 public:
  explicit ConstraintError(const std::string& what) : Error(ErrorKind::Constraint, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(ErrorKind::Convergence, what) {}
};

/// Raised when a series needs more terms than PrecisionContext::max_terms.
/// Carries the term count the requested accuracy would need and the number
/// of digits that the allowed budget can still certify.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required_terms, int achievable_digits)
      : Error(ErrorKind::Budget, what),
        required_terms_(required_terms),
        achievable_digits_(achievable_digits) {}

  std::uint64_t required_terms() const noexcept { return required_terms_; }
  int achievable_digits() const noexcept { return achievable_digits_; }

 private:
  std::uint64_t required_terms_;
  int achievable_digits_;
};

}  // namespace lamzeta
