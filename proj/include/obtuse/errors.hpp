#pragma once

#include <stdexcept>
#include <string>

namespace obtuse {

/// Raised when an argument falls outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised when an input is admissible but exceeds a computational guard.
class TooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace obtuse
