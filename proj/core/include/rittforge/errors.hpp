#pragma once

#include <stdexcept>
#include <string>

namespace rittforge {

/// A mathematically invalid request: a precondition on the input data failed
/// (degree too small, move not applicable, table not multiplicative, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration or a render would exceed its documented budget.
class BudgetError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed text input (JSON documents, coefficient strings, map expressions).
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace rittforge
