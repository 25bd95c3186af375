#pragma once
#include <stdexcept>

namespace ordkernel {

// Base class for all kernel errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value-level precondition was violated (bad argument, ill-formed input).
struct DomainError : Error {
  using Error::Error;
};

// An API contract was broken (wrong arity, missing assignment, failed checks).
struct ContractError : Error {
  using Error::Error;
};

// An ordinal that does not decode to a well-formed program.
struct DecodeError : DomainError {
  using DomainError::DomainError;
};

// A configured size or enumeration limit was exceeded.
struct ResourceLimitError : Error {
  using Error::Error;
};

// Evaluation ran out of fuel.
struct BudgetError : Error {
  using Error::Error;
};

struct ParseError : DomainError {
  using DomainError::DomainError;
};

struct SortError : DomainError {
  using DomainError::DomainError;
};

// A formula mentions a symbol its signature or interpretation does not declare.
struct SignatureError : ContractError {
  using ContractError::ContractError;
};

}  // namespace ordkernel
