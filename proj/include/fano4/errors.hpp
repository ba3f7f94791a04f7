#pragma once

#include <stdexcept>
#include <string>

namespace fano4 {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (bad z_id, non-admissible
/// triple, degree out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be an integer (or positive) was not.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same invariant disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Divisor and curve classes from different families were combined.
class ContextMismatchError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace fano4
