#ifndef ORDMEAN_ERRORS_HPP
#define ORDMEAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordmean {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A spectral function was applied outside its domain (log of a
/// non-positive spectrum, fractional power of a negative eigenvalue).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// SpdMatrix construction saw a smallest eigenvalue below the positivity floor.
class NotPositiveDefinite : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The −μI subtraction of a shifted mean cancelled below the positivity floor.
class NonPositiveResult : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularTransform : public Error {
 public:
  using Error::Error;
};

/// An iterative method ran out of its iteration or sweep budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

class MixedSignParameters : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordmean

#endif  // ORDMEAN_ERRORS_HPP
