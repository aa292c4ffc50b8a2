#pragma once

#include <stdexcept>
#include <string>

namespace gdet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied data that violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different coordinate spaces.
class SpaceMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A one-variable slice of a bivariate polynomial vanished identically.
class DegenerateSlice : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A sampled numerical certificate did not pass.
class CertificateError : public Error {
 public:
  using Error::Error;
};

/// Data that should be self-consistent (e.g. Schur data) produced a contradiction.
class InconsistentData : public CertificateError {
 public:
  using CertificateError::CertificateError;
};

}  // namespace gdet
