#pragma once

#include <stdexcept>
#include <string>

namespace anick {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called with arguments outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (non-chain-map, cyclic matching, ...).
/// These indicate a bug and should never be observed.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Two independent computation routes disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (algebra documents, files).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened or read.
class IoError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace anick
