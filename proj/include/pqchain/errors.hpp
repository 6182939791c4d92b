#pragma once

#include <stdexcept>
#include <string>

namespace pqchain {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The (family, variant) pair is not one of the seven supported schemes.
class UnsupportedScheme : public Error {
 public:
  using Error::Error;
};

/// The scheme is known but its implementation was not compiled into this build.
class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

/// The external implementation reported a failure.
class BackendFailure : public Error {
 public:
  using Error::Error;
};

class KeyLengthMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedEncoding : public Error {
 public:
  using Error::Error;
};

/// A deliberately corrupted block was accepted by validation.
class TamperNotDetected : public Error {
 public:
  using Error::Error;
};

}  // namespace pqchain
