#pragma once

#include <stdexcept>
#include <string>

namespace flagcalc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid (family, rank) pair or malformed configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Arguments that do not fit together (mismatched groups, bad parabolic, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed input value such as a negative degree.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A localization identity failed to produce a polynomial / exact quotient.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// Richardson or projected Richardson data with u not below w.
class EmptyVarietyError : public Error {
 public:
  using Error::Error;
};

}  // namespace flagcalc
