#pragma once

#include <stdexcept>
#include <string>

namespace qgrad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite entries, or a non-symmetric matrix handed to a symmetric routine.
class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

/// Pivot below the singularity threshold during elimination.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class InvalidEpsilon : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class UnknownFunction : public Error {
 public:
  using Error::Error;
};

/// An optimizer step produced a non-finite iterate.
class Diverged : public Error {
 public:
  using Error::Error;
};

}  // namespace qgrad
