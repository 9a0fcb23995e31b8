#pragma once

#include <stdexcept>
#include <string>

namespace pbr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A vector is too close to zero to be normalized.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

/// A set of vectors is not a complete orthonormal basis.
class BasisError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument lies outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Distributions or response functions live on different ontic spaces.
class SpaceError : public Error {
 public:
  using Error::Error;
};

/// NaN or infinite value where a finite one is required.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

}  // namespace pbr
