#pragma once

#include <stdexcept>

namespace cracq {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible table shapes, or an element/entry index out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A table required to be invertible failed the pivot threshold.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument values: bad generator counts, malformed structures,
/// non-finite scalars, caps exceeded.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file: wrong schema, unparsable scalar, unknown name.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A verified builder exhausted its search space without meeting its
/// postconditions.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cracq
