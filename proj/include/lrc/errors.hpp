#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid or unsupported code/field parameters.
class ParamError : public Error {
  public:
    using Error::Error;
};

/// Operands belong to different fields.
class FieldMismatch : public Error {
  public:
    using Error::Error;
};

/// Multiplicative inverse of zero requested.
class ZeroInverse : public Error {
  public:
    using Error::Error;
};

/// Matrix dimensions incompatible with the requested operation.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Square system has no unique solution.
class SingularMatrix : public Error {
  public:
    using Error::Error;
};

/// Available symbols do not span the message space.
class RankDeficient : public Error {
  public:
    using Error::Error;
};

/// More erasures in one repair group than the local code tolerates.
class TooManyLocalErasures : public Error {
  public:
    using Error::Error;
};

/// Combinatorial enumeration budget exhausted.
class CapExceeded : public Error {
  public:
    using Error::Error;
};

/// Problem size exceeds the supported exhaustive-search range.
class TooLarge : public Error {
  public:
    using Error::Error;
};

/// Reconstructed data does not match the recorded checksum.
class ChecksumMismatch : public Error {
  public:
    using Error::Error;
};

/// Filesystem failure, annotated with the offending path.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace lrc
