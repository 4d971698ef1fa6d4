#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trdeg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring, polynomial or ordering text. `position()` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands belong to different rings, or a value does not live in a ring.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// The (coefficient ring, algebra) pair or scalar ring is not in the catalog.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// An enumeration or candidate count passed its configured cap.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

/// A state that the mathematics says cannot be reached.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace trdeg
