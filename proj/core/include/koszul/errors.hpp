#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

/// Operands live in different polynomial rings.
class RingMismatch : public std::invalid_argument {
 public:
  explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// An argument violates an operation's precondition (index out of range,
/// wrong matrix shape, degree outside the admissible window, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed polynomial or instance text.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction produced an object that fails its own structural
/// certificate (d^2 != 0, a square that does not anticommute, an induced
/// map that is not well defined). Always indicates a bug or corrupted input.
class CertificateFailure : public std::runtime_error {
 public:
  explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

/// A Hilbert-function computation was requested for a module whose
/// relations are not homogeneous with respect to its twists.
class UngradedError : public std::runtime_error {
 public:
  explicit UngradedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace koszul
