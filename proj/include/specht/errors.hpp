#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specht {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing scalars or polynomials of different coefficient fields.
class FieldMismatchError : public Error {
 public:
  explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

/// Invalid argument: empty input, index out of range, zero polynomial
/// where a nonzero one is required, and similar contract violations.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Partition/tableau shape violations (letter-set size mismatch, non-bijective
/// filling, wrong shape for a shape-specific operation).
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Text input that does not conform to a grammar. `position` is the byte
/// offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operation asked for a partition family it does not cover.
class FamilyError : public Error {
 public:
  explicit FamilyError(const std::string& what) : Error(what) {}
};

/// A Groebner computation exceeded the configured degree bound.
class DegreeCapError : public Error {
 public:
  explicit DegreeCapError(const std::string& what) : Error(what) {}
};

}  // namespace specht
