#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hallcl {

/// Base class of every error this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation of a rational function at a zero of its denominator.
class PoleError : public Error {
public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

/// An operation received elements in the wrong basis.
class BasisMismatchError : public Error {
public:
  explicit BasisMismatchError(const std::string& what) : Error(what) {}
};

/// A brute-force oracle was asked to exceed its hard enumeration bounds.
class ResourceBoundError : public Error {
public:
  explicit ResourceBoundError(const std::string& what) : Error(what) {}
};

/// Text input rejected by the expression grammar. Carries the byte offset
/// of the failure and a description of what would have been accepted.
class ParseError : public Error {
public:
  ParseError(std::size_t pos, const std::string& expected)
      : Error("parse error at position " + std::to_string(pos) + ": expected " + expected),
        pos_(pos),
        expected_(expected) {}

  std::size_t position() const { return pos_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t pos_;
  std::string expected_;
};

} // namespace hallcl
