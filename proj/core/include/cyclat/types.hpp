#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclat {

/// Arbitrary-precision integer used for lattice coordinates and determinants.
using Integer = boost::multiprecision::cpp_int;

/// Vertex and edge identifiers are dense non-negative integers assigned at
/// construction time. Minors keep the identifiers of surviving elements.
using VertexId = int;
using EdgeId = int;

inline constexpr int kNoId = -1;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based; 0 means "whole document".
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The input violates a structural precondition (connectivity, 3-edge-connectivity).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A vector is not an element of the cycle lattice.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine would exceed its configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An invariant guaranteed by theory failed; always a bug or corrupted input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclat
