#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotgroup {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Two scalars from different quadratic fields were combined.
class AmbientMismatch : public Error {
 public:
  AmbientMismatch(long long lhs, long long rhs)
      : Error("ambient mismatch: d = " + std::to_string(lhs) + " vs d = " + std::to_string(rhs)) {}
};

class InvalidAmbient : public Error {
 public:
  explicit InvalidAmbient(long long d)
      : Error("ambient d = " + std::to_string(d) + " is not 0 or a squarefree integer >= 2") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ZeroQuaternion : public Error {
 public:
  ZeroQuaternion() : Error("zero quaternion") {}
};

class InvalidRotation : public Error {
 public:
  using Error::Error;
};

class IdentityHasNoAxis : public Error {
 public:
  IdentityHasNoAxis() : Error("the identity rotation has no axis") {}
};

/// Closure generation produced more elements than the caller allowed.
class ClosureExceedsCap : public Error {
 public:
  explicit ClosureExceedsCap(std::size_t count_so_far)
      : Error("closure exceeds cap after " + std::to_string(count_so_far) + " elements"),
        count_so_far_(count_so_far) {}

  std::size_t count_so_far() const noexcept { return count_so_far_; }

 private:
  std::size_t count_so_far_;
};

class GroupTooLarge : public Error {
 public:
  GroupTooLarge(std::size_t order, std::size_t limit)
      : Error("group of order " + std::to_string(order) + " exceeds limit " + std::to_string(limit)) {}
};

class NotASubgroup : public Error {
 public:
  NotASubgroup() : Error("index set is not a subgroup") {}
};

class DepthTooLarge : public Error {
 public:
  DepthTooLarge(std::size_t depth, std::size_t limit)
      : Error("word length " + std::to_string(depth) + " exceeds limit " + std::to_string(limit)) {}
};

/// A finite rotation group that matches none of the known families. Signals a bug.
class UnrecognizedGroup : public Error {
 public:
  using Error::Error;
};

}  // namespace rotgroup
