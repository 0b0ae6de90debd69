#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace odom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Monomials built over different variable tables were mixed.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class InvalidIdeal : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A size guard (subset enumeration, net family, Taylor complex) was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class TaylorTooLarge : public GuardExceeded {
 public:
  TaylorTooLarge(std::size_t q, std::size_t limit)
      : GuardExceeded("Taylor complex too large: q = " + std::to_string(q) +
                      " exceeds the limit of " + std::to_string(limit)),
        q_(q) {}

  std::size_t q() const { return q_; }

 private:
  std::size_t q_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A property check or a complex invariant (d^2 = 0, multihomogeneity) failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace odom
