#pragma once

#include <stdexcept>
#include <string>

namespace uqosp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Evaluation at q = 1 hit a pole; `coordinate()` names the offending
/// surd-basis coordinate ("1", "s_a", "s_b" or "s_a*s_b").
class PoleAtOne : public Error {
 public:
  PoleAtOne(std::string coordinate)
      : Error("pole at q=1 in coordinate " + coordinate), coordinate_(std::move(coordinate)) {}
  const std::string& coordinate() const { return coordinate_; }

 private:
  std::string coordinate_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input is not weight- or parity-homogeneous, or not a root.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A word longer than the rewriting bound was handed to the normal-form
/// engine. `required()` is the smallest bound that would accept the input.
class BoundExceeded : public Error {
 public:
  BoundExceeded(int bound, int required)
      : Error("bound exceeded: input needs word length " + std::to_string(required) +
              " but the rewriting system was completed to " + std::to_string(bound)),
        bound_(bound),
        required_(required) {}
  int bound() const { return bound_; }
  int required() const { return required_; }

 private:
  int bound_;
  int required_;
};

class CompletionError : public Error {
 public:
  using Error::Error;
};

}  // namespace uqosp
