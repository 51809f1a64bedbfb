#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leafsub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured cap (leaf count, code budget, integer size) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Adaptive precision reached its ceiling without resolving the result.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// A checked mathematical statement did not hold; the message names the witness.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class UnsupportedFeature : public Error {
 public:
  using Error::Error;
};

class NewickSyntaxError : public Error {
 public:
  NewickSyntaxError(std::size_t offset, const std::string& what)
      : Error("newick: offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace leafsub
