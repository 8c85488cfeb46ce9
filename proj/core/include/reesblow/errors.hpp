#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reesblow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"), reason_(message), position_(position) {}
  const std::string& reason() const noexcept { return reason_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string reason_;
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name) : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// A rational whose denominator vanishes in the prime field.
class ZeroCharacteristicDivision : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroGenerator : public Error {
 public:
  using Error::Error;
};

class NonPositiveWeights : public Error {
 public:
  using Error::Error;
};

class UnboundedPiece : public Error {
 public:
  using Error::Error;
};

class NegativeWeights : public Error {
 public:
  using Error::Error;
};

class NotDegreeOne : public Error {
 public:
  using Error::Error;
};

class NotNGraded : public Error {
 public:
  using Error::Error;
};

class NonHomogeneousGenerator : public Error {
 public:
  using Error::Error;
};

class IllFormedPayload : public Error {
 public:
  using Error::Error;
};

}  // namespace reesblow
