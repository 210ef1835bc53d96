#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace secm {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed flags, expressions, parameters outside their domain.
/// The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to deliver its contract.
/// The CLI maps these to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class EvaluationFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InstabilityDetected : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ExtrapolationDivergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateMeasure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class TransformZero : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DenominatorZero : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PoleOutsideInterval : public InputError {
 public:
  using InputError::InputError;
};

class PointOnInterval : public InputError {
 public:
  using InputError::InputError;
};

class UnknownDensity : public InputError {
 public:
  using InputError::InputError;
};

class InvalidDensity : public InputError {
 public:
  using InputError::InputError;
};

class InvalidParameter : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : InputError(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownFunction : public InputError {
 public:
  UnknownFunction(std::size_t offset, std::string name)
      : InputError("unknown function '" + name + "' at offset " + std::to_string(offset)),
        offset_(offset),
        name_(std::move(name)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

}  // namespace secm
