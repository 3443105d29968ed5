#pragma once

#include <stdexcept>
#include <string>

namespace ttcf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (bad JSON, invalid (g, s), ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Gluing or germ incidence data that does not describe a valid object.
class StructuralError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A switch-sum vector whose three entries on some triangle have odd sum.
class ParityViolation : public InvalidInput {
 public:
  ParityViolation(std::size_t triangle, const std::string& what)
      : InvalidInput(what), triangle_(triangle) {}
  std::size_t triangle() const noexcept { return triangle_; }

 private:
  std::size_t triangle_;
};

/// Branch weights that fail a switch condition.
class InvalidWeightSystem : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The doubled Thurston sum came out odd; only a germ-order bug can do this.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

/// Region weight systems only exist for regions with an even spike count.
class OddSpikes : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Operands built over different tracks or root-of-unity parameters.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

/// An unrecoverable inconsistency inside a computation.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ttcf
