#ifndef QATLAS_ERRORS_HPP
#define QATLAS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qatlas {

/// Bad user input: malformed text, invalid recipe, unknown variable.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DivisionByZero : public InputError {
 public:
  using InputError::InputError;
};

class RingMismatch : public std::logic_error {
 public:
  RingMismatch() : std::logic_error("operands live in different rings") {}
  explicit RingMismatch(const std::string& what) : std::logic_error(what) {}
};

/// A precondition of a mathematical operation does not hold for the given ideal.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hilbert-function stabilization was not reached inside the degree budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random choices never reached a generic position; rerun over a larger field.
class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qatlas

#endif
