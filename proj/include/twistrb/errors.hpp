#pragma once

#include <stdexcept>
#include <string>

namespace twistrb {

/// Tensor or matrix dimensions that do not fit together.
class ShapeMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by quotient_dim when the "coboundary" space is not inside the
/// "cocycle" space, i.e. some differential does not square to zero.
class ContainmentViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidCocycle : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotACocycle : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class AxiomFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The restricted derived bracket picked up an M-component or an A-slot
/// dependence. Mathematically impossible; signals a bug.
class RestrictionFailure : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class NotAMultiplication : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Malformed instance data. `where` names the offending field.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const noexcept { return where_; }

  private:
    std::string where_;
};

} // namespace twistrb
