#ifndef EXPTRIO_ERRORS_HPP
#define EXPTRIO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exptrio {

// Invalid distribution parameters or operation preconditions.
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an evaluator
// (e.g. a Laplace transform evaluated where the integral diverges).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A numerical routine failed to reach its requested tolerance.
class NumericError : public std::runtime_error {
  public:
    NumericError(const std::string& what, double achieved_tolerance)
        : std::runtime_error(what), achieved_tolerance_(achieved_tolerance) {}

    double achieved_tolerance() const noexcept { return achieved_tolerance_; }

  private:
    double achieved_tolerance_;
};

// Structurally invalid input (wrong length, empty, ...).
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Input values violate data requirements (nonpositive, malformed, ...).
class DataError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Test statistic is undefined for the input (e.g. zero rank variance).
class DegenerateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace exptrio

#endif  // EXPTRIO_ERRORS_HPP
