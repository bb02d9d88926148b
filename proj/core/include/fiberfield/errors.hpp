#ifndef FIBERFIELD_ERRORS_HPP
#define FIBERFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fiberfield {

// Error taxonomy shared by the whole library. The CLI maps these to
// exit codes: ConfigError -> 2, ResourceError -> 3, InternalError -> 4.

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZeroError : Error {
  explicit DivisionByZeroError(const std::string& msg = "division by zero")
      : Error(msg) {}
};

// Evaluation of a rational function at a root of its denominator.
struct PoleError : Error {
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Configurable step budgets turn pathological inputs into clean failures.
struct ResourceError : Error {
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// A constructor or operation received data violating a documented invariant
// (tangency failure, Jacobi failure, non-inverse map pair, point off the
// variety, coincident punctures, ...).
struct InvariantError : Error {
  explicit InvariantError(const std::string& msg) : Error(msg) {}
};

// The quotient by the given ideal is the zero ring (1 lies in the ideal).
// Raised e.g. when a localization tries to invert an ideal member.
struct UnitIdealError : InvariantError {
  explicit UnitIdealError(const std::string& msg) : InvariantError(msg) {}
};

// A windowed cohomology complex needs a bracket the window does not define.
struct WindowClosureError : Error {
  std::string triple;
  explicit WindowClosureError(const std::string& msg, std::string offending = "")
      : Error(msg), triple(std::move(offending)) {}
};

// Internal consistency check failed; indicates a bug, never bad user input.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace fiberfield

#endif
