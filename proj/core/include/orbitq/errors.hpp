// errors.hpp
//
// Exception taxonomy.  Each class maps to one process exit code in the CLI
// (see tools/), so library code should throw the most specific type that
// applies rather than a bare std::runtime_error.

#ifndef ORBITQ_ERRORS_HPP
#define ORBITQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitq {

// Bad user input: malformed weights, non-dominant highest weight, vectors of
// the wrong length, unknown options.  CLI exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The zero weight: the coadjoint orbit collapses to a point and no
// quantization data exists.  CLI exit code 2.
class DegenerateOrbitError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Weight is not a lattice point, so no line bundle exists at level 1.
// CLI exit code 2.
class IntegralityError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Not enough data points for a requested fit.  CLI exit code 2.
class InsufficientDataError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A computation was refused because it would exceed a configured size cap
// (representation dimension, sample count).  CLI exit code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A linear solve hit a singular or numerically hopeless matrix.  Carries the
// offending condition number when known.  CLI exit code 4.
class ConditioningError : public std::runtime_error {
 public:
  explicit ConditioningError(const std::string& what, double cond = 0.0)
      : std::runtime_error(what), m_condition(cond) {}
  double condition_number() const { return m_condition; }

 private:
  double m_condition;
};

}  // namespace orbitq

#endif
