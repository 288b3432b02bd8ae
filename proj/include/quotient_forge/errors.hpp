#pragma once

#include <stdexcept>
#include <string>

namespace qforge {

/// Caller supplied an (r, a) pair that does not describe a faithful
/// action without quasireflections.
class GcdViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class RangeViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations of the same object disagreed. Always a bug
/// (or a falsified theorem), never a user error.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A quiver failed one of the structural invariants it is known to satisfy.
class StructuralError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An intersection number between two non-compact boundary divisors was
/// requested.
class NonCompactPairing : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace qforge
