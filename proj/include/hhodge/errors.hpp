#pragma once

#include <stdexcept>
#include <string>

namespace hhodge {

/// Malformed arguments, degree mismatches, zero denominators.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem hypothesis (parity, non-negativity, ...) does not hold.
class ConditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The rank formula produced a non-integer value.
class ParityViolation : public ConditionViolation {
 public:
  using ConditionViolation::ConditionViolation;
};

/// None of the available formulas covers the requested integral.
class NotComputable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input exceeds a configured ceiling (degree of a table, size of an oracle).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hhodge
