#pragma once

#include <stdexcept>
#include <string>

namespace parcon {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid (n, s) input.
struct DomainError : Error { using Error::Error; };
// Functional support not contained in the allowed root set.
struct SupportError : Error { using Error::Error; };
// Operation not defined in the current (n, s) regime.
struct RegimeError : Error { using Error::Error; };
// A structural invariant of a constructed object failed (transcription bug).
struct StructureError : Error { using Error::Error; };
// A set came out with the wrong cardinality.
struct CardinalityError : Error { using Error::Error; };
// Linear system unexpectedly singular.
struct SingularError : Error { using Error::Error; };
// Condition (C) violated: a pair {alpha, theta(alpha)} lies entirely in the radical.
struct ConditionCError : Error { using Error::Error; };
// Condition (C') violated: |S_alpha| out of range or missing O3 witness.
struct ConditionCPrimeError : Error { using Error::Error; };
// A root sequence step had no admissible successor.
struct SequenceError : Error { using Error::Error; };
// A coefficient expected in N came out negative or fractional.
struct NonIntegralError : Error { using Error::Error; };
// A character factor has zero weight.
struct ZeroWeightError : Error { using Error::Error; };
// Skew form on an odd-dimensional space.
struct OddDimensionError : Error { using Error::Error; };
// Two formulas for the same quantity disagree.
struct ArithmeticError : Error { using Error::Error; };

}  // namespace parcon
