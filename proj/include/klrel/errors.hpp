#pragma once

#include <stdexcept>
#include <string>

namespace klrel {

// Base class for all domain errors raised by this library.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// --- numerics ---

// Argument of lngamma / recip_gamma is too close to a nonpositive integer
// for the result to be meaningful at working precision.
struct PoleProximity : DomainError {
    using DomainError::DomainError;
};

// --- series ---

// 4F3-type parameter vector fails the balance condition e+f+g-a-b-c-d = 1.
struct NotSaalschutzian : DomainError {
    using DomainError::DomainError;
};

// A lower (denominator) parameter sits within the pole guard of a
// nonpositive integer, so some term of the series is unbounded.
struct DenominatorPole : DomainError {
    using DomainError::DomainError;
};

// The summation budget is too small to estimate the tail.
struct NoConvergence : DomainError {
    using DomainError::DomainError;
};

// Very-well-poised series parameters violate Re(2+2A-B-C-D-E-F) > 0.
struct ConvergenceConditionViolated : DomainError {
    using DomainError::DomainError;
};

// --- group / labeling ---

// Group enumeration exceeded its element budget (the closure is not what
// it should be; indicates corrupted generators).
struct ClosureBudgetExceeded : DomainError {
    using DomainError::DomainError;
};

// A computed coset system does not match the expected label layout.
struct LabelingMismatch : DomainError {
    using DomainError::DomainError;
};

// --- functions / relations ---

// Point does not satisfy the hyperplane constraint e+f+g-a-b-c-d = 1.
struct NotOnHyperplane : DomainError {
    using DomainError::DomainError;
};

// A sine or Gamma factor in a function prefactor is singular at the point.
struct PrefactorPole : DomainError {
    using DomainError::DomainError;
};

// A supplied evaluation point violates the pole guards of the expression
// being evaluated.
struct SamplingRejected : DomainError {
    using DomainError::DomainError;
};

// Rejection sampling failed to find an admissible point within its budget.
struct RejectionBudgetExceeded : DomainError {
    using DomainError::DomainError;
};

} // namespace klrel
