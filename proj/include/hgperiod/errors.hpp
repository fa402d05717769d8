#pragma once

#include <stdexcept>
#include <string>

namespace hgp {

// Argument lies outside the region where the requested representation converges.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Gamma-function or series-denominator pole.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Series or quadrature did not meet its tolerance within the allowed work.
struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters violate a hypothesis of the period/regulator formulas.
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact arithmetic exceeded the coefficient size guard.
struct BlowUpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical integration failed (step underflow, non-finite state).
struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hgp
