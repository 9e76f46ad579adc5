#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

/// Argument outside the set where an operation is defined (outside the disc,
/// on a puncture, stencil leaving a domain, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A structural precondition between objects was violated (map target not
/// inside a metric's domain, broken chain link, degenerate path).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// No constant in the search range produced a certified curvature bound.
struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two mesh points lie in different connected components.
struct UnreachableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The Kobayashi chain search found no feasible chain within its budget.
struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, double best) : std::runtime_error(what), best_value(best) {}
    double best_value;
};

}  // namespace hyp
