#pragma once

#include <stdexcept>
#include <string>

namespace ostrowski {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive quadrature did not reach its tolerance within the subdivision budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem was asked to check a function whose validated hypotheses do not cover it.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace ostrowski
