#pragma once

// Shared pieces of the parallel and serial convexity kernels.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ostrowski/convexity.hpp"

namespace ostrowski::detail {

struct MembershipSetup {
    ConvexityKind kind;  // normalized
    std::vector<double> xs;
    std::vector<double> ts;
    double slack = 0.0;
};

/// Validates arguments, checks the evaluation hull, builds the grid.
MembershipSetup prepare_membership(const Interval& domain, const ConvexityKind& kind,
                                   const GridSpec& grid, const std::optional<Interval>& defined_on);

enum class TripleStatus { Holds, Violated, NonPositive };

struct TripleOutcome {
    TripleStatus status = TripleStatus::Holds;
    double lhs = 0.0;
    double rhs = 0.0;
    double bad_point = 0.0;  // where g was non-positive
};

TripleOutcome evaluate_triple(const std::function<double(double)>& g, const ConvexityKind& kind,
                              double x, double y, double t, double slack);

[[noreturn]] void throw_non_positive(double point, double value);

}  // namespace ostrowski::detail
