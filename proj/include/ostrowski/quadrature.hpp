#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ostrowski/errors.hpp"

namespace ostrowski {

/// Tolerances and budget for the adaptive Gauss-Legendre integrator.
///
/// A panel is accepted when the two-half refinement agrees with the
/// single-panel estimate to within its share of max(abs_tol, rel_tol*|I|).
/// `max_subdivisions` bounds the dyadic depth of any panel.
struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 18;
    int base_nodes = 16;

    void validate() const;
};

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached n-point rule; safe to call concurrently, the reference stays valid.
const GaussLegendreRule& gauss_legendre_rule(int n);

namespace detail {

template <class F>
double gauss_panel(const F& f, const GaussLegendreRule& rule, double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

template <class F>
double refine(const F& f, const GaussLegendreRule& rule, double lo, double hi, double coarse,
              double tol_density, int depth, int max_depth) {
    const double mid = 0.5 * (lo + hi);
    const double left = gauss_panel(f, rule, lo, mid);
    const double right = gauss_panel(f, rule, mid, hi);
    const double fine = left + right;
    if (std::abs(fine - coarse) <= tol_density * (hi - lo)) {
        return fine;
    }
    if (depth >= max_depth) {
        throw ConvergenceError("adaptive quadrature: tolerance not reached on [" +
                               std::to_string(lo) + ", " + std::to_string(hi) + "] at depth " +
                               std::to_string(depth));
    }
    return refine(f, rule, lo, mid, left, tol_density, depth + 1, max_depth) +
           refine(f, rule, mid, hi, right, tol_density, depth + 1, max_depth);
}

}  // namespace detail

/// Integrates f over [lo, hi] with dyadic adaptive subdivision of fixed-order
/// Gauss-Legendre panels, driven by the disagreement between successive levels.
/// Returns 0 for an empty interval. Throws ConvergenceError on budget exhaustion.
template <class F>
double integrate_adaptive(const F& f, double lo, double hi, const QuadConfig& cfg) {
    cfg.validate();
    if (hi == lo) {
        return 0.0;
    }
    if (hi < lo) {
        return -integrate_adaptive(f, hi, lo, cfg);
    }
    const GaussLegendreRule& rule = gauss_legendre_rule(cfg.base_nodes);
    const double coarse = detail::gauss_panel(f, rule, lo, hi);
    // The coarse estimate only sets the relative scale; a cancelling integral falls back to abs_tol.
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(coarse));
    return detail::refine(f, rule, lo, hi, coarse, tol / (hi - lo), 0, cfg.max_subdivisions);
}

}  // namespace ostrowski
