#pragma once

#include <string>
#include <vector>

#include "ostrowski/fracint.hpp"

namespace ostrowski {

/// Parameters shared by the right-hand sides. p is always derived from q.
/// u and v (u + v = 1) are used only by the Young-split bounds.
struct BoundParams {
    FracParams frac;
    double alpha = 1.0;
    double m = 1.0;
    double M = 1.0;
    double q = 1.0;
    double u = 0.5;
    double v = 0.5;

    /// Hoelder conjugate q/(q-1); +inf at q = 1.
    double p() const;
};

/// ((x-a)^(mu+1) + (b-x)^(mu+1)) / (b-a)
double geometry_factor(const FracParams& frac);

/// 1/(mu+1) when M = 1, otherwise M^m * int_0^1 t^mu M^(t alpha (1-m)) dt.
double k_alpha(double M, double m, double alpha, double mu);

/// geometry_factor * k(alpha). Needs M, m, alpha in (0, 1].
double bound_t22(const BoundParams& bp);
/// The alpha = 1 corollary, written with k(1) = M^m int t^mu M^((1-m)t) dt.
double bound_t22_alpha1(const BoundParams& bp);

/// Hoelder form: M^m (1/(p mu+1))^(1/p) ((M^e - 1)/(e ln M))^(1/q) * geometry_factor,
/// e = q alpha (1-m). Needs q > 1, M in (0, 1), m in (0, 1), alpha in (0, 1].
/// The (M^e - 1)/(e ln M) factor is replaced by its limit 1 when |e ln M| < 1e-8.
double bound_t24(const BoundParams& bp);
double bound_t24_alpha1(const BoundParams& bp);

/// Power-mean form: M^m (1/(mu+1))^(1-1/q) (int t^mu M^(q t alpha (1-m)))^(1/q) * geometry_factor.
/// Needs q >= 1, M in (0, 1), m in (0, 1), alpha in (0, 1].
double bound_t26(const BoundParams& bp);
double bound_t26_alpha1(const BoundParams& bp);

/// M * geometry_factor / (mu + 1): the geometrically convex case (alpha = 1, m -> 1).
double bound_set(double M, const FracParams& frac);

/// The printed mu = 1 closed form
///   M^m 2^(1/q) ((c-1)/ln c * (1 - 1/ln c))^(1/q) ((x-a)^2 + (b-x)^2) / (2(b-a)),
/// c = M^(q alpha (1-m)). Needs frac.mu == 1. Diverges as c -> 1; returns +inf at c == 1.
double bound_mu1(const BoundParams& bp);

/// The printed mu = 1 form next to bound_t26 evaluated at mu = 1.
struct Mu1Comparison {
    double printed = 0.0;
    double recomputed = 0.0;

    double difference() const { return printed - recomputed; }
};

Mu1Comparison compare_mu1(const BoundParams& bp);

struct Mu1Audit {
    int draws = 0;
    double max_abs_difference = 0.0;
    double max_rel_difference = 0.0;
    double min_difference = 0.0;  ///< signed, printed - recomputed
    bool agree = false;           ///< max relative difference <= 1e-12
    std::string statement;
};

/// Compares the printed form with the recomputed bound over the given draws (mu forced to 1).
Mu1Audit audit_mu1(const std::vector<BoundParams>& draws);

/// Young-split form: M^m (1/(mu+1))^(1-1/q)
///   (u^2/(mu+u) + v^2 (M^(e/v) - 1)/(e ln M))^(1/q) * geometry_factor, e = q alpha (1-m).
/// Needs u, v > 0 with u + v = 1, q >= 1, M in (0, 1), m in (0, 1).
double bound_mm(const BoundParams& bp);

/// bound_mm with q = 1, written out.
double bound_remark_q1(const BoundParams& bp);

/// M (b-a) (1/4 + ((x - (a+b)/2)/(b-a))^2)
double bound_classical(double M, double a, double b, double x);

}  // namespace ostrowski
