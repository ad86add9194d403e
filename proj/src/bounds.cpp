#include "ostrowski/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "ostrowski/errors.hpp"

namespace ostrowski {
namespace {

constexpr double kLogGuard = 1e-8;

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw DomainError(what);
    }
}

bool in_half_open_unit(double v) { return v > 0.0 && v <= 1.0; }
bool in_open_unit(double v) { return v > 0.0 && v < 1.0; }

// (e^L - 1)/L with its limit 1 at L -> 0.
double expm1_ratio(double log_value) {
    if (std::abs(log_value) < kLogGuard) {
        return 1.0;
    }
    return std::expm1(log_value) / log_value;
}

void check_common_strict(const BoundParams& bp, const std::string& who) {
    bp.frac.validate();
    require(in_open_unit(bp.M), who + ": M must lie in (0, 1)");
    require(in_open_unit(bp.m), who + ": m must lie in (0, 1)");
    require(in_half_open_unit(bp.alpha), who + ": alpha must lie in (0, 1]");
    require(std::isfinite(bp.q) && bp.q >= 1.0, who + ": q must be >= 1");
}

}  // namespace

double BoundParams::p() const {
    if (q == 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return q / (q - 1.0);
}

double geometry_factor(const FracParams& frac) {
    frac.validate();
    const double e = frac.mu + 1.0;
    return (std::pow(frac.x - frac.a, e) + std::pow(frac.b - frac.x, e)) / (frac.b - frac.a);
}

double k_alpha(double M, double m, double alpha, double mu) {
    require(in_half_open_unit(M), "k_alpha: M must lie in (0, 1]");
    require(in_half_open_unit(m), "k_alpha: m must lie in (0, 1]");
    require(in_half_open_unit(alpha), "k_alpha: alpha must lie in (0, 1]");
    require(std::isfinite(mu) && mu > 0.0, "k_alpha: mu must be > 0");
    if (M == 1.0) {
        return 1.0 / (mu + 1.0);
    }
    return std::pow(M, m) * mexp_integral(std::pow(M, alpha * (1.0 - m)), mu);
}

double bound_t22(const BoundParams& bp) {
    return geometry_factor(bp.frac) * k_alpha(bp.M, bp.m, bp.alpha, bp.frac.mu);
}

double bound_t22_alpha1(const BoundParams& bp) {
    require(in_half_open_unit(bp.M), "bound_t22_alpha1: M must lie in (0, 1]");
    require(in_half_open_unit(bp.m), "bound_t22_alpha1: m must lie in (0, 1]");
    const double mu = bp.frac.mu;
    const double geom = geometry_factor(bp.frac);
    if (bp.M == 1.0) {
        return geom * (1.0 / (mu + 1.0));
    }
    return geom * (std::pow(bp.M, bp.m) * mexp_integral(std::pow(bp.M, 1.0 - bp.m), mu));
}

double bound_t24(const BoundParams& bp) {
    check_common_strict(bp, "bound_t24");
    require(bp.q > 1.0, "bound_t24: q must be > 1");
    const double p = bp.p();
    const double mu = bp.frac.mu;
    const double log_c = bp.q * bp.alpha * (1.0 - bp.m) * std::log(bp.M);
    return std::pow(bp.M, bp.m) * std::pow(1.0 / (p * mu + 1.0), 1.0 / p) *
           std::pow(expm1_ratio(log_c), 1.0 / bp.q) * geometry_factor(bp.frac);
}

double bound_t24_alpha1(const BoundParams& bp) {
    bp.frac.validate();
    require(in_open_unit(bp.M), "bound_t24_alpha1: M must lie in (0, 1)");
    require(in_open_unit(bp.m), "bound_t24_alpha1: m must lie in (0, 1)");
    require(std::isfinite(bp.q) && bp.q > 1.0, "bound_t24_alpha1: q must be > 1");
    const double p = bp.p();
    const double mu = bp.frac.mu;
    const double log_c = bp.q * (1.0 - bp.m) * std::log(bp.M);
    return std::pow(bp.M, bp.m) * std::pow(1.0 / (p * mu + 1.0), 1.0 / p) *
           std::pow(expm1_ratio(log_c), 1.0 / bp.q) * geometry_factor(bp.frac);
}

double bound_t26(const BoundParams& bp) {
    check_common_strict(bp, "bound_t26");
    const double mu = bp.frac.mu;
    const double c = std::pow(bp.M, bp.q * bp.alpha * (1.0 - bp.m));
    return std::pow(bp.M, bp.m) * std::pow(1.0 / (mu + 1.0), 1.0 - 1.0 / bp.q) *
           std::pow(mexp_integral(c, mu), 1.0 / bp.q) * geometry_factor(bp.frac);
}

double bound_t26_alpha1(const BoundParams& bp) {
    bp.frac.validate();
    require(in_open_unit(bp.M), "bound_t26_alpha1: M must lie in (0, 1)");
    require(in_open_unit(bp.m), "bound_t26_alpha1: m must lie in (0, 1)");
    require(std::isfinite(bp.q) && bp.q >= 1.0, "bound_t26_alpha1: q must be >= 1");
    const double mu = bp.frac.mu;
    const double c = std::pow(bp.M, bp.q * (1.0 - bp.m));
    return std::pow(bp.M, bp.m) * std::pow(1.0 / (mu + 1.0), 1.0 - 1.0 / bp.q) *
           std::pow(mexp_integral(c, mu), 1.0 / bp.q) * geometry_factor(bp.frac);
}

double bound_set(double M, const FracParams& frac) {
    require(std::isfinite(M) && M > 0.0, "bound_set: M must be > 0");
    return M * geometry_factor(frac) / (frac.mu + 1.0);
}

double bound_mu1(const BoundParams& bp) {
    check_common_strict(bp, "bound_mu1");
    require(bp.frac.mu == 1.0, "bound_mu1: needs mu = 1");
    const double log_c = bp.q * bp.alpha * (1.0 - bp.m) * std::log(bp.M);
    if (log_c == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double factor = expm1_ratio(log_c) * (1.0 - 1.0 / log_c);
    if (factor < 0.0) {
        throw DomainError("bound_mu1: q-th root of a negative factor");
    }
    const FracParams& f = bp.frac;
    const double spread =
        ((f.x - f.a) * (f.x - f.a) + (f.b - f.x) * (f.b - f.x)) / (2.0 * (f.b - f.a));
    return std::pow(bp.M, bp.m) * std::pow(2.0, 1.0 / bp.q) * std::pow(factor, 1.0 / bp.q) *
           spread;
}

Mu1Comparison compare_mu1(const BoundParams& bp) {
    return {bound_mu1(bp), bound_t26(bp)};
}

Mu1Audit audit_mu1(const std::vector<BoundParams>& draws) {
    Mu1Audit result;
    result.draws = static_cast<int>(draws.size());
    result.min_difference = std::numeric_limits<double>::infinity();
    for (BoundParams bp : draws) {
        bp.frac.mu = 1.0;
        const Mu1Comparison cmp = compare_mu1(bp);
        const double diff = cmp.difference();
        result.max_abs_difference = std::max(result.max_abs_difference, std::abs(diff));
        result.max_rel_difference =
            std::max(result.max_rel_difference, std::abs(diff) / std::abs(cmp.recomputed));
        result.min_difference = std::min(result.min_difference, diff);
    }
    if (draws.empty()) {
        result.min_difference = 0.0;
    }
    result.agree = result.max_rel_difference <= 1e-12;
    char buf[256];
    if (result.agree) {
        std::snprintf(buf, sizeof buf,
                      "printed mu=1 closed form agrees with the recomputed bound over %d draws "
                      "(max relative difference %.3g)",
                      result.draws, result.max_rel_difference);
    } else {
        std::snprintf(buf, sizeof buf,
                      "printed mu=1 closed form DISAGREES with the recomputed bound over %d draws: "
                      "max |printed - recomputed| = %.6g, max relative %.6g, min signed %.6g",
                      result.draws, result.max_abs_difference, result.max_rel_difference,
                      result.min_difference);
    }
    result.statement = buf;
    return result;
}

double bound_mm(const BoundParams& bp) {
    check_common_strict(bp, "bound_mm");
    require(bp.u > 0.0 && bp.v > 0.0, "bound_mm: u and v must be > 0");
    require(std::abs(bp.u + bp.v - 1.0) <= 1e-15, "bound_mm: u + v must equal 1");
    const double mu = bp.frac.mu;
    const double e_log = bp.q * bp.alpha * (1.0 - bp.m) * std::log(bp.M);
    // v^2 (M^(e/v) - 1)/(e ln M) = v * ((e^(L/v) - 1)/(L/v)), L = e ln M
    const double young = bp.u * bp.u / (mu + bp.u) + bp.v * expm1_ratio(e_log / bp.v);
    return std::pow(bp.M, bp.m) * std::pow(1.0 / (mu + 1.0), 1.0 - 1.0 / bp.q) *
           std::pow(young, 1.0 / bp.q) * geometry_factor(bp.frac);
}

double bound_remark_q1(const BoundParams& bp) {
    BoundParams q1 = bp;
    q1.q = 1.0;
    check_common_strict(q1, "bound_remark_q1");
    require(bp.u > 0.0 && bp.v > 0.0, "bound_remark_q1: u and v must be > 0");
    require(std::abs(bp.u + bp.v - 1.0) <= 1e-15, "bound_remark_q1: u + v must equal 1");
    const double mu = bp.frac.mu;
    const double e_log = bp.alpha * (1.0 - bp.m) * std::log(bp.M);
    const double young = bp.u * bp.u / (mu + bp.u) + bp.v * expm1_ratio(e_log / bp.v);
    return std::pow(bp.M, bp.m) * young * geometry_factor(bp.frac);
}

double bound_classical(double M, double a, double b, double x) {
    require(std::isfinite(a) && std::isfinite(b) && a < b, "bound_classical: needs a < b");
    require(x >= a && x <= b, "bound_classical: x must lie in [a, b]");
    require(std::isfinite(M) && M >= 0.0, "bound_classical: M must be >= 0");
    const double shift = (x - (a + b) / 2.0) / (b - a);
    return M * (b - a) * (0.25 + shift * shift);
}

}  // namespace ostrowski
