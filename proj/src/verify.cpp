#include "ostrowski/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ostrowski/errors.hpp"
#include "ostrowski/gamma.hpp"

namespace ostrowski {

namespace {

struct TheoremName {
    TheoremId id;
    const char* name;
};

constexpr TheoremName kNames[] = {
    {TheoremId::Classical, "classical"}, {TheoremId::T22, "t22"},
    {TheoremId::T22Alpha1, "t22_alpha1"}, {TheoremId::T24, "t24"},
    {TheoremId::T24Alpha1, "t24_alpha1"}, {TheoremId::T26, "t26"},
    {TheoremId::T26Alpha1, "t26_alpha1"}, {TheoremId::Set, "set"},
    {TheoremId::Mu1, "mu1"},             {TheoremId::MM, "mm"},
    {TheoremId::RemarkQ1, "remark_q1"},
};

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

std::string to_string(TheoremId id) {
    for (const auto& entry : kNames) {
        if (entry.id == id) {
            return entry.name;
        }
    }
    return "?";
}

TheoremId parse_theorem_id(const std::string& name) {
    for (const auto& entry : kNames) {
        if (name == entry.name) {
            return entry.id;
        }
    }
    throw DomainError("unknown theorem id '" + name + "'");
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> out;
        for (const auto& entry : kNames) {
            out.push_back(entry.id);
        }
        return out;
    }();
    return ids;
}

TheoremTraits traits(TheoremId id) {
    TheoremTraits t;
    switch (id) {
        case TheoremId::Classical:
            t.fixed_mu_one = true;
            break;
        case TheoremId::T22:
            t.uses_alpha = t.uses_m = true;
            break;
        case TheoremId::T22Alpha1:
            t.uses_m = true;
            t.fixed_alpha_one = true;
            break;
        case TheoremId::T24:
        case TheoremId::T26:
            t.uses_alpha = t.uses_m = t.uses_q = true;
            break;
        case TheoremId::T24Alpha1:
        case TheoremId::T26Alpha1:
            t.uses_m = t.uses_q = true;
            t.fixed_alpha_one = true;
            break;
        case TheoremId::Set:
            t.uses_q = true;
            break;
        case TheoremId::Mu1:
            t.uses_alpha = t.uses_m = t.uses_q = true;
            t.fixed_mu_one = true;
            break;
        case TheoremId::MM:
            t.uses_alpha = t.uses_m = t.uses_q = t.uses_split = true;
            break;
        case TheoremId::RemarkQ1:
            t.uses_alpha = t.uses_m = t.uses_split = true;
            t.fixed_q_one = true;
            break;
    }
    return t;
}

double ostrowski_signed(const FunctionSpec& f, const FracParams& frac, const QuadConfig& cfg) {
    frac.validate();
    if (!f.domain.contains(frac.a) || !f.domain.contains(frac.b)) {
        throw DomainError("ostrowski_lhs: [a, b] leaves the domain of '" + f.id + "'");
    }
    const double a = frac.a;
    const double b = frac.b;
    const double x = frac.x;
    const double mu = frac.mu;
    const double left = x > a ? rl_upper(f.f, a, x, mu, cfg) : 0.0;   // J_{x-}^mu f(a)
    const double right = b > x ? rl_lower(f.f, x, b, mu, cfg) : 0.0;  // J_{x+}^mu f(b)
    const double weight = (std::pow(x - a, mu) + std::pow(b - x, mu)) / (b - a);
    return weight * f.f(x) - gamma(mu + 1.0) / (b - a) * (left + right);
}

double ostrowski_lhs(const FunctionSpec& f, const FracParams& frac, const QuadConfig& cfg) {
    return std::abs(ostrowski_signed(f, frac, cfg));
}

double lemma_rhs(const FunctionSpec& f, const FracParams& frac, const QuadConfig& cfg) {
    frac.validate();
    const double a = frac.a;
    const double b = frac.b;
    const double x = frac.x;
    const double mu = frac.mu;
    double value = 0.0;
    if (x > a) {
        const double inner = integrate_power_weighted(
            [&](double t) { return f.fprime(t * x + (1.0 - t) * a); }, mu, cfg);
        value += std::pow(x - a, mu + 1.0) / (b - a) * inner;
    }
    if (b > x) {
        const double inner = integrate_power_weighted(
            [&](double t) { return f.fprime(t * x + (1.0 - t) * b); }, mu, cfg);
        value -= std::pow(b - x, mu + 1.0) / (b - a) * inner;
    }
    return value;
}

double lemma_identity_residual(const FunctionSpec& f, const FracParams& frac,
                               const QuadConfig& cfg) {
    return std::abs(ostrowski_signed(f, frac, cfg) - lemma_rhs(f, frac, cfg));
}

double classical_lhs(const FunctionSpec& f, double a, double b, double x, const QuadConfig& cfg) {
    if (!(a < b) || x < a || x > b) {
        throw DomainError("classical_lhs: needs a < b and x in [a, b]");
    }
    if (!f.domain.contains(a) || !f.domain.contains(b)) {
        throw DomainError("classical_lhs: [a, b] leaves the domain of '" + f.id + "'");
    }
    const double mean = integrate_adaptive(f.f, a, b, cfg) / (b - a);
    return std::abs(f.f(x) - mean);
}

std::vector<std::string> hypothesis_failures(TheoremId id, const FunctionSpec& f,
                                             const BoundParams& bp) {
    std::vector<std::string> failures;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) {
            failures.push_back(what);
        }
    };
    const FracParams& frac = bp.frac;
    try {
        frac.validate();
    } catch (const DomainError& e) {
        failures.push_back(e.what());
        return failures;
    }
    need(f.domain.contains(frac.a) && f.domain.contains(frac.b),
         "[a, b] must lie inside the domain of '" + f.id + "'");
    need(bp.M == f.M, "M = " + fmt(bp.M) + " does not match the declared M = " + fmt(f.M));
    if (id == TheoremId::Classical) {
        return failures;
    }

    const TheoremTraits tr = traits(id);
    need(frac.b >= 1.0, "b >= 1");
    if (id == TheoremId::Set) {
        // stated on [a, b]
    } else {
        const double from = std::min(1.0, frac.a);
        need(f.domain.contains(from), "[min(1, a), b] must lie inside the domain of '" + f.id + "'");
    }
    need(f.decreasing_abs_deriv, "|f'| must be decreasing");
    bool positive = true;
    for (int i = 0; i <= 200; ++i) {
        const double t = frac.a + (frac.b - frac.a) * i / 200.0;
        positive = positive && f.f(t) > 0.0;
    }
    need(positive, "f must be positive on [a, b]");

    if (id == TheoremId::T22 || id == TheoremId::T22Alpha1) {
        need(bp.M > 0.0 && bp.M <= 1.0, "M in (0, 1]");
        need(bp.m > 0.0 && bp.m <= 1.0, "m in (0, 1]");
    } else {
        need(bp.M > 0.0 && bp.M < 1.0, "M in (0, 1)");
        if (id != TheoremId::Set) {
            need(bp.m > 0.0 && bp.m < 1.0, "m in (0, 1)");
        }
    }
    if (tr.fixed_alpha_one) {
        need(bp.alpha == 1.0, "alpha = 1");
    } else if (id == TheoremId::T24) {
        need(bp.alpha > 0.0 && bp.alpha < 1.0, "alpha in (0, 1)");
    } else if (tr.uses_alpha) {
        need(bp.alpha > 0.0 && bp.alpha <= 1.0, "alpha in (0, 1]");
    }
    if (id == TheoremId::T24 || id == TheoremId::T24Alpha1) {
        need(bp.q > 1.0, "p, q > 1");
    } else if (tr.fixed_q_one) {
        need(bp.q == 1.0, "q = 1");
    } else if (tr.uses_q) {
        need(bp.q >= 1.0, "q >= 1");
    }
    if (tr.fixed_mu_one) {
        need(frac.mu == 1.0, "mu = 1");
    }
    if (tr.uses_split) {
        need(bp.u > 0.0 && bp.v > 0.0 && std::abs(bp.u + bp.v - 1.0) <= 1e-15,
             "u, v > 0 with u + v = 1");
    }

    // validated class membership of |f'|^q
    const double q = tr.uses_q ? bp.q : 1.0;
    ConvexityKind kind;
    if (id == TheoremId::Set) {
        kind = ConvexityKind::geom_convex();
    } else if (tr.fixed_alpha_one) {
        kind = ConvexityKind::m_geom_convex(bp.m);
    } else {
        kind = ConvexityKind::alpha_m_geom_convex(bp.alpha, bp.m);
    }
    need(f.claims_cover(kind, q),
         "no validated claim that |f'|^" + fmt(q) + " is " + kind.to_string());
    return failures;
}

double theorem_rhs(TheoremId id, const BoundParams& bp) {
    switch (id) {
        case TheoremId::Classical:
            return bound_classical(bp.M, bp.frac.a, bp.frac.b, bp.frac.x);
        case TheoremId::T22:
            return bound_t22(bp);
        case TheoremId::T22Alpha1:
            return bound_t22_alpha1(bp);
        case TheoremId::T24:
            return bound_t24(bp);
        case TheoremId::T24Alpha1:
            return bound_t24_alpha1(bp);
        case TheoremId::T26:
            return bound_t26(bp);
        case TheoremId::T26Alpha1:
            return bound_t26_alpha1(bp);
        case TheoremId::Set:
            return bound_set(bp.M, bp.frac);
        case TheoremId::Mu1:
            return bound_mu1(bp);
        case TheoremId::MM:
            return bound_mm(bp);
        case TheoremId::RemarkQ1:
            return bound_remark_q1(bp);
    }
    throw DomainError("theorem_rhs: unknown theorem");
}

Verdict make_verdict(TheoremId id, const FunctionSpec& f, const BoundParams& bp, double lhs,
                     const QuadConfig& cfg) {
    Verdict v;
    v.theorem_id = to_string(id);
    v.function_id = f.id;
    v.params = bp;
    v.lhs = lhs;
    v.rhs = theorem_rhs(id, bp);
    v.margin = v.rhs - v.lhs;
    v.tol_margin = 100.0 * cfg.abs_tol;
    v.holds = v.margin >= -v.tol_margin;
    return v;
}

Verdict verify_theorem(TheoremId id, const FunctionSpec& f, const BoundParams& bp,
                       const QuadConfig& cfg) {
    const auto failures = hypothesis_failures(id, f, bp);
    if (!failures.empty()) {
        std::string msg = to_string(id) + " hypotheses not met for '" + f.id + "': ";
        for (std::size_t i = 0; i < failures.size(); ++i) {
            msg += (i ? "; " : "") + failures[i];
        }
        throw HypothesisError(msg);
    }
    const double lhs = id == TheoremId::Classical
                           ? classical_lhs(f, bp.frac.a, bp.frac.b, bp.frac.x, cfg)
                           : ostrowski_lhs(f, bp.frac, cfg);
    return make_verdict(id, f, bp, lhs, cfg);
}

Verdict verify_classical(const FunctionSpec& f, double a, double b, double x,
                         const QuadConfig& cfg) {
    BoundParams bp;
    bp.frac = {a, b, x, 1.0};
    bp.M = f.M;
    return verify_theorem(TheoremId::Classical, f, bp, cfg);
}

}  // namespace ostrowski
