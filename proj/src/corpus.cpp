#include "ostrowski/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ostrowski/errors.hpp"

namespace ostrowski {

bool FunctionSpec::claims_cover(const ConvexityKind& kind, double q) const {
    return std::any_of(claims.begin(), claims.end(),
                       [&](const Claim& c) { return c.q == q && c.kind == kind; });
}

RealFn FunctionSpec::abs_deriv_power(double q) const {
    return [d = fprime, q](double t) { return std::pow(std::abs(d(t)), q); };
}

namespace {

double param(const std::map<std::string, double>& params, const std::string& family,
             const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) {
        throw DomainError("family '" + family + "' needs parameter '" + name + "'");
    }
    return it->second;
}

double param_or(const std::map<std::string, double>& params, const std::string& name,
                double fallback) {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, double>& params, const std::string& family,
                    std::initializer_list<const char*> known) {
    for (const auto& [name, value] : params) {
        if (std::none_of(known.begin(), known.end(), [&](const char* k) { return name == k; })) {
            throw DomainError("family '" + family + "' has no parameter '" + name + "'");
        }
    }
}

}  // namespace

FunctionSpec make_family_member(const std::string& id, const std::string& family,
                                const std::map<std::string, double>& params,
                                const Interval& domain) {
    if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
        throw DomainError("spec '" + id + "': domain must satisfy lo < hi");
    }
    FunctionSpec spec;
    spec.id = id;
    spec.domain = domain;
    spec.family = family;
    spec.params = params;

    if (family == "constant") {
        reject_unknown(params, family, {"c", "M"});
        const double c = param(params, family, "c");
        spec.f = [c](double) { return c; };
        spec.fprime = [](double) { return 0.0; };
        spec.M = param_or(params, "M", 1e-3);
        spec.decreasing_abs_deriv = true;
    } else if (family == "affine") {
        reject_unknown(params, family, {"slope", "intercept", "M"});
        const double slope = param(params, family, "slope");
        const double intercept = param_or(params, "intercept", 0.0);
        spec.f = [slope, intercept](double x) { return slope * x + intercept; };
        spec.fprime = [slope](double) { return slope; };
        spec.M = param_or(params, "M", std::abs(slope));
        spec.decreasing_abs_deriv = true;
    } else if (family == "power") {
        reject_unknown(params, family, {"M", "r", "c"});
        const double M = param(params, family, "M");
        const double r = param(params, family, "r");
        const double c = param_or(params, "c", 1.0);
        const double lo = domain.lo;
        if (!(lo > 0.0) || !(r > 0.0)) {
            throw DomainError("power family needs domain lo > 0 and r > 0");
        }
        spec.fprime = [M, r, lo](double x) { return M * std::pow(x / lo, -r); };
        if (r == 1.0) {
            spec.f = [M, c, lo](double x) { return c + M * lo * std::log(x / lo); };
        } else {
            spec.f = [M, r, c, lo](double x) {
                return c + M * lo * (std::pow(x / lo, 1.0 - r) - 1.0) / (1.0 - r);
            };
        }
        spec.M = M;
        spec.decreasing_abs_deriv = true;
    } else if (family == "exponential") {
        reject_unknown(params, family, {"M", "lambda", "c"});
        const double M = param(params, family, "M");
        const double lambda = param(params, family, "lambda");
        const double c = param_or(params, "c", 1.0);
        const double lo = domain.lo;
        if (!(lambda > 0.0)) {
            throw DomainError("exponential family needs lambda > 0");
        }
        spec.fprime = [M, lambda, lo](double x) { return M * std::exp(-lambda * (x - lo)); };
        spec.f = [M, lambda, c, lo](double x) {
            return c - M / lambda * std::expm1(-lambda * (x - lo));
        };
        spec.M = M;
        spec.decreasing_abs_deriv = true;
    } else {
        throw DomainError("unknown function family '" + family + "'");
    }
    return spec;
}

std::vector<Claim> all_claims(const ClaimGrid& grid) {
    std::vector<Claim> claims;
    for (double q : grid.qs) {
        for (double alpha : grid.alphas) {
            for (double m : grid.ms) {
                claims.push_back({ConvexityKind::alpha_m_geom_convex(alpha, m), q});
            }
        }
    }
    return claims;
}

std::vector<Claim> derive_claims(const FunctionSpec& spec, const ClaimGrid& grid,
                                 const GridSpec& check_grid) {
    std::vector<Claim> kept;
    for (const Claim& claim : all_claims(grid)) {
        try {
            if (check_membership(spec.abs_deriv_power(claim.q), spec.domain, claim.kind,
                                 check_grid)
                    .passed()) {
                kept.push_back(claim);
            }
        } catch (const DomainError&) {
            // |f'| vanishes somewhere or the hull leaves the domain: no geometric claim
        }
    }
    return kept;
}

AuditReport audit(const FunctionSpec& spec, const GridSpec& check_grid) {
    AuditReport report;
    report.id = spec.id;
    auto fail = [&](const std::string& what) { report.violations.push_back(what); };
    const double lo = spec.domain.lo;
    const double hi = spec.domain.hi;
    const double len = hi - lo;

    if (!(spec.M > 0.0 && spec.M <= 1.0)) {
        fail("declared M must lie in (0, 1]");
    }
    if (lo < 0.0 || hi < 1.0) {
        fail("domain must satisfy lo >= 0 and hi >= 1");
    }

    // sup bound
    constexpr int kBoundPoints = 10001;
    for (int i = 0; i < kBoundPoints; ++i) {
        const double x = i == kBoundPoints - 1 ? hi : lo + len * i / (kBoundPoints - 1);
        const double d = std::abs(spec.fprime(x));
        if (!(d <= spec.M + 1e-12)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "|f'(" << x << ")| = " << d << " exceeds declared M = " << spec.M;
            fail(msg.str());
            break;
        }
    }

    // central differences at interior points
    constexpr int kDiffPoints = 1001;
    const double h = 1e-5 * len;
    for (int i = 1; i <= kDiffPoints; ++i) {
        const double x = lo + len * i / (kDiffPoints + 1);
        const double fd = (spec.f(x + h) - spec.f(x - h)) / (2.0 * h);
        const double exact = spec.fprime(x);
        if (!(std::abs(fd - exact) <= 1e-6)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "finite difference " << fd << " disagrees with f'(" << x << ") = " << exact;
            fail(msg.str());
            break;
        }
    }

    for (const Claim& claim : spec.claims) {
        std::ostringstream label;
        label << "claim |f'|^" << claim.q << " in " << claim.kind.to_string();
        try {
            const MembershipResult res =
                check_membership(spec.abs_deriv_power(claim.q), spec.domain, claim.kind, check_grid);
            if (!res.passed()) {
                const Counterexample& c = *res.counterexample;
                std::ostringstream msg;
                msg.precision(17);
                msg << label.str() << " fails at x=" << c.x << " y=" << c.y << " t=" << c.t
                    << " (lhs " << c.lhs << " > rhs " << c.rhs << ")";
                fail(msg.str());
            }
        } catch (const DomainError& e) {
            fail(label.str() + ": " + e.what());
        }
    }

    if (spec.decreasing_abs_deriv) {
        double prev = std::abs(spec.fprime(lo));
        for (int i = 1; i < kBoundPoints; ++i) {
            const double x = i == kBoundPoints - 1 ? hi : lo + len * i / (kBoundPoints - 1);
            const double cur = std::abs(spec.fprime(x));
            if (cur > prev + 1e-12) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "|f'| increases at x=" << x;
                fail(msg.str());
                break;
            }
            prev = cur;
        }
    }
    return report;
}

namespace {

std::vector<FunctionSpec> build_builtin() {
    std::vector<FunctionSpec> specs;

    specs.push_back(make_family_member("const1", "constant", {{"c", 1.0}}, {0.0, 4.0}));
    specs.push_back(make_family_member("const2", "constant", {{"c", 2.0}}, {0.0, 4.0}));

    // f(x) = x vanishes at 0, so it only serves the classical inequality.
    specs.push_back(make_family_member("linear", "affine", {{"slope", 1.0}}, {0.0, 2.0}));

    // Constant |f'| = M <= 1 lies in every (alpha, m)-geometric class.
    FunctionSpec unit = make_family_member("unit_slope", "affine",
                                           {{"slope", 1.0}, {"intercept", 1.0}}, {0.0, 2.0});
    unit.claims = all_claims();
    specs.push_back(std::move(unit));

    FunctionSpec affine = make_family_member("affine08", "affine", {{"slope", 0.8}}, {1.0, 3.0});
    affine.claims = all_claims();
    specs.push_back(std::move(affine));

    // Parameters found by search_family over M in {0.3, 0.5, 0.8}, r / lambda in {0.1, 0.5, 1}.
    struct Searched {
        const char* id;
        const char* family;
        std::map<std::string, double> params;
        Interval domain;
    };
    const Searched searched[] = {
        {"power_a", "power", {{"M", 0.5}, {"r", 0.1}, {"c", 1.0}}, {0.5, 1.5}},
        {"power_b", "power", {{"M", 0.8}, {"r", 0.5}, {"c", 1.0}}, {0.5, 1.5}},
        {"exp_a", "exponential", {{"M", 0.5}, {"lambda", 0.1}, {"c", 1.0}}, {0.5, 1.5}},
        {"exp_b", "exponential", {{"M", 0.3}, {"lambda", 0.5}, {"c", 1.0}}, {1.0, 2.0}},
    };
    for (const auto& s : searched) {
        FunctionSpec spec = make_family_member(s.id, s.family, s.params, s.domain);
        spec.claims = derive_claims(spec);
        specs.push_back(std::move(spec));
    }

    for (const FunctionSpec& spec : specs) {
        const AuditReport report = audit(spec);
        if (!report.passed()) {
            throw std::logic_error("builtin corpus entry '" + spec.id +
                                   "' fails audit: " + report.violations.front());
        }
    }
    return specs;
}

}  // namespace

const std::vector<FunctionSpec>& builtin_corpus() {
    static const std::vector<FunctionSpec> corpus = build_builtin();
    return corpus;
}

const FunctionSpec& builtin_spec(const std::string& id) {
    for (const FunctionSpec& spec : builtin_corpus()) {
        if (spec.id == id) {
            return spec;
        }
    }
    throw DomainError("unknown function id '" + id + "'");
}

std::vector<FunctionSpec> search_family(const FamilySearch& search, const ClaimGrid& grid) {
    // cartesian product of the parameter grid, in key order
    std::vector<std::map<std::string, double>> combos{{}};
    for (const auto& [name, values] : search.param_grid) {
        std::vector<std::map<std::string, double>> next;
        for (const auto& partial : combos) {
            for (double v : values) {
                auto extended = partial;
                extended[name] = v;
                next.push_back(std::move(extended));
            }
        }
        combos = std::move(next);
    }

    std::vector<FunctionSpec> found;
    int index = 0;
    for (const auto& params : combos) {
        FunctionSpec spec = make_family_member(search.family + "_" + std::to_string(index++),
                                               search.family, params, search.domain);
        if (!(spec.M < 1.0)) {
            continue;
        }
        spec.claims = derive_claims(spec, grid);
        if (spec.claims.empty() || !audit(spec).passed()) {
            continue;
        }
        found.push_back(std::move(spec));
    }
    return found;
}

CorpusRegistry::CorpusRegistry() : specs_(builtin_corpus()) {}

const FunctionSpec& CorpusRegistry::get(const std::string& id) const {
    for (const FunctionSpec& spec : specs_) {
        if (spec.id == id) {
            return spec;
        }
    }
    throw DomainError("unknown function id '" + id + "'");
}

bool CorpusRegistry::contains(const std::string& id) const {
    return std::any_of(specs_.begin(), specs_.end(),
                       [&](const FunctionSpec& s) { return s.id == id; });
}

void CorpusRegistry::add(FunctionSpec spec) {
    if (contains(spec.id)) {
        throw DomainError("function id '" + spec.id + "' is already registered");
    }
    specs_.push_back(std::move(spec));
}

}  // namespace ostrowski
