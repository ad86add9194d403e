#pragma once

#include <map>
#include <string>
#include <vector>

#include "ostrowski/convexity.hpp"
#include "ostrowski/fracint.hpp"

namespace ostrowski {

/// "|f'|^q belongs to `kind`" on the whole spec domain.
struct Claim {
    ConvexityKind kind;
    double q = 1.0;
};

/// A closed-form test function with its analytic derivative and the
/// hypotheses it is claimed to satisfy. Claims are audited, never trusted.
struct FunctionSpec {
    std::string id;
    RealFn f;
    RealFn fprime;
    Interval domain;
    double M = 1.0;  ///< declared sup of |f'| on the domain
    std::vector<Claim> claims;
    bool decreasing_abs_deriv = false;

    /// Family name and parameters the spec was built from (for reports and replay).
    std::string family;
    std::map<std::string, double> params;

    /// Whether some claim asserts |f'|^q in the same class as `kind`.
    bool claims_cover(const ConvexityKind& kind, double q) const;

    /// t -> |f'(t)|^q
    RealFn abs_deriv_power(double q) const;
};

/// Parametric families; every member has closed forms for f and f'.
///   constant:     f = c
///   affine:       f = slope * x + intercept
///   power:        f' = M (x/lo)^(-r),        f(lo) = c
///   exponential:  f' = M exp(-lambda (x-lo)), f(lo) = c
/// `params` holds the family parameters; for affine, "M" overrides the
/// declared bound (default |slope|), which is how understated-M fixtures are built.
FunctionSpec make_family_member(const std::string& id, const std::string& family,
                                const std::map<std::string, double>& params,
                                const Interval& domain);

/// The (alpha, m, q) grid over which searched members have their claims derived.
struct ClaimGrid {
    std::vector<double> alphas{0.25, 0.5, 0.75, 1.0};
    std::vector<double> ms{0.25, 0.5, 0.75, 1.0};
    std::vector<double> qs{1.0, 1.5, 2.0, 3.0};
};

/// Every AlphaMGeomConvex(alpha, m) claim on `grid` that |f'|^q passes.
std::vector<Claim> derive_claims(const FunctionSpec& spec, const ClaimGrid& grid = {},
                                 const GridSpec& check_grid = {});

/// Claims for every (alpha, m, q) on the grid, without checking them.
std::vector<Claim> all_claims(const ClaimGrid& grid = {});

struct AuditReport {
    std::string id;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

/// Runs every FunctionSpec invariant: |f'| <= M on a 10,001-point grid, central
/// differences against f' at 1,001 interior points, each claim through
/// check_membership, and the decreasing-|f'| flag. Pure report.
AuditReport audit(const FunctionSpec& spec, const GridSpec& check_grid = {});

/// Validated builtin registry, built once. Throws std::logic_error if any audit fails.
const std::vector<FunctionSpec>& builtin_corpus();

/// Lookup in builtin_corpus(); throws DomainError for an unknown id.
const FunctionSpec& builtin_spec(const std::string& id);

/// Brute-force search over one family: every parameter combination is built,
/// its claims derived, and kept when it audits clean with at least one claim and M < 1.
struct FamilySearch {
    std::string family;
    Interval domain;
    std::map<std::string, std::vector<double>> param_grid;
};

std::vector<FunctionSpec> search_family(const FamilySearch& search, const ClaimGrid& grid = {});

/// Builtin specs plus ones registered at run time (config files).
class CorpusRegistry {
public:
    CorpusRegistry();

    const FunctionSpec& get(const std::string& id) const;
    bool contains(const std::string& id) const;
    /// Replaces nothing: a duplicate id is a DomainError.
    void add(FunctionSpec spec);
    const std::vector<FunctionSpec>& specs() const { return specs_; }

private:
    std::vector<FunctionSpec> specs_;
};

}  // namespace ostrowski
