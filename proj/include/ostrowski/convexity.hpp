#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace ostrowski {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double v) const { return v >= lo && v <= hi; }
    bool contains(const Interval& other) const { return other.lo >= lo && other.hi <= hi; }
};

/// The convexity classes: classical, m-, (alpha,m)-, and their geometric
/// (multiplicative) counterparts. Geometric kinds reduce as
/// GeomConvex == MGeomConvex(1) and MGeomConvex(m) == AlphaMGeomConvex(1, m).
struct ConvexityKind {
    enum class Tag { Convex, MConvex, AlphaMConvex, GeomConvex, MGeomConvex, AlphaMGeomConvex };

    Tag tag = Tag::Convex;
    double alpha = 1.0;
    double m = 1.0;

    static ConvexityKind convex() { return {Tag::Convex, 1.0, 1.0}; }
    static ConvexityKind m_convex(double m) { return {Tag::MConvex, 1.0, m}; }
    static ConvexityKind alpha_m_convex(double alpha, double m) { return {Tag::AlphaMConvex, alpha, m}; }
    static ConvexityKind geom_convex() { return {Tag::GeomConvex, 1.0, 1.0}; }
    static ConvexityKind m_geom_convex(double m) { return {Tag::MGeomConvex, 1.0, m}; }
    static ConvexityKind alpha_m_geom_convex(double alpha, double m) {
        return {Tag::AlphaMGeomConvex, alpha, m};
    }

    bool geometric() const {
        return tag == Tag::GeomConvex || tag == Tag::MGeomConvex || tag == Tag::AlphaMGeomConvex;
    }

    /// Same class expressed with the most general tag of its family.
    ConvexityKind normalized() const;

    /// Throws DomainError if alpha or m lie outside (0, 1].
    void validate() const;

    std::string to_string() const;
};

bool operator==(const ConvexityKind& lhs, const ConvexityKind& rhs);

/// Parses "convex", "mconvex:M", "amconvex:A:M", "geom", "mgeom:M", "amgeom:A:M".
ConvexityKind parse_convexity_kind(const std::string& text);

struct GridSpec {
    int points_per_axis = 41;
    int t_steps = 21;
    /// Relative slack: a triple violates when lhs > rhs + slack * max(1, |rhs|).
    double slack = 1e-12;

    void validate() const;
};

struct Counterexample {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Outcome of a membership check: no counterexample means the grid passed.
struct MembershipResult {
    std::optional<Counterexample> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

/// Points where a kind's defining inequality evaluates g, for x, y in `domain`.
Interval evaluation_hull(const Interval& domain, const ConvexityKind& kind);

/// Grid check of the defining inequality of `kind` for g over `domain`.
///
/// Every triple (x, y, t) of the grid is tested; the reported counterexample is
/// the lexicographically smallest (x, then y, then t) violating triple, so the
/// result does not depend on thread scheduling. `defined_on` is where g may be
/// evaluated and must contain the evaluation hull. Throws DomainError on a
/// hull outside `defined_on`, or a non-positive g value for geometric kinds.
/// Rows are checked in parallel with OpenMP.
MembershipResult check_membership(const std::function<double(double)>& g, const Interval& domain,
                                  const ConvexityKind& kind, const GridSpec& grid = {},
                                  std::optional<Interval> defined_on = std::nullopt);

/// x^t y^{m(1-t)} <= t x + (1-t) y (within slack). Holds whenever x < y and y >= 1.
bool check_gm_lemma(double x, double y, double m, double t, double slack = 1e-12);

/// lam^{u^v} <= lam^{uv} (within slack) for 0 < lam <= 1 and 0 < u, v <= 1.
bool check_power_lemma(double lam, double u, double v, double slack = 1e-12);

struct LemmaSweep {
    std::int64_t checked = 0;
    std::int64_t violations = 0;
};

/// x = y*i/steps (i < steps), y in [1, 5], m, t = j/steps (j = 1..steps).
LemmaSweep sweep_gm_lemma(int steps);

/// lam, u, v = j/steps for j = 1..steps.
LemmaSweep sweep_power_lemma(int steps);

namespace reference {

/// Single-threaded row-by-row version of check_membership; same contract.
MembershipResult check_membership_serial(const std::function<double(double)>& g,
                                         const Interval& domain, const ConvexityKind& kind,
                                         const GridSpec& grid = {},
                                         std::optional<Interval> defined_on = std::nullopt);

LemmaSweep sweep_gm_lemma_serial(int steps);
LemmaSweep sweep_power_lemma_serial(int steps);

}  // namespace reference

}  // namespace ostrowski
