#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ostrowski/convexity.hpp"
#include "ostrowski/errors.hpp"

using namespace ostrowski;
using Kind = ConvexityKind;

namespace {

void expect_same(const MembershipResult& lhs, const MembershipResult& rhs) {
    ASSERT_EQ(lhs.passed(), rhs.passed());
    if (!lhs.passed()) {
        EXPECT_EQ(lhs.counterexample->x, rhs.counterexample->x);
        EXPECT_EQ(lhs.counterexample->y, rhs.counterexample->y);
        EXPECT_EQ(lhs.counterexample->t, rhs.counterexample->t);
        EXPECT_EQ(lhs.counterexample->lhs, rhs.counterexample->lhs);
        EXPECT_EQ(lhs.counterexample->rhs, rhs.counterexample->rhs);
    }
}

double square(double x) { return x * x; }

}  // namespace

TEST(Kind, ParseAndPrintRoundTrip) {
    for (const char* text : {"convex", "mconvex:0.5", "amconvex:0.25:0.75", "geom", "mgeom:0.5",
                             "amgeom:0.5:0.5"}) {
        const Kind kind = parse_convexity_kind(text);
        EXPECT_EQ(parse_convexity_kind(kind.to_string()), kind) << text;
    }
    EXPECT_EQ(parse_convexity_kind("amgeom:0.5:0.25"), Kind::alpha_m_geom_convex(0.5, 0.25));
}

TEST(Kind, ParseRejectsGarbage) {
    for (const char* text : {"", "concave", "mgeom", "mgeom:x", "amgeom:0.5", "amgeom:2:0.5",
                             "mconvex:0", "geom:1"}) {
        EXPECT_THROW(parse_convexity_kind(text), DomainError) << text;
    }
}

TEST(Kind, NormalizedEquality) {
    EXPECT_EQ(Kind::m_geom_convex(0.4), Kind::alpha_m_geom_convex(1.0, 0.4));
    EXPECT_EQ(Kind::geom_convex(), Kind::m_geom_convex(1.0));
    EXPECT_EQ(Kind::convex(), Kind::m_convex(1.0));
    EXPECT_EQ(Kind::m_convex(0.3), Kind::alpha_m_convex(1.0, 0.3));
    EXPECT_FALSE(Kind::geom_convex() == Kind::convex());
    EXPECT_FALSE(Kind::m_geom_convex(0.4) == Kind::m_geom_convex(0.5));
}

TEST(Kind, ValidateRanges) {
    EXPECT_THROW(Kind::m_convex(0.0).validate(), DomainError);
    EXPECT_THROW(Kind::alpha_m_geom_convex(1.1, 0.5).validate(), DomainError);
    EXPECT_NO_THROW(Kind::alpha_m_geom_convex(1.0, 1.0).validate());
}

TEST(Hull, CoversScaledPoints) {
    const Interval d{0.5, 2.0};
    const Interval plain = evaluation_hull(d, Kind::m_convex(0.5));
    EXPECT_DOUBLE_EQ(plain.lo, 0.25);
    EXPECT_DOUBLE_EQ(plain.hi, 2.0);
    const Interval geo = evaluation_hull(d, Kind::m_geom_convex(0.5));
    EXPECT_DOUBLE_EQ(geo.lo, 0.5);
    EXPECT_DOUBLE_EQ(geo.hi, 2.0);
}

TEST(Membership, ClassicalCases) {
    const Interval d{0.0, 1.0};
    EXPECT_TRUE(check_membership(square, d, Kind::convex()).passed());
    const auto concave = check_membership([](double x) { return -x * x; }, d, Kind::convex());
    ASSERT_FALSE(concave.passed());
    EXPECT_GT(concave.counterexample->lhs, concave.counterexample->rhs);
}

TEST(Membership, GeometricCases) {
    const Interval d{0.5, 3.0};
    // power functions are log-linear in log x: equality case
    EXPECT_TRUE(check_membership([](double x) { return std::pow(x, 1.7); }, d, Kind::geom_convex()).passed());
    // AM-GM makes exp geometrically convex
    EXPECT_TRUE(check_membership([](double x) { return std::exp(x); }, d, Kind::geom_convex()).passed());
    EXPECT_FALSE(check_membership([](double x) { return std::exp(-x); }, d, Kind::geom_convex()).passed());
}

TEST(Membership, CounterexampleIsLexicographicallyFirst) {
    const Interval d{0.0, 1.0};
    GridSpec grid;
    grid.points_per_axis = 11;
    grid.t_steps = 5;
    const auto result = check_membership([](double x) { return std::sin(8.0 * x); }, d, Kind::convex(), grid);
    ASSERT_FALSE(result.passed());
    const Counterexample c = *result.counterexample;
    // brute-force scan in (x, y, t) order must find the same triple first
    bool found = false;
    for (int i = 0; i < grid.points_per_axis && !found; ++i) {
        for (int j = 0; j < grid.points_per_axis && !found; ++j) {
            for (int k = 0; k < grid.t_steps && !found; ++k) {
                const double x = static_cast<double>(i) / (grid.points_per_axis - 1);
                const double y = static_cast<double>(j) / (grid.points_per_axis - 1);
                const double t = static_cast<double>(k) / (grid.t_steps - 1);
                const double lhs = std::sin(8.0 * (t * x + (1 - t) * y));
                const double rhs = t * std::sin(8.0 * x) + (1 - t) * std::sin(8.0 * y);
                if (lhs > rhs + grid.slack * std::max(1.0, std::abs(rhs))) {
                    found = true;
                    EXPECT_DOUBLE_EQ(c.x, x);
                    EXPECT_DOUBLE_EQ(c.y, y);
                    EXPECT_DOUBLE_EQ(c.t, t);
                }
            }
        }
    }
    EXPECT_TRUE(found);
}

TEST(Membership, SpecializationCoherence) {
    const Interval d{1.0, 2.5};
    const std::vector<std::function<double(double)>> gs = {
        [](double x) { return std::exp(-0.3 * x); },
        [](double x) { return std::pow(x, -0.5); },
        [](double x) { return 2.0 + std::sin(x); },
    };
    const Interval on{0.1, 2.5};
    for (const auto& g : gs) {
        for (double m : {0.25, 0.5, 1.0}) {
            expect_same(check_membership(g, d, Kind::alpha_m_geom_convex(1.0, m)),
                        check_membership(g, d, Kind::m_geom_convex(m)));
            expect_same(check_membership(g, d, Kind::alpha_m_convex(1.0, m), {}, on),
                        check_membership(g, d, Kind::m_convex(m), {}, on));
        }
        expect_same(check_membership(g, d, Kind::m_geom_convex(1.0)),
                    check_membership(g, d, Kind::geom_convex()));
    }
}

TEST(Membership, ParallelMatchesSerial) {
    const Interval d{0.5, 1.5};
    const std::vector<std::function<double(double)>> gs = {
        [](double x) { return std::exp(-2.0 * x); },
        [](double x) { return 1.0 + 0.5 * std::cos(5.0 * x); },
        [](double x) { return std::pow(x, 0.3); },
    };
    const std::vector<Kind> kinds = {Kind::convex(), Kind::m_convex(0.5), Kind::alpha_m_convex(0.5, 0.5),
                                      Kind::geom_convex(), Kind::alpha_m_geom_convex(0.25, 0.75)};
    for (const auto& g : gs) {
        for (const auto& kind : kinds) {
            const Interval on{0.0, 2.0};
            expect_same(check_membership(g, d, kind, {}, on),
                        reference::check_membership_serial(g, d, kind, {}, on));
        }
    }
}

TEST(Membership, Errors) {
    const Interval d{0.0, 1.0};
    // geometric kinds need g > 0 everywhere they are evaluated
    EXPECT_THROW(check_membership([](double x) { return x - 0.5; }, Interval{0.1, 1.0}, Kind::geom_convex()),
                 DomainError);
    // m < 1 pulls evaluation points below the domain
    EXPECT_THROW(check_membership(square, Interval{1.0, 2.0}, Kind::m_convex(0.5), {}, Interval{1.0, 2.0}),
                 DomainError);
    GridSpec bad;
    bad.points_per_axis = 1;
    EXPECT_THROW(check_membership(square, d, Kind::convex(), bad), DomainError);
    EXPECT_THROW(check_membership(square, Interval{1.0, 0.0}, Kind::convex()), DomainError);
}

TEST(Lemmas, PointChecks) {
    EXPECT_TRUE(check_gm_lemma(0.5, 2.0, 0.5, 0.3));
    EXPECT_FALSE(check_gm_lemma(0.9, 0.5, 0.5, 0.5));  // outside x < y, y >= 1
    EXPECT_TRUE(check_power_lemma(0.3, 0.5, 0.7));
    EXPECT_FALSE(check_power_lemma(2.0, 0.5, 0.5));  // lam > 1 reverses it
}

TEST(Lemmas, GridSweepsClean) {
    const LemmaSweep gm = sweep_gm_lemma(50);
    EXPECT_GT(gm.checked, 0);
    EXPECT_EQ(gm.violations, 0);
    const LemmaSweep pw = sweep_power_lemma(100);
    EXPECT_EQ(pw.checked, 1000000);
    EXPECT_EQ(pw.violations, 0);
}

TEST(Lemmas, ParallelMatchesSerial) {
    for (int steps : {3, 10, 17}) {
        const auto a = sweep_gm_lemma(steps);
        const auto b = reference::sweep_gm_lemma_serial(steps);
        EXPECT_EQ(a.checked, b.checked);
        EXPECT_EQ(a.violations, b.violations);
        const auto c = sweep_power_lemma(steps);
        const auto d = reference::sweep_power_lemma_serial(steps);
        EXPECT_EQ(c.checked, d.checked);
        EXPECT_EQ(c.violations, d.violations);
    }
}
