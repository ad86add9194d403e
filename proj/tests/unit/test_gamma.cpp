#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "ostrowski/errors.hpp"
#include "ostrowski/gamma.hpp"


namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(Gamma, Anchors) {
    EXPECT_EQ(ostrowski::gamma(1.0), 1.0);
    EXPECT_EQ(ostrowski::gamma(2.0), 1.0);
    EXPECT_EQ(ostrowski::gamma(5.0), 24.0);
    EXPECT_LE(rel_err(ostrowski::gamma(0.5), std::sqrt(std::numbers::pi)), 1e-15);
    EXPECT_LE(rel_err(ostrowski::gamma(1.5), 0.5 * std::sqrt(std::numbers::pi)), 1e-15);
}

TEST(Gamma, FactorialsExact) {
    double fact = 1.0;
    for (int n = 1; n <= 25; ++n) {
        EXPECT_EQ(ostrowski::gamma(n), fact) << "n=" << n;
        fact *= n;
    }
    EXPECT_TRUE(std::isfinite(ostrowski::gamma(171.0)));
}

TEST(Gamma, MatchesLibm) {
    // glibc tgamma is an independent implementation, accurate to a few ulps.
    for (double z = 0.01; z < 40.0; z *= 1.07) {
        EXPECT_LE(rel_err(ostrowski::gamma(z), std::tgamma(z)), 1e-13) << "z=" << z;
    }
}

TEST(Gamma, Recurrence) {
    for (double z : {0.1, 0.3, 0.75, 1.25, 2.6, 7.3}) {
        EXPECT_LE(rel_err(ostrowski::gamma(z + 1.0), z * ostrowski::gamma(z)), 1e-14) << "z=" << z;
    }
}

TEST(Gamma, RejectsNonPositiveAndNonFinite) {
    for (double z : {0.0, -1.0, -0.5, std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::infinity()}) {
        EXPECT_THROW(ostrowski::gamma(z), ostrowski::DomainError) << "z=" << z;
    }
}
