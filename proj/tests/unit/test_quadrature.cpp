#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "ostrowski/quadrature.hpp"

using namespace ostrowski;

TEST(GaussLegendre, WeightsSumToTwoAndNodesSymmetric) {
    for (int n = 1; n <= 40; ++n) {
        const auto& rule = gauss_legendre_rule(n);
        ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(n));
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            sum += rule.weights[i];
            EXPECT_NEAR(rule.nodes[i], -rule.nodes[n - 1 - i], 1e-15);
            EXPECT_GT(rule.weights[i], 0.0);
        }
        EXPECT_NEAR(sum, 2.0, 1e-14) << "n=" << n;
    }
}

TEST(GaussLegendre, ExactForDegree2nMinus1) {
    for (int n : {2, 5, 8, 16}) {
        const auto& rule = gauss_legendre_rule(n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                sum += rule.weights[i] * std::pow(rule.nodes[i], k);
            }
            const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
            EXPECT_NEAR(sum, exact, 1e-14) << "n=" << n << " k=" << k;
        }
    }
}

TEST(GaussLegendre, CachedReferenceIsStableAcrossThreads) {
    std::vector<const GaussLegendreRule*> seen(8, nullptr);
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([&, t] { seen[t] = &gauss_legendre_rule(23); });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (const auto* p : seen) {
        EXPECT_EQ(p, seen[0]);
    }
}

TEST(GaussLegendre, RejectsNonPositiveOrder) {
    EXPECT_THROW(gauss_legendre_rule(0), DomainError);
}

TEST(Adaptive, SmoothIntegrands) {
    const QuadConfig cfg;
    EXPECT_NEAR(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, cfg),
                2.0, 1e-12);
    EXPECT_NEAR(integrate_adaptive([](double x) { return std::exp(x); }, -1.0, 2.0, cfg),
                std::exp(2.0) - std::exp(-1.0), 1e-11);
}

TEST(Adaptive, EndpointKinkRefines) {
    // x^1.5 has an unbounded second derivative at 0; dyadic refinement copes.
    const double got = integrate_adaptive([](double x) { return std::pow(x, 1.5); }, 0.0, 1.0, {});
    EXPECT_NEAR(got, 0.4, 1e-10);
}

TEST(Adaptive, PeakedIntegrand) {
    const double got = integrate_adaptive([](double x) { return 1.0 / (1.0 + 400.0 * x * x); }, -1.0, 1.0, {});
    EXPECT_NEAR(got, 0.1 * std::atan(20.0), 1e-10);
}

TEST(Adaptive, OrientationAndEmptyInterval) {
    auto f = [](double x) { return x * x; };
    EXPECT_EQ(integrate_adaptive(f, 1.5, 1.5, {}), 0.0);
    EXPECT_NEAR(integrate_adaptive(f, 2.0, 0.0, {}), -8.0 / 3.0, 1e-13);
}

TEST(Adaptive, ThrowsWhenBudgetExhausted) {
    QuadConfig cfg;
    cfg.abs_tol = 1e-15;
    cfg.rel_tol = 1e-15;
    cfg.max_subdivisions = 3;
    auto step = [](double x) { return x < 1.0 / 3.0 ? 0.0 : 1.0; };
    EXPECT_THROW(integrate_adaptive(step, 0.0, 1.0, cfg), ConvergenceError);
}

TEST(QuadConfigTest, Validation) {
    QuadConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.abs_tol = -1.0;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = {};
    cfg.base_nodes = 0;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = {};
    cfg.max_subdivisions = -2;
    EXPECT_THROW(cfg.validate(), DomainError);
}
