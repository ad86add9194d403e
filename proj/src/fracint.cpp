#include "ostrowski/fracint.hpp"

#include <cmath>
#include <string>

#include "ostrowski/corpus.hpp"
#include "ostrowski/errors.hpp"
#include "ostrowski/gamma.hpp"

namespace ostrowski {

void FracParams::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x) || !std::isfinite(mu)) {
        throw DomainError("FracParams: all parameters must be finite");
    }
    if (a < 0.0) {
        throw DomainError("FracParams: a must be >= 0");
    }
    if (!(a < b)) {
        throw DomainError("FracParams: a must be < b");
    }
    if (x < a || x > b) {
        throw DomainError("FracParams: x must lie in [a, b]");
    }
    if (!(mu > 0.0)) {
        throw DomainError("FracParams: mu must be > 0");
    }
}

namespace {

bool is_integer(double v) { return v == std::floor(v); }

void check_order(double mu) {
    if (!std::isfinite(mu) || !(mu > 0.0)) {
        throw DomainError("Riemann-Liouville integral: order mu must be finite and > 0");
    }
}

// int_0^{len^mu} f(anchor + dir * s^(1/mu)) ds / Gamma(mu + 1), with s = len^mu * w^k.
double substituted_rl(const RealFn& f, double anchor, double dir, double len, double mu,
                      const QuadConfig& cfg) {
    const double inv_mu = 1.0 / mu;
    const int grade = is_integer(inv_mu) ? 1 : std::max(1, static_cast<int>(std::ceil(2.0 * mu)));
    const double expo = grade * inv_mu;
    const double scale = std::pow(len, mu) * grade;
    auto integrand = [&](double w) {
        const double jac = grade == 1 ? 1.0 : std::pow(w, grade - 1);
        return jac * f(anchor + dir * len * std::pow(w, expo));
    };
    return scale * integrate_adaptive(integrand, 0.0, 1.0, cfg) / gamma(mu + 1.0);
}

}  // namespace

double rl_lower(const RealFn& f, double a, double x, double mu, const QuadConfig& cfg) {
    check_order(mu);
    if (!std::isfinite(a) || !std::isfinite(x) || !(x > a)) {
        throw DomainError("rl_lower: requires x > a");
    }
    return substituted_rl(f, x, -1.0, x - a, mu, cfg);
}

double rl_upper(const RealFn& f, double x, double b, double mu, const QuadConfig& cfg) {
    check_order(mu);
    if (!std::isfinite(b) || !std::isfinite(x) || !(b > x)) {
        throw DomainError("rl_upper: requires b > x");
    }
    return substituted_rl(f, x, 1.0, b - x, mu, cfg);
}

double rl_lower(const FunctionSpec& spec, double a, double x, double mu, const QuadConfig& cfg) {
    if (!spec.domain.contains(a) || !spec.domain.contains(x)) {
        throw DomainError("rl_lower: [a, x] leaves the domain of '" + spec.id + "'");
    }
    return rl_lower(spec.f, a, x, mu, cfg);
}

double rl_upper(const FunctionSpec& spec, double x, double b, double mu, const QuadConfig& cfg) {
    if (!spec.domain.contains(x) || !spec.domain.contains(b)) {
        throw DomainError("rl_upper: [x, b] leaves the domain of '" + spec.id + "'");
    }
    return rl_upper(spec.f, x, b, mu, cfg);
}

double integrate_power_weighted(const RealFn& g, double power, const QuadConfig& cfg) {
    if (!(power > -1.0)) {
        throw DomainError("integrate_power_weighted: power must be > -1");
    }
    if (is_integer(power)) {
        return integrate_adaptive([&](double t) { return std::pow(t, power) * g(t); }, 0.0, 1.0,
                                  cfg);
    }
    // t = w^k makes the weight w^{k(power+1)-1}; k(power+1) >= 4 keeps it C^3.
    const int grade = std::max(1, static_cast<int>(std::ceil(4.0 / (power + 1.0))));
    const double expo = grade * (power + 1.0) - 1.0;
    auto integrand = [&](double w) { return grade * std::pow(w, expo) * g(std::pow(w, grade)); };
    return integrate_adaptive(integrand, 0.0, 1.0, cfg);
}

double mexp_integral(double c, double mu) {
    if (!std::isfinite(c) || !(c > 0.0) || c > 1.0) {
        throw DomainError("mexp_integral: c must lie in (0, 1]");
    }
    if (!std::isfinite(mu) || !(mu > 0.0)) {
        throw DomainError("mexp_integral: mu must be > 0");
    }
    const double log_c = std::log(c);
    if (std::abs(log_c) < 1e-8) {
        return 1.0 / (mu + 1.0);
    }
    if (std::abs(log_c) <= 1.0) {
        // sum_k L^k / (k! (mu + k + 1)); alternating but |L| <= 1 keeps cancellation mild.
        double term = 1.0;
        double sum = 1.0 / (mu + 1.0);
        for (int k = 1; k < 60; ++k) {
            term *= log_c / k;
            const double next = term / (mu + k + 1.0);
            sum += next;
            if (std::abs(next) < 1e-18 * std::abs(sum)) {
                break;
            }
        }
        return sum;
    }
    if (is_integer(mu) && (mu <= 4.0 || std::abs(log_c) >= mu)) {
        // I_0 = (c - 1)/L, I_n = (c - n I_{n-1})/L
        const int n = static_cast<int>(mu);
        double value = std::expm1(log_c) / log_c;
        for (int k = 1; k <= n; ++k) {
            value = (c - k * value) / log_c;
        }
        return value;
    }
    QuadConfig tight;
    tight.abs_tol = 1e-16;
    tight.rel_tol = 1e-14;
    tight.max_subdivisions = 40;
    return integrate_power_weighted([log_c](double t) { return std::exp(log_c * t); }, mu, tight);
}

}  // namespace ostrowski
