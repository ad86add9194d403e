#pragma once

#include <functional>

#include "ostrowski/quadrature.hpp"

namespace ostrowski {

using RealFn = std::function<double(double)>;

struct FunctionSpec;

/// One instance (a, b, x, mu) of the fractional Ostrowski setting.
struct FracParams {
    double a = 0.0;
    double b = 1.0;
    double x = 0.5;
    double mu = 1.0;

    /// Throws DomainError unless 0 <= a < b, x in [a, b], mu > 0, all finite.
    void validate() const;
};

/// Left-sided Riemann-Liouville integral
///   J_{a+}^mu f(x) = 1/Gamma(mu) * int_a^x (x - t)^(mu - 1) f(t) dt.
///
/// The kernel singularity at t = x is removed with s = (x - t)^mu, which gives
/// 1/Gamma(mu + 1) * int_0^{(x-a)^mu} f(x - s^(1/mu)) ds. When 1/mu is not an
/// integer the s-range is additionally graded (s = S w^k) so the remaining
/// s^(1/mu) endpoint behaviour is smooth enough for Gauss panels.
/// Throws DomainError if x <= a or mu <= 0.
double rl_lower(const RealFn& f, double a, double x, double mu, const QuadConfig& cfg = {});

/// Right-sided Riemann-Liouville integral
///   J_{b-}^mu f(x) = 1/Gamma(mu) * int_x^b (t - x)^(mu - 1) f(t) dt.
/// Mirror of rl_lower. Throws DomainError if b <= x or mu <= 0.
double rl_upper(const RealFn& f, double x, double b, double mu, const QuadConfig& cfg = {});

/// As above, additionally requiring the integration range to lie in spec.domain.
double rl_lower(const FunctionSpec& spec, double a, double x, double mu, const QuadConfig& cfg = {});
double rl_upper(const FunctionSpec& spec, double x, double b, double mu, const QuadConfig& cfg = {});

/// int_0^1 t^mu c^t dt for 0 < c <= 1, mu > 0.
/// Returns the limit 1/(mu + 1) when |ln c| < 1e-8.
double mexp_integral(double c, double mu);

/// int_0^1 t^power g(t) dt for power > -1 with smooth g,
/// graded near t = 0 when power is not an integer.
double integrate_power_weighted(const RealFn& g, double power, const QuadConfig& cfg = {});

}  // namespace ostrowski
