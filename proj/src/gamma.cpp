#include "ostrowski/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ostrowski/errors.hpp"

namespace ostrowski {
namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_gamma(double z) {
    if (z < 0.5) {
        // reflection
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * lanczos_gamma(1.0 - z));
    }
    z -= 1.0;
    double series = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    const double sqrt_two_pi = std::sqrt(2.0 * std::numbers::pi);
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

}  // namespace

double gamma(double z) {
    if (!std::isfinite(z) || z <= 0.0) {
        throw DomainError("gamma: argument must be finite and positive");
    }
    // Integer arguments up to 171 take the factorial path; 170! is the last finite one.
    if (z == std::floor(z) && z <= 171.0) {
        double result = 1.0;
        for (double k = 2.0; k < z; k += 1.0) {
            result *= k;
        }
        return result;
    }
    // Half-integers are exact up to rounding: Gamma(n + 1/2) = sqrt(pi) (2n-1)!! / 2^n.
    if (z - 0.5 == std::floor(z - 0.5) && z <= 171.5) {
        double result = std::sqrt(std::numbers::pi);
        for (double k = 0.5; k < z; k += 1.0) {
            result *= k;
        }
        return result;
    }
    return lanczos_gamma(z);
}

}  // namespace ostrowski
