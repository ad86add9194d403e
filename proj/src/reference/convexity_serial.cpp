// Serial reference kernels; tests compare the OpenMP versions against these.

#include <cstdint>

#include "../convexity_detail.hpp"
#include "ostrowski/convexity.hpp"
#include "ostrowski/errors.hpp"

namespace ostrowski::reference {

MembershipResult check_membership_serial(const std::function<double(double)>& g,
                                         const Interval& domain, const ConvexityKind& kind,
                                         const GridSpec& grid, std::optional<Interval> defined_on) {
    const detail::MembershipSetup s = detail::prepare_membership(domain, kind, grid, defined_on);
    for (double x : s.xs) {
        for (double y : s.xs) {
            for (double t : s.ts) {
                const auto out = detail::evaluate_triple(g, s.kind, x, y, t, s.slack);
                if (out.status == detail::TripleStatus::NonPositive) {
                    detail::throw_non_positive(out.bad_point, out.lhs);
                }
                if (out.status == detail::TripleStatus::Violated) {
                    return {Counterexample{x, y, t, out.lhs, out.rhs}};
                }
            }
        }
    }
    return {};
}

LemmaSweep sweep_gm_lemma_serial(int steps) {
    if (steps < 2) {
        throw DomainError("sweep_gm_lemma: steps must be >= 2");
    }
    LemmaSweep sweep;
    for (int iy = 0; iy < steps; ++iy) {
        const double y = 1.0 + 4.0 * iy / (steps - 1);
        for (int ix = 0; ix < steps; ++ix) {
            const double x = y * ix / steps;
            for (int im = 1; im <= steps; ++im) {
                for (int it = 1; it <= steps; ++it) {
                    ++sweep.checked;
                    if (!check_gm_lemma(x, y, static_cast<double>(im) / steps,
                                        static_cast<double>(it) / steps)) {
                        ++sweep.violations;
                    }
                }
            }
        }
    }
    return sweep;
}

LemmaSweep sweep_power_lemma_serial(int steps) {
    if (steps < 1) {
        throw DomainError("sweep_power_lemma: steps must be >= 1");
    }
    LemmaSweep sweep;
    for (int il = 1; il <= steps; ++il) {
        for (int iu = 1; iu <= steps; ++iu) {
            for (int iv = 1; iv <= steps; ++iv) {
                ++sweep.checked;
                if (!check_power_lemma(static_cast<double>(il) / steps,
                                       static_cast<double>(iu) / steps,
                                       static_cast<double>(iv) / steps)) {
                    ++sweep.violations;
                }
            }
        }
    }
    return sweep;
}

}  // namespace ostrowski::reference
