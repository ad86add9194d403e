#include "ostrowski/convexity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "convexity_detail.hpp"
#include "ostrowski/errors.hpp"

namespace ostrowski {

ConvexityKind ConvexityKind::normalized() const {
    switch (tag) {
        case Tag::Convex:
            return {Tag::AlphaMConvex, 1.0, 1.0};
        case Tag::MConvex:
            return {Tag::AlphaMConvex, 1.0, m};
        case Tag::AlphaMConvex:
            return *this;
        case Tag::GeomConvex:
            return {Tag::AlphaMGeomConvex, 1.0, 1.0};
        case Tag::MGeomConvex:
            return {Tag::AlphaMGeomConvex, 1.0, m};
        case Tag::AlphaMGeomConvex:
            return *this;
    }
    return *this;
}

void ConvexityKind::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("ConvexityKind: alpha must lie in (0, 1]");
    }
    if (!(m > 0.0 && m <= 1.0)) {
        throw DomainError("ConvexityKind: m must lie in (0, 1]");
    }
}

std::string ConvexityKind::to_string() const {
    char buf[96];
    switch (tag) {
        case Tag::Convex:
            return "convex";
        case Tag::MConvex:
            std::snprintf(buf, sizeof buf, "mconvex:%.17g", m);
            return buf;
        case Tag::AlphaMConvex:
            std::snprintf(buf, sizeof buf, "amconvex:%.17g:%.17g", alpha, m);
            return buf;
        case Tag::GeomConvex:
            return "geom";
        case Tag::MGeomConvex:
            std::snprintf(buf, sizeof buf, "mgeom:%.17g", m);
            return buf;
        case Tag::AlphaMGeomConvex:
            std::snprintf(buf, sizeof buf, "amgeom:%.17g:%.17g", alpha, m);
            return buf;
    }
    return "?";
}

bool operator==(const ConvexityKind& lhs, const ConvexityKind& rhs) {
    const ConvexityKind a = lhs.normalized();
    const ConvexityKind b = rhs.normalized();
    return a.tag == b.tag && a.alpha == b.alpha && a.m == b.m;
}

ConvexityKind parse_convexity_kind(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        parts.push_back(item);
    }
    auto number = [&](std::size_t i) {
        try {
            std::size_t used = 0;
            const double v = std::stod(parts.at(i), &used);
            if (used != parts[i].size()) {
                throw std::invalid_argument("trailing characters");
            }
            return v;
        } catch (const std::exception&) {
            throw DomainError("convexity kind '" + text + "': bad numeric parameter");
        }
    };
    auto expect = [&](std::size_t n) {
        if (parts.size() != n) {
            throw DomainError("convexity kind '" + text + "': wrong number of parameters");
        }
    };
    if (parts.empty()) {
        throw DomainError("empty convexity kind");
    }
    ConvexityKind kind;
    const std::string& name = parts[0];
    if (name == "convex") {
        expect(1);
        kind = ConvexityKind::convex();
    } else if (name == "mconvex") {
        expect(2);
        kind = ConvexityKind::m_convex(number(1));
    } else if (name == "amconvex") {
        expect(3);
        kind = ConvexityKind::alpha_m_convex(number(1), number(2));
    } else if (name == "geom") {
        expect(1);
        kind = ConvexityKind::geom_convex();
    } else if (name == "mgeom") {
        expect(2);
        kind = ConvexityKind::m_geom_convex(number(1));
    } else if (name == "amgeom") {
        expect(3);
        kind = ConvexityKind::alpha_m_geom_convex(number(1), number(2));
    } else {
        throw DomainError("unknown convexity kind '" + name + "'");
    }
    kind.validate();
    return kind;
}

void GridSpec::validate() const {
    if (points_per_axis < 3) {
        throw DomainError("GridSpec: points_per_axis must be >= 3");
    }
    if (t_steps < 5) {
        throw DomainError("GridSpec: t_steps must be >= 5");
    }
    if (!(slack >= 0.0)) {
        throw DomainError("GridSpec: slack must be >= 0");
    }
}

Interval evaluation_hull(const Interval& domain, const ConvexityKind& kind) {
    const ConvexityKind k = kind.normalized();
    if (k.geometric()) {
        // x^t y^{m(1-t)} is monotone in x and y and log-linear in t
        return {std::min(domain.lo, std::pow(domain.lo, k.m)),
                std::max(domain.hi, std::pow(domain.hi, k.m))};
    }
    // t x + m (1-t) y
    return {std::min(domain.lo, k.m * domain.lo), std::max(domain.hi, k.m * domain.hi)};
}

namespace detail {

MembershipSetup prepare_membership(const Interval& domain, const ConvexityKind& kind,
                                   const GridSpec& grid, const std::optional<Interval>& defined_on) {
    kind.validate();
    grid.validate();
    if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
        throw DomainError("check_membership: domain must satisfy lo < hi");
    }
    if (domain.lo < 0.0) {
        throw DomainError("check_membership: domain must satisfy lo >= 0");
    }
    const Interval hull = evaluation_hull(domain, kind);
    const Interval defined = defined_on.value_or(domain);
    if (!defined.contains(hull)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "check_membership: evaluation hull [" << hull.lo << ", " << hull.hi
            << "] of " << kind.to_string() << " is not inside the definition domain ["
            << defined.lo << ", " << defined.hi << "]";
        throw DomainError(msg.str());
    }

    MembershipSetup setup;
    setup.kind = kind.normalized();
    setup.slack = grid.slack;
    const int n = grid.points_per_axis;
    setup.xs.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        setup.xs[static_cast<std::size_t>(i)] =
            i == n - 1 ? domain.hi : domain.lo + (domain.hi - domain.lo) * i / (n - 1);
    }
    const int nt = grid.t_steps;
    setup.ts.resize(static_cast<std::size_t>(nt));
    for (int k = 0; k < nt; ++k) {
        setup.ts[static_cast<std::size_t>(k)] = k == nt - 1 ? 1.0 : static_cast<double>(k) / (nt - 1);
    }
    return setup;
}

TripleOutcome evaluate_triple(const std::function<double(double)>& g, const ConvexityKind& kind,
                              double x, double y, double t, double slack) {
    TripleOutcome out;
    const double ta = std::pow(t, kind.alpha);
    if (kind.geometric()) {
        const double point = std::pow(x, t) * std::pow(y, kind.m * (1.0 - t));
        const double gx = g(x);
        const double gy = g(y);
        const double gp = g(point);
        for (auto [where, value] : {std::pair{x, gx}, std::pair{y, gy}, std::pair{point, gp}}) {
            if (!(value > 0.0)) {
                out.status = TripleStatus::NonPositive;
                out.bad_point = where;
                out.lhs = value;
                return out;
            }
        }
        out.lhs = gp;
        out.rhs = std::pow(gx, ta) * std::pow(gy, kind.m * (1.0 - ta));
    } else {
        out.lhs = g(t * x + kind.m * (1.0 - t) * y);
        out.rhs = ta * g(x) + kind.m * (1.0 - ta) * g(y);
    }
    const bool violated = !(out.lhs <= out.rhs + slack * std::max(1.0, std::abs(out.rhs)));
    out.status = violated ? TripleStatus::Violated : TripleStatus::Holds;
    return out;
}

void throw_non_positive(double point, double value) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "check_membership: g(" << point << ") = " << value
        << " is not positive; geometric convexity needs g > 0";
    throw DomainError(msg.str());
}

}  // namespace detail

namespace {

struct RowEvent {
    detail::TripleStatus status = detail::TripleStatus::Holds;
    Counterexample cex;
    double bad_point = 0.0;
};

RowEvent scan_row(const std::function<double(double)>& g, const detail::MembershipSetup& s,
                  double x) {
    RowEvent ev;
    for (double y : s.xs) {
        for (double t : s.ts) {
            const auto out = detail::evaluate_triple(g, s.kind, x, y, t, s.slack);
            if (out.status != detail::TripleStatus::Holds) {
                ev.status = out.status;
                ev.cex = {x, y, t, out.lhs, out.rhs};
                ev.bad_point = out.bad_point;
                return ev;
            }
        }
    }
    return ev;
}

}  // namespace

MembershipResult check_membership(const std::function<double(double)>& g, const Interval& domain,
                                  const ConvexityKind& kind, const GridSpec& grid,
                                  std::optional<Interval> defined_on) {
    const detail::MembershipSetup setup = detail::prepare_membership(domain, kind, grid, defined_on);
    const int rows = static_cast<int>(setup.xs.size());
    std::vector<RowEvent> events(static_cast<std::size_t>(rows));
    // Rows past the first known event can be skipped; rows before it must still finish.
    std::atomic<int> first_event{rows};

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < rows; ++i) {
        if (i > first_event.load(std::memory_order_relaxed)) {
            continue;
        }
        events[static_cast<std::size_t>(i)] = scan_row(g, setup, setup.xs[static_cast<std::size_t>(i)]);
        if (events[static_cast<std::size_t>(i)].status != detail::TripleStatus::Holds) {
            int seen = first_event.load();
            while (i < seen && !first_event.compare_exchange_weak(seen, i)) {
            }
        }
    }

    const int first = first_event.load();
    MembershipResult result;
    if (first < rows) {
        const RowEvent& ev = events[static_cast<std::size_t>(first)];
        if (ev.status == detail::TripleStatus::NonPositive) {
            detail::throw_non_positive(ev.bad_point, ev.cex.lhs);
        }
        result.counterexample = ev.cex;
    }
    return result;
}

bool check_gm_lemma(double x, double y, double m, double t, double slack) {
    const double lhs = std::pow(x, t) * std::pow(y, m * (1.0 - t));
    const double rhs = t * x + (1.0 - t) * y;
    return lhs <= rhs + slack * std::max(1.0, std::abs(rhs));
}

bool check_power_lemma(double lam, double u, double v, double slack) {
    const double lhs = std::pow(lam, std::pow(u, v));
    const double rhs = std::pow(lam, u * v);
    return lhs <= rhs + slack * std::max(1.0, std::abs(rhs));
}

LemmaSweep sweep_gm_lemma(int steps) {
    if (steps < 2) {
        throw DomainError("sweep_gm_lemma: steps must be >= 2");
    }
    std::int64_t violations = 0;
#pragma omp parallel for reduction(+ : violations) schedule(static)
    for (int iy = 0; iy < steps; ++iy) {
        const double y = 1.0 + 4.0 * iy / (steps - 1);
        for (int ix = 0; ix < steps; ++ix) {
            const double x = y * ix / steps;
            for (int im = 1; im <= steps; ++im) {
                const double m = static_cast<double>(im) / steps;
                for (int it = 1; it <= steps; ++it) {
                    if (!check_gm_lemma(x, y, m, static_cast<double>(it) / steps)) {
                        ++violations;
                    }
                }
            }
        }
    }
    const std::int64_t n = steps;
    return {n * n * n * n, violations};
}

LemmaSweep sweep_power_lemma(int steps) {
    if (steps < 1) {
        throw DomainError("sweep_power_lemma: steps must be >= 1");
    }
    std::int64_t violations = 0;
#pragma omp parallel for reduction(+ : violations) schedule(static)
    for (int il = 1; il <= steps; ++il) {
        const double lam = static_cast<double>(il) / steps;
        for (int iu = 1; iu <= steps; ++iu) {
            const double u = static_cast<double>(iu) / steps;
            for (int iv = 1; iv <= steps; ++iv) {
                if (!check_power_lemma(lam, u, static_cast<double>(iv) / steps)) {
                    ++violations;
                }
            }
        }
    }
    const std::int64_t n = steps;
    return {n * n * n, violations};
}

}  // namespace ostrowski
