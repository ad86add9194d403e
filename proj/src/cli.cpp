#include "ostrowski/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ostrowski/errors.hpp"
#include "ostrowski/sweep.hpp"

namespace ostrowski::cli {

namespace {

std::string one_line(std::string msg) {
    for (char& c : msg) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    while (!msg.empty() && msg.back() == ' ') {
        msg.pop_back();
    }
    return msg;
}

CorpusRegistry load_registry(const std::string& config_path, std::ostream& err) {
    if (config_path.empty()) {
        return CorpusRegistry{};
    }
    std::vector<std::string> warnings;
    CorpusRegistry registry = registry_for(load_config(config_path), &warnings);
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }
    return registry;
}

struct FracIntArgs {
    std::string f, side = "lower", config;
    double a = NAN, b = NAN, x = NAN, mu = NAN;
};

int frac_int(const FracIntArgs& args, std::ostream& out, std::ostream& err) {
    const CorpusRegistry registry = load_registry(args.config, err);
    const FunctionSpec& spec = registry.get(args.f);
    double value = 0.0;
    if (args.side == "lower") {
        if (std::isnan(args.a)) {
            throw DomainError("frac-int: --a is required for the lower integral");
        }
        value = rl_lower(spec, args.a, args.x, args.mu);
    } else {
        if (std::isnan(args.b)) {
            throw DomainError("frac-int: --b is required for the upper integral");
        }
        value = rl_upper(spec, args.x, args.b, args.mu);
    }
    out << format_number(value) << '\n';
    return kExitHolds;
}

struct ConvexityArgs {
    std::string f, kind, target = "deriv", config;
    double q = 1.0;
    std::optional<double> lo, hi;
    int points = GridSpec{}.points_per_axis;
    int t_steps = GridSpec{}.t_steps;
};

int check_convexity(const ConvexityArgs& args, std::ostream& out, std::ostream& err) {
    const CorpusRegistry registry = load_registry(args.config, err);
    const FunctionSpec& spec = registry.get(args.f);
    const ConvexityKind kind = parse_convexity_kind(args.kind);
    if (!(args.q >= 1.0)) {
        throw DomainError("check-convexity: --q must be >= 1");
    }
    const Interval domain{args.lo.value_or(spec.domain.lo), args.hi.value_or(spec.domain.hi)};
    GridSpec grid;
    grid.points_per_axis = args.points;
    grid.t_steps = args.t_steps;
    const RealFn g = args.target == "f" ? spec.f : spec.abs_deriv_power(args.q);
    const MembershipResult result = check_membership(g, domain, kind, grid, spec.domain);
    if (result.passed()) {
        out << "pass\n";
        return kExitHolds;
    }
    const Counterexample& c = *result.counterexample;
    out << "counterexample x=" << format_number(c.x) << " y=" << format_number(c.y)
        << " t=" << format_number(c.t) << " lhs=" << format_number(c.lhs)
        << " rhs=" << format_number(c.rhs) << '\n';
    return kExitViolation;
}

struct VerifyArgs {
    std::string theorem, f, config;
    std::optional<double> a, b;
    double x = NAN, mu = 1.0, alpha = 1.0, m = 1.0, q = 1.0, u = 0.5;
    bool json = false;
};

int verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    const CorpusRegistry registry = load_registry(args.config, err);
    const FunctionSpec& spec = registry.get(args.f);
    const TheoremId id = parse_theorem_id(args.theorem);
    const double a = args.a.value_or(spec.domain.lo);
    const double b = args.b.value_or(spec.domain.hi);

    Verdict verdict;
    if (id == TheoremId::Classical) {
        verdict = verify_classical(spec, a, b, args.x);
    } else {
        BoundParams bp;
        bp.frac = {a, b, args.x, args.mu};
        bp.alpha = args.alpha;
        bp.m = args.m;
        bp.M = spec.M;
        bp.q = args.q;
        bp.u = args.u;
        bp.v = 1.0 - args.u;
        verdict = verify_theorem(id, spec, bp);
    }
    if (args.json) {
        write_verdict_json(out, verdict);
        out << '\n';
    } else {
        out << (verdict.holds ? "pass" : "fail") << ' ' << verdict.theorem_id << ' '
            << verdict.function_id << " lhs=" << format_number(verdict.lhs)
            << " rhs=" << format_number(verdict.rhs)
            << " margin=" << format_number(verdict.margin) << '\n';
    }
    return verdict.holds ? kExitHolds : kExitViolation;
}

struct SweepArgs {
    std::string config, out_path, format;
    std::optional<std::uint64_t> seed;
};

int sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    SweepConfig cfg = args.config.empty() ? SweepConfig{} : load_config(args.config);
    if (!args.out_path.empty()) {
        cfg.output = args.out_path;
    }
    if (!args.format.empty()) {
        cfg.format = args.format;
    }
    if (args.seed) {
        cfg.seed = *args.seed;
    }
    cfg.validate();

    std::vector<std::string> warnings;
    const CorpusRegistry registry = registry_for(cfg, &warnings);
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }
    const SweepReport report = run_sweep(cfg, registry);

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output, std::ios::binary);
        if (!file) {
            throw DomainError("cannot write '" + cfg.output + "'");
        }
    }
    std::ostream& sink = cfg.output.empty() ? out : file;
    if (cfg.format == "csv") {
        write_csv(sink, report);
    } else {
        write_json(sink, report);
    }
    std::int64_t failed = 0;
    for (const auto& s : report.summary) {
        failed += s.failed;
    }
    if (failed > 0) {
        err << "sweep: " << failed << " of " << report.verdicts.size() << " verdicts fail\n";
    }
    return report.all_hold() ? kExitHolds : kExitViolation;
}

int corpus_audit(const std::string& config_path, std::ostream& out, std::ostream& err) {
    const CorpusRegistry registry = load_registry(config_path, err);
    bool all_clean = true;
    for (const FunctionSpec& spec : registry.specs()) {
        const AuditReport report = audit(spec);
        if (report.passed()) {
            out << "ok   " << spec.id << " claims=" << spec.claims.size() << '\n';
            continue;
        }
        all_clean = false;
        for (const auto& v : report.violations) {
            out << "FAIL " << spec.id << ": " << v << '\n';
        }
    }
    return all_clean ? kExitHolds : kExitViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks of fractional Ostrowski-type inequalities", "ostrowski"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    FracIntArgs fi;
    auto* fi_cmd = app.add_subcommand("frac-int", "Print one Riemann-Liouville integral of a corpus function");
    fi_cmd->add_option("--f", fi.f, "Function id")->required();
    fi_cmd->add_option("--a", fi.a, "Left endpoint (lower integral)");
    fi_cmd->add_option("--b", fi.b, "Right endpoint (upper integral)");
    fi_cmd->add_option("--x", fi.x, "Evaluation point")->required();
    fi_cmd->add_option("--mu", fi.mu, "Order, > 0")->required();
    fi_cmd->add_option("--side", fi.side, "lower: int_a^x, upper: int_x^b")
        ->check(CLI::IsMember({"lower", "upper"}));
    fi_cmd->add_option("--config", fi.config, "Config file with extra specs");

    ConvexityArgs cc;
    auto* cc_cmd = app.add_subcommand("check-convexity", "Grid-check a convexity class");
    cc_cmd->add_option("--f", cc.f, "Function id")->required();
    cc_cmd->add_option("--kind", cc.kind, "convex | mconvex:M | amconvex:A:M | geom | mgeom:M | amgeom:A:M")
        ->required();
    cc_cmd->add_option("--q", cc.q, "Exponent applied to |f'|");
    cc_cmd->add_option("--target", cc.target, "deriv: |f'|^q, f: f itself")
        ->check(CLI::IsMember({"deriv", "f"}));
    cc_cmd->add_option("--lo", cc.lo, "Domain lower end (default: spec domain)");
    cc_cmd->add_option("--hi", cc.hi, "Domain upper end (default: spec domain)");
    cc_cmd->add_option("--points", cc.points, "Grid points per axis")->check(CLI::Range(2, 100000));
    cc_cmd->add_option("--tsteps", cc.t_steps, "Grid steps for t")->check(CLI::Range(1, 100000));
    cc_cmd->add_option("--config", cc.config, "Config file with extra specs");

    VerifyArgs vf;
    auto* vf_cmd = app.add_subcommand("verify", "Check one inequality at one parameter point");
    vf_cmd->add_option("--theorem", vf.theorem, "classical | t22 | t22_alpha1 | t24 | ...")->required();
    vf_cmd->add_option("--f", vf.f, "Function id")->required();
    vf_cmd->add_option("--a", vf.a, "Left endpoint (default: spec domain)");
    vf_cmd->add_option("--b", vf.b, "Right endpoint (default: spec domain)");
    vf_cmd->add_option("--x", vf.x, "Point in [a, b]")->required();
    vf_cmd->add_option("--mu", vf.mu, "Fractional order");
    vf_cmd->add_option("--alpha", vf.alpha, "alpha in (0, 1]");
    vf_cmd->add_option("--m", vf.m, "m in (0, 1]");
    vf_cmd->add_option("--q", vf.q, "Hoelder exponent, >= 1");
    vf_cmd->add_option("--u", vf.u, "Young split weight, v = 1 - u");
    vf_cmd->add_flag("--json", vf.json, "Print the verdict as JSON");
    vf_cmd->add_option("--config", vf.config, "Config file with extra specs");

    SweepArgs sw;
    auto* sw_cmd = app.add_subcommand("sweep", "Run a parameter sweep and write a report");
    sw_cmd->add_option("--config", sw.config, "Sweep config (default grid if omitted)");
    sw_cmd->add_option("--out", sw.out_path, "Report path (default: stdout)");
    sw_cmd->add_option("--format", sw.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sw_cmd->add_option("--seed", sw.seed, "Seed for random draws");

    std::string audit_config;
    auto* au_cmd = app.add_subcommand("corpus-audit", "Audit every registered function spec");
    au_cmd->add_option("--config", audit_config, "Config file with extra specs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitHolds;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    }

    try {
        if (*fi_cmd) {
            return frac_int(fi, out, err);
        }
        if (*cc_cmd) {
            return check_convexity(cc, out, err);
        }
        if (*vf_cmd) {
            return verify(vf, out, err);
        }
        if (*sw_cmd) {
            return sweep(sw, out, err);
        }
        return corpus_audit(audit_config, out, err);
    } catch (const std::exception& e) {
        // Domain, hypothesis and convergence failures all end the run with a diagnostic.
        err << "error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    }
}

}  // namespace ostrowski::cli
