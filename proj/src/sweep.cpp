#include "ostrowski/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <tuple>

#include "ostrowski/errors.hpp"

namespace ostrowski {

// ---------------------------------------------------------------------------
// config

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(trim(item));
    }
    return parts;
}

double parse_double(const std::string& text, const std::string& context) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size() && std::isfinite(v)) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw DomainError(context + ": '" + text + "' is not a finite number");
}

long long parse_integer(const std::string& text, const std::string& context) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw DomainError(context + ": '" + text + "' is not an integer");
}

std::vector<double> parse_list(const std::string& text, const std::string& context) {
    std::vector<double> values;
    for (const std::string& part : split(text, ',')) {
        if (part.empty()) {
            throw DomainError(context + ": empty list entry");
        }
        values.push_back(parse_double(part, context));
    }
    return values;
}

void check_all(const std::vector<double>& values, const char* name, bool (*ok)(double)) {
    if (values.empty()) {
        throw DomainError(std::string("sweep config: grid '") + name + "' is empty");
    }
    for (double v : values) {
        if (!ok(v)) {
            throw DomainError(std::string("sweep config: value ") + format_number(v) +
                              " out of range in '" + name + "'");
        }
    }
}

std::vector<Claim> parse_claims(const std::string& text, const std::string& id) {
    std::vector<Claim> claims;
    for (const std::string& entry : split(text, ';')) {
        if (entry.empty()) {
            continue;
        }
        const auto at = entry.find('@');
        Claim claim;
        claim.kind = parse_convexity_kind(trim(entry.substr(0, at)));
        if (at != std::string::npos) {
            claim.q = parse_double(trim(entry.substr(at + 1)), "spec." + id + ".claims");
        }
        if (!(claim.q >= 1.0)) {
            throw DomainError("spec." + id + ".claims: q must be >= 1");
        }
        claims.push_back(claim);
    }
    return claims;
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

FunctionSpec build_declared_spec(const SpecDecl& decl) {
    FunctionSpec spec = make_family_member(decl.id, decl.family, decl.params, decl.domain);
    if (decl.claims == "none" || decl.claims.empty()) {
        spec.claims.clear();
    } else if (decl.claims == "all") {
        spec.claims = all_claims();
    } else if (decl.claims == "derive") {
        spec.claims = derive_claims(spec);
    } else {
        spec.claims = parse_claims(decl.claims, decl.id);
    }
    return spec;
}

void SweepConfig::validate() const {
    check_all(x_fractions, "x_fractions", [](double v) { return v >= 0.0 && v <= 1.0; });
    check_all(mus, "mu", [](double v) { return v > 0.0; });
    check_all(alphas, "alpha", [](double v) { return v > 0.0 && v <= 1.0; });
    check_all(ms, "m", [](double v) { return v > 0.0 && v <= 1.0; });
    check_all(qs, "q", [](double v) { return v >= 1.0; });
    check_all(us, "u", [](double v) { return v > 0.0 && v < 1.0; });
    if (theorems.empty()) {
        throw DomainError("sweep config: no theorems selected");
    }
    if (format != "json" && format != "csv") {
        throw DomainError("sweep config: format must be json or csv");
    }
    if (random_draws < 0) {
        throw DomainError("sweep config: random_draws must be >= 0");
    }
    quad.validate();
    for (std::size_t i = 0; i < extra_specs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (extra_specs[i].id == extra_specs[j].id) {
                throw DomainError("sweep config: spec '" + extra_specs[i].id + "' declared twice");
            }
        }
        if (extra_specs[i].family.empty()) {
            throw DomainError("sweep config: spec '" + extra_specs[i].id + "' has no family");
        }
    }
}

SweepConfig parse_config(const std::string& text) {
    SweepConfig cfg;
    std::map<std::string, SpecDecl> specs;
    std::vector<std::string> spec_order;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        const std::string where = "config line " + std::to_string(line_no);
        if (eq == std::string::npos) {
            throw DomainError(where + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string ctx = where + " (" + key + ")";

        if (key == "functions") {
            cfg.function_ids.clear();
            for (const auto& id : split(value, ',')) {
                if (id.empty()) {
                    throw DomainError(ctx + ": empty function id");
                }
                cfg.function_ids.push_back(id);
            }
        } else if (key == "theorems") {
            cfg.theorems.clear();
            for (const auto& id : split(value, ',')) {
                cfg.theorems.push_back(parse_theorem_id(id));
            }
        } else if (key == "x_fractions") {
            cfg.x_fractions = parse_list(value, ctx);
        } else if (key == "mu") {
            cfg.mus = parse_list(value, ctx);
        } else if (key == "alpha") {
            cfg.alphas = parse_list(value, ctx);
        } else if (key == "m") {
            cfg.ms = parse_list(value, ctx);
        } else if (key == "q") {
            cfg.qs = parse_list(value, ctx);
        } else if (key == "u") {
            cfg.us = parse_list(value, ctx);
        } else if (key == "abs_tol") {
            cfg.quad.abs_tol = parse_double(value, ctx);
        } else if (key == "rel_tol") {
            cfg.quad.rel_tol = parse_double(value, ctx);
        } else if (key == "base_nodes") {
            cfg.quad.base_nodes = static_cast<int>(parse_integer(value, ctx));
        } else if (key == "max_subdivisions") {
            cfg.quad.max_subdivisions = static_cast<int>(parse_integer(value, ctx));
        } else if (key == "format") {
            cfg.format = value;
        } else if (key == "seed") {
            const long long seed = parse_integer(value, ctx);
            if (seed < 0) {
                throw DomainError(ctx + ": seed must be >= 0");
            }
            cfg.seed = static_cast<std::uint64_t>(seed);
        } else if (key == "random_draws") {
            cfg.random_draws = static_cast<int>(parse_integer(value, ctx));
        } else if (key == "output") {
            cfg.output = value;
        } else if (key.rfind("spec.", 0) == 0) {
            const auto dot = key.find('.', 5);
            if (dot == std::string::npos || dot == 5 || dot + 1 == key.size()) {
                throw DomainError(ctx + ": expected spec.<id>.<field>");
            }
            const std::string id = key.substr(5, dot - 5);
            const std::string field = key.substr(dot + 1);
            if (!specs.count(id)) {
                spec_order.push_back(id);
                specs[id].id = id;
                specs[id].domain = {std::numeric_limits<double>::quiet_NaN(),
                                    std::numeric_limits<double>::quiet_NaN()};
            }
            SpecDecl& decl = specs[id];
            if (field == "family") {
                decl.family = value;
            } else if (field == "lo") {
                decl.domain.lo = parse_double(value, ctx);
            } else if (field == "hi") {
                decl.domain.hi = parse_double(value, ctx);
            } else if (field == "claims") {
                decl.claims = value;
            } else {
                decl.params[field] = parse_double(value, ctx);
            }
        } else {
            throw DomainError(ctx + ": unknown key");
        }
    }
    for (const auto& id : spec_order) {
        const SpecDecl& decl = specs[id];
        if (std::isnan(decl.domain.lo) || std::isnan(decl.domain.hi)) {
            throw DomainError("config: spec '" + id + "' needs lo and hi");
        }
        cfg.extra_specs.push_back(decl);
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot read config file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string canonical_config(const SweepConfig& cfg) {
    std::ostringstream out;
    auto list = [&](const char* key, const std::vector<double>& values) {
        out << key << '=';
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << (i ? "," : "") << format_number(values[i]);
        }
        out << '\n';
    };
    out << "functions=";
    for (std::size_t i = 0; i < cfg.function_ids.size(); ++i) {
        out << (i ? "," : "") << cfg.function_ids[i];
    }
    out << "\ntheorems=";
    for (std::size_t i = 0; i < cfg.theorems.size(); ++i) {
        out << (i ? "," : "") << to_string(cfg.theorems[i]);
    }
    out << '\n';
    list("x_fractions", cfg.x_fractions);
    list("mu", cfg.mus);
    list("alpha", cfg.alphas);
    list("m", cfg.ms);
    list("q", cfg.qs);
    list("u", cfg.us);
    out << "abs_tol=" << format_number(cfg.quad.abs_tol) << '\n'
        << "rel_tol=" << format_number(cfg.quad.rel_tol) << '\n'
        << "base_nodes=" << cfg.quad.base_nodes << '\n'
        << "max_subdivisions=" << cfg.quad.max_subdivisions << '\n'
        << "format=" << cfg.format << '\n'
        << "seed=" << cfg.seed << '\n'
        << "random_draws=" << cfg.random_draws << '\n';
    for (const SpecDecl& decl : cfg.extra_specs) {
        out << "spec." << decl.id << ".family=" << decl.family << '\n'
            << "spec." << decl.id << ".lo=" << format_number(decl.domain.lo) << '\n'
            << "spec." << decl.id << ".hi=" << format_number(decl.domain.hi) << '\n'
            << "spec." << decl.id << ".claims=" << decl.claims << '\n';
        for (const auto& [name, value] : decl.params) {
            out << "spec." << decl.id << '.' << name << '=' << format_number(value) << '\n';
        }
    }
    return out.str();
}

std::string config_fingerprint(const SweepConfig& cfg) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : canonical_config(cfg)) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

CorpusRegistry registry_for(const SweepConfig& cfg, std::vector<std::string>* audit_warnings) {
    CorpusRegistry registry;
    for (const SpecDecl& decl : cfg.extra_specs) {
        FunctionSpec spec = build_declared_spec(decl);
        const AuditReport report = audit(spec);
        if (audit_warnings) {
            for (const auto& v : report.violations) {
                audit_warnings->push_back("spec '" + spec.id + "' fails audit: " + v);
            }
        }
        registry.add(std::move(spec));
    }
    return registry;
}

// ---------------------------------------------------------------------------
// planning

bool SweepReport::all_hold() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

namespace detail {

namespace {

// Uniform in [0, 1) from the top 53 bits; mt19937_64 output is fully specified.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SweepPlan plan_sweep(const SweepConfig& cfg, const CorpusRegistry& registry) {
    cfg.validate();
    SweepPlan plan;
    if (cfg.function_ids.empty()) {
        for (const FunctionSpec& spec : registry.specs()) {
            plan.functions.push_back(&spec);
        }
    } else {
        for (const std::string& id : cfg.function_ids) {
            plan.functions.push_back(&registry.get(id));
        }
    }
    for (TheoremId id : cfg.theorems) {
        plan.summary.push_back({to_string(id), 0, 0, 0, 0.0});
    }

    std::map<std::tuple<std::size_t, double, double, bool>, std::size_t> key_index;
    std::mt19937_64 rng(cfg.seed);

    for (std::size_t fi = 0; fi < plan.functions.size(); ++fi) {
        const FunctionSpec& spec = *plan.functions[fi];
        const double a = spec.domain.lo;
        const double b = spec.domain.hi;
        for (std::size_t ti = 0; ti < cfg.theorems.size(); ++ti) {
            const TheoremId theorem = cfg.theorems[ti];
            const TheoremTraits tr = traits(theorem);
            const bool classical = theorem == TheoremId::Classical;

            auto consider = [&](double frac_x, double mu, double alpha, double m, double q,
                                double u) {
                BoundParams bp;
                bp.frac = {a, b, frac_x == 1.0 ? b : a + frac_x * (b - a), mu};
                bp.alpha = alpha;
                bp.m = m;
                bp.M = spec.M;
                bp.q = q;
                bp.u = u;
                bp.v = 1.0 - u;
                if (!hypothesis_failures(theorem, spec, bp).empty()) {
                    ++plan.summary[ti].skipped;
                    return;
                }
                const auto key = std::make_tuple(fi, bp.frac.x, bp.frac.mu, classical);
                auto [it, inserted] = key_index.emplace(key, plan.lhs_keys.size());
                if (inserted) {
                    plan.lhs_keys.push_back({fi, bp.frac.x, bp.frac.mu, classical});
                }
                plan.tasks.push_back({theorem, fi, bp, it->second});
            };

            const std::vector<double> one{1.0};
            const std::vector<double> half{0.5};
            const auto& mus = tr.fixed_mu_one ? one : cfg.mus;
            const auto& alphas = tr.uses_alpha ? cfg.alphas : one;
            const auto& ms = tr.uses_m ? cfg.ms : one;
            const auto& qs = tr.fixed_q_one ? one : (tr.uses_q ? cfg.qs : one);
            const auto& us = tr.uses_split ? cfg.us : half;
            for (double fx : cfg.x_fractions) {
                for (double mu : mus) {
                    for (double alpha : alphas) {
                        for (double m : ms) {
                            for (double q : qs) {
                                for (double u : us) {
                                    consider(fx, mu, alpha, m, q, u);
                                }
                            }
                        }
                    }
                }
            }

            // Seeded draws: continuous x and mu, grid-valued alpha, m, q (claims live on the grid).
            for (int r = 0; r < cfg.random_draws; ++r) {
                const double fx = uniform01(rng);
                const double mu = 0.1 + 3.9 * uniform01(rng);
                auto pick = [&](const std::vector<double>& values) {
                    const auto idx = static_cast<std::size_t>(uniform01(rng) * values.size());
                    return values[std::min(idx, values.size() - 1)];
                };
                const double alpha = pick(cfg.alphas);
                const double m = pick(cfg.ms);
                const double q = pick(cfg.qs);
                const double u = 0.05 + 0.9 * uniform01(rng);
                consider(fx, tr.fixed_mu_one ? 1.0 : mu,
                         tr.fixed_alpha_one || !tr.uses_alpha ? 1.0 : alpha, tr.uses_m ? m : 1.0,
                         tr.uses_q && !tr.fixed_q_one ? q : 1.0, tr.uses_split ? u : 0.5);
            }
        }
    }
    return plan;
}

double compute_lhs(const SweepPlan& plan, const LhsKey& key, const QuadConfig& quad) {
    const FunctionSpec& spec = *plan.functions[key.function_index];
    const double a = spec.domain.lo;
    const double b = spec.domain.hi;
    if (key.classical) {
        return classical_lhs(spec, a, b, key.x, quad);
    }
    return ostrowski_lhs(spec, {a, b, key.x, key.mu}, quad);
}

SweepReport assemble_report(const SweepConfig& cfg, const SweepPlan& plan,
                            std::vector<Verdict> verdicts) {
    SweepReport report;
    report.config_fingerprint = config_fingerprint(cfg);
    report.summary = plan.summary;
    std::vector<BoundParams> mu1_params;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const Verdict& v = verdicts[i];
        for (TheoremSummary& s : report.summary) {
            if (s.theorem_id != v.theorem_id) {
                continue;
            }
            if (s.passed + s.failed == 0 || v.margin < s.worst_margin) {
                s.worst_margin = v.margin;
            }
            (v.holds ? s.passed : s.failed) += 1;
        }
        if (plan.tasks[i].theorem == TheoremId::Mu1) {
            mu1_params.push_back(v.params);
        }
    }
    for (TheoremSummary& s : report.summary) {
        if (s.passed + s.failed == 0) {
            s.worst_margin = std::numeric_limits<double>::quiet_NaN();
        }
    }
    if (!mu1_params.empty()) {
        report.mu1_audit = audit_mu1(mu1_params);
    }
    report.verdicts = std::move(verdicts);
    return report;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// execution

SweepReport run_sweep(const SweepConfig& cfg, const CorpusRegistry& registry) {
    const detail::SweepPlan plan = detail::plan_sweep(cfg, registry);

    const auto n_keys = static_cast<std::int64_t>(plan.lhs_keys.size());
    std::vector<double> lhs(plan.lhs_keys.size());
    std::vector<std::exception_ptr> key_errors(plan.lhs_keys.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < n_keys; ++k) {
        const auto i = static_cast<std::size_t>(k);
        try {
            lhs[i] = detail::compute_lhs(plan, plan.lhs_keys[i], cfg.quad);
        } catch (...) {
            key_errors[i] = std::current_exception();
        }
    }
    for (const auto& err : key_errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }

    const auto n_tasks = static_cast<std::int64_t>(plan.tasks.size());
    std::vector<Verdict> verdicts(plan.tasks.size());
    std::vector<std::exception_ptr> task_errors(plan.tasks.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t k = 0; k < n_tasks; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const detail::SweepTask& task = plan.tasks[i];
        try {
            verdicts[i] = make_verdict(task.theorem, *plan.functions[task.function_index],
                                       task.params, lhs[task.lhs_key], cfg.quad);
        } catch (...) {
            task_errors[i] = std::current_exception();
        }
    }
    for (const auto& err : task_errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
    return detail::assemble_report(cfg, plan, std::move(verdicts));
}

// ---------------------------------------------------------------------------
// writers

namespace {

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

struct FlatParams {
    double a, b, x, mu, alpha, m, M, q, p, u, v;
};

// Parameters a theorem does not read are NaN (reported as null / empty).
FlatParams flatten(const Verdict& v) {
    const TheoremTraits tr = traits(parse_theorem_id(v.theorem_id));
    const double na = std::numeric_limits<double>::quiet_NaN();
    const BoundParams& bp = v.params;
    const bool show_q = tr.uses_q || tr.fixed_q_one;
    return {bp.frac.a,
            bp.frac.b,
            bp.frac.x,
            bp.frac.mu,
            tr.uses_alpha || tr.fixed_alpha_one ? bp.alpha : na,
            tr.uses_m ? bp.m : na,
            bp.M,
            show_q ? bp.q : na,
            show_q ? bp.p() : na,
            tr.uses_split ? bp.u : na,
            tr.uses_split ? bp.v : na};
}

std::string csv_number(double v) {
    if (std::isnan(v)) {
        return "";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return format_number(v);
}

}  // namespace

void write_verdict_json(std::ostream& out, const Verdict& v) {
    const FlatParams p = flatten(v);
    out << "{\"theorem_id\": " << json_string(v.theorem_id)
        << ", \"function_id\": " << json_string(v.function_id) << ", \"a\": " << json_number(p.a)
        << ", \"b\": " << json_number(p.b) << ", \"x\": " << json_number(p.x)
        << ", \"mu\": " << json_number(p.mu) << ", \"alpha\": " << json_number(p.alpha)
        << ", \"m\": " << json_number(p.m) << ", \"M\": " << json_number(p.M)
        << ", \"q\": " << json_number(p.q) << ", \"p\": " << json_number(p.p)
        << ", \"u\": " << json_number(p.u) << ", \"v\": " << json_number(p.v)
        << ", \"lhs\": " << json_number(v.lhs) << ", \"rhs\": " << json_number(v.rhs)
        << ", \"margin\": " << json_number(v.margin)
        << ", \"holds\": " << (v.holds ? "true" : "false")
        << ", \"tol_margin\": " << json_number(v.tol_margin) << "}";
}

void write_json(std::ostream& out, const SweepReport& report) {
    out << "{\n";
    out << "  \"config_fingerprint\": " << json_string(report.config_fingerprint) << ",\n";
    out << "  \"version\": " << json_string(report.version) << ",\n";
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::int64_t skipped = 0;
    for (const auto& s : report.summary) {
        passed += s.passed;
        failed += s.failed;
        skipped += s.skipped;
    }
    out << "  \"summary\": {\n";
    out << "    \"total\": " << report.verdicts.size() << ",\n";
    out << "    \"passed\": " << passed << ",\n";
    out << "    \"failed\": " << failed << ",\n";
    out << "    \"skipped\": " << skipped << ",\n";
    out << "    \"all_hold\": " << (report.all_hold() ? "true" : "false") << ",\n";
    out << "    \"theorems\": [";
    for (std::size_t i = 0; i < report.summary.size(); ++i) {
        const auto& s = report.summary[i];
        out << (i ? "," : "") << "\n      {\"theorem_id\": " << json_string(s.theorem_id)
            << ", \"passed\": " << s.passed << ", \"failed\": " << s.failed
            << ", \"skipped\": " << s.skipped
            << ", \"worst_margin\": " << json_number(s.worst_margin) << "}";
    }
    out << "\n    ]";
    if (report.mu1_audit) {
        const Mu1Audit& a = *report.mu1_audit;
        out << ",\n    \"mu1_audit\": {\"draws\": " << a.draws
            << ", \"agree\": " << (a.agree ? "true" : "false")
            << ", \"max_abs_difference\": " << json_number(a.max_abs_difference)
            << ", \"max_rel_difference\": " << json_number(a.max_rel_difference)
            << ", \"min_difference\": " << json_number(a.min_difference)
            << ", \"statement\": " << json_string(a.statement) << "}";
    }
    out << "\n  },\n";
    out << "  \"verdicts\": [";
    for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
        out << (i ? "," : "") << "\n    ";
        write_verdict_json(out, report.verdicts[i]);
    }
    out << "\n  ]\n}\n";
}

void write_csv(std::ostream& out, const SweepReport& report) {
    out << "theorem_id,function_id,a,b,x,mu,alpha,m,M,q,p,u,v,lhs,rhs,margin,holds,tol_margin\n";
    for (const Verdict& v : report.verdicts) {
        const FlatParams p = flatten(v);
        out << v.theorem_id << ',' << v.function_id;
        for (double value : {p.a, p.b, p.x, p.mu, p.alpha, p.m, p.M, p.q, p.p, p.u, p.v, v.lhs,
                             v.rhs, v.margin}) {
            out << ',' << csv_number(value);
        }
        out << ',' << (v.holds ? "true" : "false") << ',' << csv_number(v.tol_margin) << '\n';
    }
}

}  // namespace ostrowski
