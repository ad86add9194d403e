#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ostrowski/bounds.hpp"
#include "ostrowski/corpus.hpp"
#include "ostrowski/verify.hpp"

namespace ostrowski {

inline constexpr const char* kToolVersion = "ostrowski-verify 0.1.0";

/// A function registered from a config file: a named member of a builtin family.
struct SpecDecl {
    std::string id;
    std::string family;
    Interval domain;
    std::map<std::string, double> params;
    /// "none", "all", "derive", or a ';'-separated list of kind@q entries.
    std::string claims = "none";
};

/// Builds and returns the spec; claims are parsed or derived, not audited here.
FunctionSpec build_declared_spec(const SpecDecl& decl);

struct SweepConfig {
    std::vector<std::string> function_ids;  ///< empty: every registered function
    std::vector<TheoremId> theorems = all_theorems();
    std::vector<double> x_fractions{0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0};
    std::vector<double> mus{0.5, 1.0, 1.5, 2.5};
    std::vector<double> alphas{0.25, 0.5, 0.75, 1.0};
    std::vector<double> ms{0.25, 0.5, 0.75};
    std::vector<double> qs{1.0, 1.5, 2.0, 3.0};
    std::vector<double> us{0.25, 0.5, 0.75};
    QuadConfig quad;
    std::string format = "json";  ///< json | csv
    std::uint64_t seed = 20240601;
    int random_draws = 0;  ///< extra seeded draws per (function, theorem)
    std::string output;    ///< empty: standard output
    std::vector<SpecDecl> extra_specs;

    /// Throws DomainError on empty grids or out-of-range values.
    void validate() const;
};

/// Parses the flat `key = value` config format ('#' starts a comment).
/// Throws DomainError with the offending line on malformed input.
SweepConfig parse_config(const std::string& text);
SweepConfig load_config(const std::string& path);

/// Canonical text of everything that determines the report (output path excluded).
std::string canonical_config(const SweepConfig& cfg);

/// FNV-1a 64 of canonical_config, as 16 hex digits.
std::string config_fingerprint(const SweepConfig& cfg);

struct TheoremSummary {
    std::string theorem_id;
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::int64_t skipped = 0;  ///< grid points whose hypotheses the function does not meet
    double worst_margin = 0.0;
};

struct SweepReport {
    std::string config_fingerprint;
    std::string version = kToolVersion;
    std::vector<Verdict> verdicts;
    std::vector<TheoremSummary> summary;
    std::optional<Mu1Audit> mu1_audit;

    bool all_hold() const;
};

/// Registry holding the builtin corpus plus the config's declared specs.
/// Audit failures of declared specs are returned as messages, not thrown.
CorpusRegistry registry_for(const SweepConfig& cfg, std::vector<std::string>* audit_warnings = nullptr);

/// Runs the sweep; left-hand sides and verdicts are computed in parallel, the
/// verdict order is the deterministic enumeration order.
SweepReport run_sweep(const SweepConfig& cfg, const CorpusRegistry& registry);

void write_json(std::ostream& out, const SweepReport& report);
void write_csv(std::ostream& out, const SweepReport& report);

/// One verdict as a single-line JSON object, same field layout as the report.
void write_verdict_json(std::ostream& out, const Verdict& verdict);

/// Formats a double with 17 significant digits.
std::string format_number(double v);

namespace reference {

/// Single-threaded sweep; must produce the same report as run_sweep.
SweepReport run_sweep_serial(const SweepConfig& cfg, const CorpusRegistry& registry);

}  // namespace reference

namespace detail {

/// One planned verdict; lhs_key indexes the unique left-hand sides.
struct SweepTask {
    TheoremId theorem;
    std::size_t function_index;
    BoundParams params;
    std::size_t lhs_key;
};

struct LhsKey {
    std::size_t function_index;
    double x;
    double mu;
    bool classical;
};

struct SweepPlan {
    std::vector<const FunctionSpec*> functions;
    std::vector<SweepTask> tasks;
    std::vector<LhsKey> lhs_keys;
    std::vector<TheoremSummary> summary;  ///< skipped counts filled in
};

SweepPlan plan_sweep(const SweepConfig& cfg, const CorpusRegistry& registry);

double compute_lhs(const SweepPlan& plan, const LhsKey& key, const QuadConfig& quad);

SweepReport assemble_report(const SweepConfig& cfg, const SweepPlan& plan,
                            std::vector<Verdict> verdicts);

}  // namespace detail

}  // namespace ostrowski
