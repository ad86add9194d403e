#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

#include "ostrowski/errors.hpp"
#include "ostrowski/sweep.hpp"

using namespace ostrowski;

namespace {

SweepConfig small_config() {
    return parse_config(R"(
        functions    = power_a, exp_b, unit_slope, const2
        theorems     = classical, t22, t24_alpha1, t26, set, mu1, mm, remark_q1
        x_fractions  = 0, 0.5, 1
        mu           = 0.5, 2
        alpha        = 0.5, 1
        m            = 0.5
        q            = 1, 2
        u            = 0.25
        random_draws = 10
        seed         = 3
    )");
}

std::string render(const SweepReport& r, const std::string& format) {
    std::ostringstream out;
    format == "csv" ? write_csv(out, r) : write_json(out, r);
    return out.str();
}

}  // namespace

TEST(Config, DefaultsAreValid) {
    const SweepConfig cfg = parse_config("");
    EXPECT_EQ(cfg.x_fractions.size(), 9u);
    EXPECT_EQ(cfg.theorems.size(), all_theorems().size());
    EXPECT_EQ(cfg.format, "json");
    EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, ParsesEveryKey) {
    const SweepConfig cfg = parse_config(R"(
        # comment line
        functions = power_a , exp_a   # trailing comment
        theorems = t22, mm
        x_fractions = 0.5
        mu = 1.5
        alpha = 0.25
        m = 0.75
        q = 3
        u = 0.4
        abs_tol = 1e-11
        rel_tol = 1e-10
        base_nodes = 20
        max_subdivisions = 22
        format = csv
        seed = 17
        random_draws = 4
        output = out.csv
        spec.extra.family = affine
        spec.extra.lo = 1
        spec.extra.hi = 2
        spec.extra.slope = 0.5
        spec.extra.claims = mgeom:0.5@2; geom
    )");
    EXPECT_EQ(cfg.function_ids, (std::vector<std::string>{"power_a", "exp_a"}));
    EXPECT_EQ(cfg.theorems, (std::vector<TheoremId>{TheoremId::T22, TheoremId::MM}));
    EXPECT_EQ(cfg.mus, std::vector<double>{1.5});
    EXPECT_EQ(cfg.us, std::vector<double>{0.4});
    EXPECT_EQ(cfg.quad.base_nodes, 20);
    EXPECT_EQ(cfg.quad.max_subdivisions, 22);
    EXPECT_DOUBLE_EQ(cfg.quad.abs_tol, 1e-11);
    EXPECT_EQ(cfg.seed, 17u);
    EXPECT_EQ(cfg.random_draws, 4);
    EXPECT_EQ(cfg.output, "out.csv");
    ASSERT_EQ(cfg.extra_specs.size(), 1u);
    const FunctionSpec spec = build_declared_spec(cfg.extra_specs.front());
    EXPECT_EQ(spec.id, "extra");
    ASSERT_EQ(spec.claims.size(), 2u);
    EXPECT_TRUE(spec.claims_cover(ConvexityKind::m_geom_convex(0.5), 2.0));
    EXPECT_TRUE(spec.claims_cover(ConvexityKind::geom_convex(), 1.0));
}

TEST(Config, RejectsMalformedInput) {
    for (const char* text : {"mu = 0.5, fast", "colour = blue", "no equals sign", "mu =",
                             "alpha = 1.5", "u = 1", "q = 0.5", "format = xml", "seed = -1",
                             "random_draws = -3", "theorems = t99", "x_fractions = 1.2",
                             "abs_tol = 0", "spec.x.family = affine", "spec..lo = 1",
                             "base_nodes = 3.5"}) {
        EXPECT_THROW(parse_config(text), DomainError) << text;
    }
}

TEST(Config, ErrorNamesTheLine) {
    try {
        parse_config("theorems = t22\nmu = 0.5, fast\n");
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(Config, FingerprintTracksContentNotOutput) {
    SweepConfig a = small_config();
    SweepConfig b = small_config();
    b.output = "somewhere.json";
    EXPECT_EQ(config_fingerprint(a), config_fingerprint(b));
    EXPECT_EQ(config_fingerprint(a).size(), 16u);
    b.seed = 4;
    EXPECT_NE(config_fingerprint(a), config_fingerprint(b));
    // canonical form parses back to the same fingerprint
    EXPECT_EQ(config_fingerprint(parse_config(canonical_config(a))), config_fingerprint(a));
}

TEST(Sweep, ParallelMatchesSerialByteForByte) {
    const SweepConfig cfg = small_config();
    const CorpusRegistry reg = registry_for(cfg);
    const SweepReport par = run_sweep(cfg, reg);
    const SweepReport ser = reference::run_sweep_serial(cfg, reg);
    EXPECT_EQ(render(par, "json"), render(ser, "json"));
    EXPECT_EQ(render(par, "csv"), render(ser, "csv"));
    EXPECT_EQ(render(par, "json"), render(run_sweep(cfg, reg), "json"));
}

TEST(Sweep, SummaryMatchesVerdicts) {
    const SweepConfig cfg = small_config();
    const SweepReport report = run_sweep(cfg, registry_for(cfg));
    ASSERT_FALSE(report.verdicts.empty());
    EXPECT_TRUE(report.all_hold());
    std::int64_t tallied = 0;
    for (const auto& s : report.summary) {
        std::int64_t passed = 0;
        for (const auto& v : report.verdicts) {
            passed += v.theorem_id == s.theorem_id && v.holds;
        }
        EXPECT_EQ(s.passed, passed) << s.theorem_id;
        EXPECT_EQ(s.failed, 0);
        tallied += s.passed;
    }
    EXPECT_EQ(tallied, static_cast<std::int64_t>(report.verdicts.size()));
    ASSERT_TRUE(report.mu1_audit.has_value());
    EXPECT_FALSE(report.mu1_audit->statement.empty());
}

TEST(Sweep, JsonLayout) {
    const SweepConfig cfg = small_config();
    const SweepReport report = run_sweep(cfg, registry_for(cfg));
    const auto doc = nlohmann::json::parse(render(report, "json"));
    EXPECT_EQ(doc["config_fingerprint"], config_fingerprint(cfg));
    EXPECT_EQ(doc["version"], kToolVersion);
    EXPECT_EQ(doc["summary"]["total"], report.verdicts.size());
    EXPECT_EQ(doc["verdicts"].size(), report.verdicts.size());
    for (const auto& v : doc["verdicts"]) {
        if (v["theorem_id"] == "t22") {
            EXPECT_TRUE(v["q"].is_null());
            EXPECT_TRUE(v["u"].is_null());
            EXPECT_TRUE(v["alpha"].is_number());
        }
        if (v["theorem_id"] == "mm") {
            EXPECT_TRUE(v["u"].is_number());
            EXPECT_DOUBLE_EQ(v["u"].get<double>() + v["v"].get<double>(), 1.0);
        }
        if (v["theorem_id"] == "classical") {
            EXPECT_TRUE(v["m"].is_null());
            EXPECT_EQ(v["mu"], 1.0);
        }
    }
}

TEST(Sweep, CsvLayout) {
    const SweepConfig cfg = small_config();
    const SweepReport report = run_sweep(cfg, registry_for(cfg));
    std::istringstream in(render(report, "csv"));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "theorem_id,function_id,a,b,x,mu,alpha,m,M,q,p,u,v,lhs,rhs,margin,holds,tol_margin");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 17);
    }
    EXPECT_EQ(rows, report.verdicts.size());
}

TEST(Sweep, SeventeenDigitNumbers) {
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(0.25), "0.25");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Sweep, SeedChangesOnlyRandomPart) {
    SweepConfig a = small_config();
    SweepConfig b = small_config();
    b.seed = 4;
    const CorpusRegistry reg = registry_for(a);
    const SweepReport ra = run_sweep(a, reg);
    const SweepReport rb = run_sweep(b, reg);
    EXPECT_NE(render(ra, "csv"), render(rb, "csv"));
    a.random_draws = 0;
    b.random_draws = 0;
    EXPECT_EQ(render(run_sweep(a, reg), "csv"), render(run_sweep(b, reg), "csv"));
}

TEST(Sweep, UnderstatedBoundIsCaught) {
    const SweepConfig cfg = parse_config(R"(
        functions = understated
        theorems = classical, t26
        spec.understated.family = affine
        spec.understated.lo = 1
        spec.understated.hi = 3
        spec.understated.slope = 0.9
        spec.understated.M = 0.2
        spec.understated.claims = all
    )");
    std::vector<std::string> warnings;
    const CorpusRegistry reg = registry_for(cfg, &warnings);
    EXPECT_FALSE(warnings.empty());
    const SweepReport report = run_sweep(cfg, reg);
    EXPECT_FALSE(report.all_hold());
}

TEST(Sweep, UnknownFunctionIsAnError) {
    SweepConfig cfg;
    cfg.function_ids = {"nope"};
    EXPECT_THROW(run_sweep(cfg, CorpusRegistry{}), DomainError);
}
