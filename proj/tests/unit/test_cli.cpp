#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "ostrowski/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"ostrowski"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) {
        argv.push_back(s.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = ostrowski::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string kFixtures = OSTROWSKI_FIXTURE_DIR;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST(Cli, FracIntPrintsOneValue) {
    const Outcome r = run({"frac-int", "--f", "const1", "--a", "0", "--x", "1", "--mu", "0.5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NEAR(std::stod(r.out), 1.1283791670955126, 1e-15);
    const Outcome up = run({"frac-int", "--f", "const1", "--side", "upper", "--x", "1", "--b", "2", "--mu", "1"});
    EXPECT_EQ(up.code, 0);
    EXPECT_NEAR(std::stod(up.out), 1.0, 1e-15);
}

TEST(Cli, VerifyExample) {
    const Outcome r = run({"verify", "--theorem", "classical", "--f", "linear", "--a", "0", "--b", "1", "--x", "0.5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("pass classical linear", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("rhs=0.25"), std::string::npos);
}

TEST(Cli, VerifyJson) {
    const Outcome r = run({"verify", "--theorem", "t22", "--f", "power_a", "--x", "1", "--mu", "0.5",
                           "--alpha", "0.5", "--m", "0.5", "--json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"theorem_id\": \"t22\""), std::string::npos);
    EXPECT_NE(r.out.find("\"holds\": true"), std::string::npos);
}

TEST(Cli, VerifyHypothesisMismatchIsUsageError) {
    const Outcome r = run({"verify", "--theorem", "t22", "--f", "linear", "--x", "1", "--alpha", "0.5", "--m", "0.5"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("hypotheses"), std::string::npos);
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, VerifyViolationExitsOne) {
    const Outcome r = run({"verify", "--theorem", "classical", "--f", "understated", "--x", "1",
                           "--config", kFixtures + "/violation.cfg"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("fail", 0), 0u);
}

TEST(Cli, CheckConvexity) {
    const Outcome pass = run({"check-convexity", "--f", "power_b", "--kind", "geom"});
    EXPECT_EQ(pass.code, 0);
    EXPECT_EQ(pass.out, "pass\n");
    const Outcome fail = run({"check-convexity", "--f", "exp_b", "--kind", "geom"});
    EXPECT_EQ(fail.code, 1);
    EXPECT_EQ(fail.out.rfind("counterexample x=", 0), 0u);
    const Outcome bad = run({"check-convexity", "--f", "exp_b", "--kind", "wobbly"});
    EXPECT_EQ(bad.code, 2);
}

TEST(Cli, SweepExitCodesAndDeterminism) {
    const std::string cfg = kFixtures + "/small.cfg";
    const std::string p1 = testing::TempDir() + "cli_sweep_1.json";
    const std::string p2 = testing::TempDir() + "cli_sweep_2.json";
    EXPECT_EQ(run({"sweep", "--config", cfg, "--out", p1}).code, 0);
    EXPECT_EQ(run({"sweep", "--config", cfg, "--out", p2}).code, 0);
    const std::string a = slurp(p1);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());

    const Outcome csv = run({"sweep", "--config", cfg, "--format", "csv"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.rfind("theorem_id,function_id,", 0), 0u);

    const Outcome violation = run({"sweep", "--config", kFixtures + "/violation.cfg"});
    EXPECT_EQ(violation.code, 1);
    EXPECT_NE(violation.err.find("fails audit"), std::string::npos);

    const Outcome malformed = run({"sweep", "--config", kFixtures + "/malformed.cfg"});
    EXPECT_EQ(malformed.code, 2);
    EXPECT_NE(malformed.err.find("line 2"), std::string::npos);

    EXPECT_EQ(run({"sweep", "--config", kFixtures + "/does-not-exist.cfg"}).code, 2);
}

TEST(Cli, CorpusAudit) {
    const Outcome clean = run({"corpus-audit"});
    EXPECT_EQ(clean.code, 0);
    EXPECT_NE(clean.out.find("ok   power_a"), std::string::npos);
    const Outcome dirty = run({"corpus-audit", "--config", kFixtures + "/violation.cfg"});
    EXPECT_EQ(dirty.code, 1);
    EXPECT_NE(dirty.out.find("FAIL understated"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"frac-int", "--f", "const1"}).code, 2);
    EXPECT_EQ(run({"frac-int", "--f", "const1", "--a", "0", "--x", "one", "--mu", "1"}).code, 2);
    EXPECT_EQ(run({"frac-int", "--f", "const1", "--a", "0", "--x", "1", "--mu", "-1"}).code, 2);
    EXPECT_EQ(run({"verify", "--theorem", "nope", "--f", "linear", "--x", "1"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
