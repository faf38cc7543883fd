#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mcone/config.hpp"
#include "mcone/errors.hpp"
#include "mcone/serialize.hpp"
#include "mcone/svg.hpp"
#include "support.hpp"

namespace mcone {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string command = std::string(MCONE_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string config(const std::string& name) { return std::string(MCONE_CONFIG_DIR) + "/" + name; }

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("mcone_io_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

Json parse(const std::string& text) { return Json::parse(text); }

TEST(Config, ParsesEveryShippedConfiguration) {
    for (const auto& entry : fs::directory_iterator(MCONE_CONFIG_DIR)) {
        if (entry.path().extension() != ".json") continue;
        EXPECT_NO_THROW(load_config(entry.path().string())) << entry.path();
    }
}

TEST(Config, RejectsUnknownKeysAtEveryLevel) {
    const Json base = Json::parse(R"({"source": "A2", "target": "G2", "embedding": {"kind": "matrix", "matrix": [[1,1],[0,1]]}})");
    EXPECT_NO_THROW(parse_config(base));
    Json top = base;
    top["colour"] = "red";
    EXPECT_THROW(parse_config(top), ConfigError);
    Json nested = base;
    nested["embedding"]["shape"] = 1;
    EXPECT_THROW(parse_config(nested), ConfigError);
    Json bounds = base;
    bounds["bounds"] = {{"budget", 4}};
    EXPECT_THROW(parse_config(bounds), ConfigError);
}

TEST(Config, ValidatesShapesAndModes) {
    const auto bad = [](const char* text) { return parse_config(Json::parse(text)); };
    EXPECT_THROW(bad(R"({"source": "A2", "target": "G2", "embedding": {"kind": "matrix", "matrix": [[1,1]]}})"), ConfigError);
    EXPECT_THROW(bad(R"({"source": "A2", "embedding": {"kind": "diagonal"}, "mode": "polytope"})"), ConfigError);
    EXPECT_THROW(bad(R"({"source": "A2", "embedding": {"kind": "diagonal"}, "lambda": [1, 2]})"), ConfigError);
    EXPECT_THROW(bad(R"({"source": "A2", "embedding": {"kind": "diagonal"}, "mode": "upside-down"})"), ConfigError);
    EXPECT_THROW(bad(R"({"source": "A2", "target": "A2", "embedding": {"kind": "diagonal"}})"), ConfigError);
    EXPECT_THROW(bad(R"({"source": "Z2", "embedding": {"kind": "identity"}})"), ConfigError);
    EXPECT_THROW(bad(R"({"source": "A2", "embedding": {"kind": "teleport"}})"), ConfigError);
    const ProblemConfig c =
        bad(R"({"source": {"cartan": [[2,-1],[-3,2]], "label": "g2"}, "embedding": {"kind": "diagonal", "copies": 3},
               "lambda": ["1/2", [3, 2], 0, 0, 1, 1], "bounds": {"scan_n": 4}})");
    EXPECT_EQ(c.emb().target().rank(), 6);
    EXPECT_EQ((*c.lambda)[1], Rational(3, 2));
    EXPECT_EQ(c.bounds.scan_n, 4);
}

TEST(Config, WeightLists) {
    EXPECT_EQ(parse_weight_list("1, 0,3/2"), (QVec{1, 0, Rational(3, 2)}));
    EXPECT_THROW(parse_weight_list(""), ConfigError);
    EXPECT_THROW(parse_weight_list("1,,2"), ConfigError);
}

TEST(Serialize, RationalsAreReducedPairs) {
    EXPECT_EQ(rational_json(Rational(-4) / 6), Json::array({-2, 3}));
    EXPECT_EQ(rational_json(Rational(5)), Json::array({5, 1}));
    EXPECT_EQ(rational_from_json(Json(3)), 3);
    EXPECT_EQ(rational_from_json(Json::array({2, 4})), Rational(1, 2));
    EXPECT_EQ(rational_from_json(Json("-3/9")), Rational(-1, 3));
    EXPECT_THROW(rational_from_json(Json::array({1, 0})), ConfigError);
    EXPECT_THROW(rational_from_json(Json(true)), ConfigError);
    EXPECT_THROW(rational_from_json(Json::array({1, 2, 3})), ConfigError);
    EXPECT_EQ(integer_json(BigInt("123456789012345678901234567890")), Json("123456789012345678901234567890"));
}

TEST(Serialize, SystemsRoundTripCoefficients) {
    InequalitySystem s({"x", "y"});
    s.add({1, -2}, Rational(1, 3), {"triple", {0, 1}, {1}, {}, {}});
    const Json j = system_json(s);
    EXPECT_EQ(j["variables"], Json::array({"x", "y"}));
    ASSERT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(qvec_from_json(j["rows"][0]["coeffs_num"]), (QVec{1, -2}));
    EXPECT_EQ(rational_from_json(j["rows"][0]["rhs"]), Rational(1, 3));
    EXPECT_EQ(j["rows"][0]["provenance"][0]["wtilde"], "s1s2");
}

TEST(Serialize, CubicleReportOfIdentity) {
    const Json j = cubicles_json(identity_embedding(RootDatum::from_type("B2")).make_compatible());
    EXPECT_EQ(j["cubicles"].size(), 1u);
    EXPECT_EQ(j["relative_weyl_set"].size(), 1u);
    EXPECT_TRUE(j["bar_simple"].empty());
}

TEST(Svg, PolygonAndCubicleDrawings) {
    const auto g2 = RootDatum::from_type("G2");
    const std::string poly = polygon_svg(identity_embedding(g2), {{0, 0}, {1, 0}, {0, 1}}, "triangle");
    EXPECT_NE(poly.find("<polygon"), std::string::npos);
    EXPECT_NE(poly.find("<title>triangle</title>"), std::string::npos);
    EXPECT_NE(cubicles_svg(testing::g2_contains_a2().make_compatible()).find("<line"), std::string::npos);
    EXPECT_THROW(cubicles_svg(identity_embedding(RootDatum::from_type("A3"))), ConfigError);
}

TEST(Cli, G2OverA2PrunedInequalities) {
    const CliRun r = run_cli("inequalities --config " + config("g2_a2.json"));
    ASSERT_EQ(r.status, 0);
    const Json j = parse(r.out);
    EXPECT_EQ(j["rows"].size(), 8u);
    EXPECT_TRUE(j["pruned"].get<bool>());
    for (const auto& check : j["equivalences_checked"]) EXPECT_TRUE(check["passed"].get<bool>()) << check;
}

TEST(Cli, OutputIsByteIdenticalAcrossRunsAndThreads) {
    const std::string args = "inequalities --config " + config("g2_diagonal.json");
    const CliRun a = run_cli(args);
    const CliRun b = run_cli(args + " --threads 2");
    const CliRun c = run_cli(args);
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}

TEST(Cli, CheckReportsTheSaturationPair) {
    const CliRun r = run_cli("check --config " + config("g2_saturate.json"));
    ASSERT_EQ(r.status, 0);
    const Json j = parse(r.out);
    const std::string summary = j["summary"];
    EXPECT_EQ(summary.rfind("inside (boundary), oracle n = 1: 0", 0), 0u) << summary;
    EXPECT_NE(summary.find("n = 3: positive"), std::string::npos) << summary;
    EXPECT_EQ(j["lattice"], "yes");
    EXPECT_FALSE(j["tight_rows"].empty());
}

TEST(Cli, CheckFlagsOverrideConfig) {
    const CliRun r = run_cli("check --config " + config("g2_saturate.json") + " --lambda 1,0,0,1 --lambda-tilde 5,5 --max-n 1");
    ASSERT_EQ(r.status, 0);
    const Json j = parse(r.out);
    EXPECT_FALSE(j["inside"].get<bool>());
    EXPECT_EQ(j["summary"], "outside, oracle n = 1: 0");
}

TEST(Cli, OracleVerifyFindsNoDiscrepancies) {
    const CliRun r = run_cli("oracle-verify --config " + config("su2_su3.json") + " --grid 8");
    ASSERT_EQ(r.status, 0);
    const Json j = parse(r.out);
    EXPECT_EQ(j["status"], "ok");
    EXPECT_TRUE(j["soundness_violations"].empty());
    EXPECT_GT(j["constituents_checked"].get<int>(), 0);
}

TEST(Cli, PolytopeFlagWritesSvg) {
    const fs::path dir = scratch_dir("svg");
    const std::string svg = (dir / "hexagon.svg").string();
    const CliRun r = run_cli("inequalities --config " + config("g2_a2.json") + " --polytope 1,1 --emit-svg " + svg);
    ASSERT_EQ(r.status, 0);
    std::ifstream in(svg);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NE(text.find("<polygon"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Cli, CubiclesOfThePlethysm) {
    const CliRun r = run_cli("cubicles --config " + config("a2_plethysm.json"));
    ASSERT_EQ(r.status, 0);
    const Json j = parse(r.out);
    EXPECT_EQ(j["cubicles"]["relative_weyl_set"].size(), 4u);
    EXPECT_EQ(j["cubicles"]["bar_simple"], Json::array({4, 8, 10}));
}

TEST(Cli, ExitCodes) {
    const fs::path dir = scratch_dir("exit");
    const std::string bad = (dir / "bad.json").string();
    std::ofstream(bad) << R"({"source": "A2", "embedding": {"kind": "identity"}, "unexpected": 1})";
    EXPECT_EQ(run_cli("inequalities --config " + bad).status, 2);
    EXPECT_EQ(run_cli("inequalities --config " + (dir / "missing.json").string()).status, 2);
    EXPECT_EQ(run_cli("inequalities").status, 2);
    EXPECT_EQ(run_cli("inequalities --config " + config("g2_a2.json") + " --scalar --invariant").status, 2);
    EXPECT_EQ(run_cli("inequalities --config " + config("a2_plethysm.json")).status, 3);
    fs::remove_all(dir);
}

TEST(Cli, CacheDirectoryIsPopulatedAndReused) {
    const fs::path dir = scratch_dir("cache");
    const std::string args = "inequalities --config " + config("g2_a2.json") + " --cache " + dir.string();
    const CliRun first = run_cli(args);
    ASSERT_EQ(first.status, 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) files += entry.path().extension() == ".json" ? 1 : 0;
    EXPECT_EQ(files, 2u);
    const CliRun second = run_cli(args);
    EXPECT_EQ(first.out, second.out);
    fs::remove_all(dir);
}

}  // namespace
}  // namespace mcone
