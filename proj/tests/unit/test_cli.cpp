#include "dirackit/tools/commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace dirackit::tools;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string data(const std::string& name) { return read_file(std::string(DIRACKIT_TEST_DATA) + "/" + name); }

Json poly1(std::initializer_list<std::pair<int, int>> terms) {
    Json t = Json::array();
    for (auto [e, c] : terms) t.push_back({{"exp", {e}}, {"num", std::to_string(c)}});
    return {{"vars", 1}, {"terms", t}};
}

std::string obstruction_scene(const Json& f) {
    return Json{{"name", "inline"}, {"f", f}, {"interval", {"-1", "1"}}}.dump();
}

int run_binary(const std::string& args) {
    const int status = std::system((std::string(DIRACKIT_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(Validate, CounterexampleFailsOnlyRegularity) {
    CommandResult r = run_validate(data("counterexample.json"), {});
    EXPECT_EQ(r.exit_code, 1);
    const Json& c = r.report["checks"];
    EXPECT_EQ(c["isotropy"]["status"], "pass");
    EXPECT_EQ(c["involutivity"]["status"], "pass");
    EXPECT_EQ(c["dirac_action"]["status"], "pass");
    EXPECT_EQ(c["moment_condition"]["status"], "pass");
    EXPECT_EQ(c["regularity"]["status"], "fail");
    EXPECT_EQ(c["regularity"]["level"]["verdict"], "not-regular");
}

TEST(Validate, RegularScenePasses) {
    CommandResult r = run_validate(data("regular.json"), {});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.report["status"], "pass");
    EXPECT_EQ(r.report["checks"]["regularity"]["action"]["verdict"], "regular-everywhere");
}

TEST(Validate, InputErrors) {
    EXPECT_EQ(run_validate("{\"dirac\": ", {}).exit_code, 2);
    CommandResult missing = run_validate("{\"name\": \"empty\"}", {});
    EXPECT_EQ(missing.exit_code, 2);
    EXPECT_NE(missing.report["error"].get<std::string>().find("dirac"), std::string::npos);
    Json bad = Json::parse(data("regular.json"));
    bad["dirac"]["dim"] = 3;
    EXPECT_EQ(run_validate(bad.dump(), {}).exit_code, 2);
}

TEST(Validate, NonIsotropicSpanIsAFailedCheck) {
    Json one{{"vars", 2}, {"terms", {{{"exp", {0, 0}}, {"num", "1"}}}}};
    Json zero{{"vars", 2}, {"terms", Json::array()}};
    Json scene{{"name", "not-isotropic"},
               {"dirac",
                {{"dim", 2},
                 {"kind", "span"},
                 {"domain", {{"min", {"-1", "-1"}}, {"max", {"1", "1"}}}},
                 {"data",
                  {{"sections",
                    {{{"X", {one, zero}}, {"alpha", {one, zero}}}, {{"X", {zero, one}}, {"alpha", {zero, zero}}}}}}}}}};
    CommandResult r = run_validate(scene.dump(), {});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.report["checks"]["isotropy"]["status"], "fail");
    EXPECT_EQ(r.report["checks"]["involutivity"]["status"], "skipped");
}

TEST(Reduce, CounterexampleIsNonSmoothNearZero) {
    CommandResult r = run_reduce(data("counterexample.json"), {});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.report["reduction"]["verdict"], "non-smooth");
    EXPECT_EQ(r.report["diamond"]["status"], "refused");
    for (const auto& p : r.report["reduction"]["suspect_locus"]) {
        EXPECT_LE(std::abs(dirackit::parse_rational(p[0].get<std::string>()).get_d()), 0.1);
    }
    EXPECT_EQ(r.csv.rfind("level,a0,a1,b0,b1,gap\n", 0), 0u);
}

TEST(Reduce, RegularSceneIsSmoothWithDiamond) {
    CommandResult r = run_reduce(data("regular.json"), {});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.report["reduction"]["verdict"], "smooth");
    EXPECT_EQ(r.report["diamond"]["status"], "pass");
    EXPECT_EQ(r.report["diamond"]["nodes_checked"], 32);
}

TEST(Reduce, GridOverrideChangesResolution) {
    LoadOptions o;
    o.grid_resolution = 4;
    CommandResult r = run_reduce(data("counterexample.json"), o);
    EXPECT_EQ(r.report["reduction"]["levels"][0]["resolution"][0], 7);
}

TEST(Obstruct, Verdicts) {
    CommandResult sq = run_obstruct(data("obstruct.json"), {});
    EXPECT_EQ(sq.exit_code, 1);
    EXPECT_EQ(sq.report["monodromy"]["verdict"], "non-integrable");

    CommandResult lin = run_obstruct(obstruction_scene(poly1({{1, 1}, {0, 2}})), {});
    EXPECT_EQ(lin.exit_code, 0);
    EXPECT_EQ(lin.report["monodromy"]["verdict"], "integrable");

    CommandResult flat = run_obstruct(obstruction_scene(poly1({{0, 3}})), {});
    EXPECT_EQ(flat.exit_code, 0);
    EXPECT_EQ(flat.report["monodromy"]["verdict"], "trivially-integrable");

    LoadOptions bad;
    bad.quadrature_order = 2;
    EXPECT_EQ(run_obstruct(data("obstruct.json"), bad).exit_code, 2);
}

TEST(Area, ConsistentAndPlottable) {
    CommandResult r = run_area(data("obstruct.json"), {});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.report["curvature_integral"]["additivity"], "pass");
    EXPECT_EQ(r.report["homotopy"]["status"], "pass");
    EXPECT_EQ(r.csv.rfind("r,g,sphere_g\n", 0), 0u);
}

TEST(Reports, AreByteIdentical) {
    for (const char* scene : {"counterexample.json", "regular.json", "obstruct.json"}) {
        const std::string text = data(scene);
        EXPECT_EQ(dump_report(run_validate(text, {}).report), dump_report(run_validate(text, {}).report));
        EXPECT_EQ(dump_report(run_obstruct(text, {}).report), dump_report(run_obstruct(text, {}).report));
    }
    const std::string ce = data("counterexample.json");
    CommandResult a = run_reduce(ce, {}), b = run_reduce(ce, {});
    EXPECT_EQ(dump_report(a.report), dump_report(b.report));
    EXPECT_EQ(a.csv, b.csv);
}

TEST(Schema, IsValidJson) {
    Json schema = Json::parse(scene_schema());
    EXPECT_EQ(schema["type"], "object");
    EXPECT_TRUE(schema["properties"].contains("dirac"));
}

TEST(Binary, ExitCodes) {
    const std::string dir = DIRACKIT_TEST_DATA;
    EXPECT_EQ(run_binary("validate --scene " + dir + "/regular.json"), 0);
    EXPECT_EQ(run_binary("validate --scene " + dir + "/counterexample.json"), 1);
    EXPECT_EQ(run_binary("obstruct --scene " + dir + "/obstruct.json"), 1);
    EXPECT_EQ(run_binary("validate --scene " + dir + "/does-not-exist.json"), 2);
    EXPECT_EQ(run_binary("validate"), 2);
    EXPECT_EQ(run_binary("--schema"), 0);
}
