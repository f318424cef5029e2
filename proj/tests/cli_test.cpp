#include "devmatch/cli.hpp"

#include "devmatch/catalog.hpp"
#include "devmatch/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace devmatch;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string data(const char* name) { return std::string(DEVMATCH_TEST_DATA) + "/" + name; }

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override { unsetenv("DEVMATCH_CATALOG"); }
    void TearDown() override { unsetenv("DEVMATCH_CATALOG"); }
};

} // namespace

TEST_F(CliTest, MatchZeroProfile) {
    const auto r = run({"match", "--profile", data("zero.profile")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("green: 14"), std::string::npos);
    EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, MatchStructured) {
    const auto r = run({"match", "--profile", data("parkinson.profile"), "--format", "structured"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto parsed = parse_structured(r.out);
    EXPECT_EQ(parsed.report.find("display")->aggregate, Color::Yellow);
    EXPECT_EQ(parsed.report.find("signal_tower")->aggregate, Color::Yellow);
}

TEST_F(CliTest, MatchOutOfRangeProfile) {
    const auto r = run({"match", "--profile", data("bad_vision.profile")});
    EXPECT_EQ(r.code, kExitInputError);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("perception.vision"), std::string::npos);
    EXPECT_NE(r.err.find("out of range"), std::string::npos);
}

TEST_F(CliTest, MatchMalformedNamesLine) {
    const auto r = run({"match", "--profile", data("malformed.profile")});
    EXPECT_EQ(r.code, kExitInputError);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingFile) {
    const auto r = run({"match", "--profile", data("does_not_exist.profile")});
    EXPECT_EQ(r.code, kExitInputError);
    EXPECT_NE(r.err.find("cannot read"), std::string::npos);
}

TEST_F(CliTest, MatchWithPlanAppendsFindings) {
    const auto r = run({"match", "--profile", data("zero.profile"), "--plan", data("safety_mismatch.plan")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("SAFETY_UNIT_MISMATCH"), std::string::npos);
}

TEST_F(CliTest, ValidateExitCodes) {
    auto r = run({"validate", "--plan", data("sequential.plan"), "--profile", data("zero.profile")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "no findings\n");

    r = run({"validate", "--plan", data("safety_mismatch.plan"), "--profile", data("zero.profile")});
    EXPECT_EQ(r.code, kExitInfeasible);
    EXPECT_NE(r.out.find("SAFETY_UNIT_MISMATCH"), std::string::npos);

    r = run({"validate", "--plan", data("unknown_device.plan"), "--profile", data("zero.profile")});
    EXPECT_EQ(r.code, kExitInputError);
    EXPECT_NE(r.err.find("laser_pointer"), std::string::npos);
}

TEST_F(CliTest, ValidateWarningsOnlyIsFeasible) {
    const auto r = run({"validate", "--plan", data("sequential.plan"), "--profile", data("parkinson.profile"),
                        "--format", "structured"});
    // Parkinson: display/signal tower usable only with sign-off, but the plan has no errors
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("\"findings\""), std::string::npos);
}

TEST_F(CliTest, CatalogList) {
    const auto r = run({"catalog", "list"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(count_lines(r.out), 14);
    EXPECT_EQ(r.out.rfind("hand_button", 0), 0u);
}

TEST_F(CliTest, CatalogShowMouthMouse) {
    const auto r = run({"catalog", "show", "mouth_mouse"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out.rfind("id: mouth_mouse\n", 0), 0u);
    EXPECT_NE(r.out.find("class: multi_dim_input"), std::string::npos);
    EXPECT_EQ(r.out.find("modality:"), std::string::npos);
    EXPECT_NE(r.out.find("  vision: max 0"), std::string::npos);
    EXPECT_EQ(count_lines(r.out), 3 + 3 + 5 + 5 + 2);
}

TEST_F(CliTest, CatalogShowUnknown) {
    const auto r = run({"catalog", "show", "laser_pointer"});
    EXPECT_EQ(r.code, kExitInputError);
}

TEST_F(CliTest, ExportPipedBackMatchesBuiltin) {
    const auto exported = run({"catalog", "export"});
    ASSERT_EQ(exported.code, kExitOk);
    const auto piped = run({"match", "--profile", data("parkinson.profile"), "--catalog", "-"}, exported.out);
    const auto builtin = run({"match", "--profile", data("parkinson.profile")});
    EXPECT_EQ(piped.code, kExitOk);
    EXPECT_EQ(piped.out, builtin.out);
}

TEST_F(CliTest, EnvironmentCatalogOverride) {
    const std::string path = ::testing::TempDir() + "/devmatch_env_catalog.json";
    {
        std::ofstream f(path);
        f << R"({"version": "env-test", "devices": [{"id": "speaker", "name": "Speaker", "class": "output", "modality": "auditory", "perception": {"hearing": 0}}]})";
    }
    setenv("DEVMATCH_CATALOG", path.c_str(), 1);
    auto r = run({"catalog", "list"});
    EXPECT_EQ(count_lines(r.out), 1);
    EXPECT_NE(run({"catalog", "export"}).out.find("env-test"), std::string::npos);

    // an explicit flag still wins
    r = run({"catalog", "--catalog", "-", "list"}, serialize_catalog(default_catalog()));
    EXPECT_EQ(count_lines(r.out), 14);
}

TEST_F(CliTest, BadCatalogIsInputError) {
    const auto r = run({"catalog", "--catalog", "-", "list"}, R"({"version": "x", "devices": [{"id": "a"}]})");
    EXPECT_EQ(r.code, kExitInputError);
    EXPECT_NE(r.err.find("devices[0].name"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitInputError);
    EXPECT_EQ(run({"match"}).code, kExitInputError);
    EXPECT_EQ(run({"match", "--profile", data("zero.profile"), "--format", "xml"}).code, kExitInputError);
    EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}
