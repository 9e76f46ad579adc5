#include <gtest/gtest.h>

#include <cmath>

#include "hyp/commands.hpp"

using namespace hyp;

TEST(Commands, ParseComplex) {
    EXPECT_EQ(parse_complex("0.5"), ComplexPoint(0.5, 0.0));
    EXPECT_EQ(parse_complex("0.5,-0.25"), ComplexPoint(0.5, -0.25));
    EXPECT_EQ(parse_complex("2+i"), ComplexPoint(2.0, 1.0));
    EXPECT_EQ(parse_complex("-1.5-2.5i"), ComplexPoint(-1.5, -2.5));
    EXPECT_EQ(parse_complex("-i"), ComplexPoint(0.0, -1.0));
    EXPECT_EQ(parse_complex("3e-1i"), ComplexPoint(0.0, 0.3));
    EXPECT_THROW(parse_complex("abc"), ContractError);
    const auto k = parse_kpoint("0.1;0,0.2");
    EXPECT_EQ(k[0], ComplexPoint(0.1, 0.0));
    EXPECT_EQ(k[1], ComplexPoint(0.0, 0.2));
}

TEST(Commands, DistanceDisc) {
    const RunConfig cfg;
    auto out = cmd_distance("disc", 0.0, 0.5, "closed", cfg);
    EXPECT_EQ(out.exit_code, kExitPass);
    EXPECT_NEAR(std::stod(out.text), std::log(3.0), 1e-15);
    const auto& r = out.document["reports"][0];
    EXPECT_TRUE(r.contains("closed_form"));
    EXPECT_TRUE(r.contains("mesh"));
    EXPECT_EQ(r["method"], "closed");
    EXPECT_EQ(cmd_distance("disc", 0.3, 0.3, "closed", cfg).document["reports"][0]["value"], 0.0);
}

TEST(Commands, DistanceErrors) {
    const RunConfig cfg;
    EXPECT_THROW(cmd_distance("ppc", 2.0, 3.0, "closed", cfg), ContractError);
    EXPECT_THROW(cmd_distance("ppc", 0.0, 3.0, "mesh", cfg), DomainError);
    EXPECT_THROW(cmd_distance("disc", 0.0, 1.0, "closed", cfg), DomainError);
    EXPECT_THROW(cmd_distance("torus", 0.0, 0.1, "closed", cfg), ContractError);
}

TEST(Commands, EnvelopeShape) {
    const RunConfig cfg;
    const auto out = cmd_verify("schwarz", cfg);
    EXPECT_EQ(out.exit_code, kExitPass);
    for (const char* k : {"tool_version", "command", "config", "reports"}) EXPECT_TRUE(out.document.contains(k)) << k;
    EXPECT_EQ(out.document["command"], "verify schwarz");
    EXPECT_EQ(out.text, cmd_verify("schwarz", cfg).text);
    EXPECT_THROW(run_suite("nope", cfg), ContractError);
}

TEST(Commands, CanonicalJsonSortsKeysAndUses17Digits) {
    const Json j = {{"b", 0.1}, {"a", 1}};
    const std::string s = dump_canonical(j);
    EXPECT_LT(s.find("\"a\""), s.find("\"b\""));
    EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
}

TEST(Commands, CalibrateSuccessAndFailure) {
    const RunConfig cfg;
    const auto ok = cmd_calibrate(9.0, std::numeric_limits<double>::infinity(), cfg);
    EXPECT_EQ(ok.exit_code, kExitPass);
    EXPECT_EQ(ok.document["reports"][0]["C"], 16.0);
    EXPECT_LT(ok.document["reports"][0]["certificate"]["max_curvature"].get<double>(), -1.0);
    EXPECT_EQ(cmd_calibrate(9.0, 9.9, cfg).exit_code, kExitCheckFailed);
}

TEST(Commands, BidiscSuiteRecordsTheTenthBound) {
    const auto reports = run_suite("bidisc", RunConfig{});
    EXPECT_DOUBLE_EQ(reports[0]["params"]["n10"].get<double>(), std::ldexp(1.0, -9));
    EXPECT_TRUE(reports[0]["pass"].get<bool>());
    EXPECT_TRUE(reports[1]["pass"].get<bool>());
}

TEST(Commands, CompletenessSuiteFlags) {
    const auto reports = run_suite("completeness", RunConfig{});
    ASSERT_EQ(reports.size(), 4u);
    for (int k = 0; k < 3; ++k) EXPECT_TRUE(reports[k]["params"]["growth"]["divergence_flag"].get<bool>());
    EXPECT_FALSE(reports[3]["params"]["growth"]["divergence_flag"].get<bool>());
    for (const auto& r : reports) EXPECT_TRUE(r["pass"].get<bool>());
}

TEST(Commands, KobayashiDisc) {
    const auto out = cmd_kobayashi("disc", {0.0, 0.0}, {0.5, 0.0}, 4, RunConfig{});
    const auto& r = out.document["reports"][0];
    EXPECT_NEAR(r["value"].get<double>(), std::log(3.0), 1e-8);
    EXPECT_NEAR(r["closed_form"].get<double>(), std::log(3.0), 1e-15);
}
