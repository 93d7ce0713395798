#include <gtest/gtest.h>

#include <random>

#include "capfee/config.hpp"
#include "cli.hpp"
#include "test_support.hpp"

using namespace capfee;

TEST(ParseConfig, EmptyGivesDefaults) {
    const ScenarioConfig cfg = parse_config("");
    EXPECT_EQ(cfg.params, ModelParams{});
    EXPECT_EQ(cfg.params.p, 1684.0);
    EXPECT_EQ(cfg.params.c_n, 24.04);
    EXPECT_EQ(cfg.policy.alpha, 682000.0);
    EXPECT_TRUE(cfg.policy.unbounded());
    EXPECT_EQ(cfg.rounds, 1u);
    EXPECT_EQ(cfg.inflation_rate, 1.0);
    EXPECT_EQ(cfg.settings, SolveSettings{});
}

TEST(ParseConfig, OverridesCommentsAndBlanks) {
    const ScenarioConfig cfg = parse_config(
        "# linear scenario\n"
        "\n"
        "alpha = 0\n"
        "rounds = 1   # trailing comment\n"
        "  xi=0.05\r\n"
        "grid_points = 501\n");
    EXPECT_EQ(cfg.policy.alpha, 0.0);
    EXPECT_EQ(cfg.rounds, 1u);
    EXPECT_EQ(cfg.policy.xi, 0.05);
    EXPECT_EQ(cfg.settings.grid_points, 501u);

    EXPECT_TRUE(parse_config("xi = inf").policy.unbounded());
    EXPECT_TRUE(parse_config("xi = Infinity").policy.unbounded());
}

TEST(ParseConfig, InvariantViolations) {
    try {
        (void)parse_config("p = -5");
        FAIL();
    } catch (const InvariantError& e) {
        EXPECT_STREQ(e.what(), "constraint violated: p > 0");
    }
    EXPECT_THROW((void)parse_config("rounds = 0"), InvariantError);
    EXPECT_THROW((void)parse_config("refine_tol = 0.5"), InvariantError);
    EXPECT_THROW((void)parse_config("alpha = inf"), ConfigError);
}

TEST(ParseConfig, ErrorsNameKeyAndLine) {
    try {
        (void)parse_config("alpha = 1\nbeta = 2\n");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("beta"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    try {
        (void)parse_config("\n\np = 12abc\n");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW((void)parse_config("rounds = 2.5"), ConfigError);
    EXPECT_THROW((void)parse_config("just text"), ConfigError);
}

TEST(ParseConfig, TextAndJsonRoundTrip) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int k = 0; k < 200; ++k) {
        ScenarioConfig cfg;
        cfg.params = test::perturbed_params(rng);
        cfg.policy = test::random_policy(rng);
        cfg.policy.kappa *= u(rng);
        cfg.policy.exp_f1 *= u(rng);
        cfg.policy.exp_f2 *= u(rng);
        cfg.rounds = 1 + rng() % 500;
        cfg.inflation_rate = u(rng);
        cfg.settings.grid_points = 3 + rng() % 20000;
        cfg.settings.refine_tol = 1e-9 * u(rng);
        EXPECT_EQ(parse_config(to_config_text(cfg)), cfg);
        const auto j = cli::config_to_json(cfg);
        EXPECT_EQ(cli::config_from_json(nlohmann::json::parse(j.dump())), cfg);
    }
}

TEST(FormatReal, ShortestRoundTrip) {
    EXPECT_EQ(format_real(140.41), "140.41");
    EXPECT_EQ(format_real(1684.0), "1684");
    EXPECT_EQ(format_real(kUnboundedCutoff), "inf");
    EXPECT_EQ(format_real(1e-8), "0.00000001");
    EXPECT_EQ(format_real(5e5), "500000");
}
