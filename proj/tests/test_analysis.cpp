#include <gtest/gtest.h>

#include <cmath>

#include "capfee/analysis.hpp"

using namespace capfee;

TEST(AlphaGrid, InclusivePoints) {
    EXPECT_EQ((AlphaGrid{5e5, 9e5, 1e4}.points().size()), 41u);
    EXPECT_EQ((AlphaGrid{5e5, 9e5, 1e4}.points().back()), 9e5);
    EXPECT_EQ((AlphaGrid{0.0, 1.0, 0.1}.points().size()), 11u);
    EXPECT_EQ((AlphaGrid{682000, 682000, 1.0}.points()), std::vector<double>{682000});
    EXPECT_THROW((void)(AlphaGrid{2.0, 1.0, 0.1}.points()), InvariantError);
    EXPECT_THROW((void)(AlphaGrid{0.0, 1.0, 0.0}.points()), InvariantError);
    EXPECT_THROW((void)(AlphaGrid{-1.0, 1.0, 0.5}.points()), InvariantError);
}

TEST(Sweep, SinglePointMatchesSolver) {
    const auto rows = sweep_alpha({682000, 682000, 1.0}, 1, {});
    ASSERT_EQ(rows.size(), 1u);
    const EquilibriumReport direct = solve_stackelberg({}, {});
    EXPECT_EQ(rows[0].f1, direct.fractions.f1);
    EXPECT_EQ(rows[0].f2, direct.fractions.f2);
    EXPECT_EQ(rows[0].bonus, direct.bonus);
    EXPECT_EQ(rows[0].rounds, 1u);
}

TEST(Sweep, ZeroAlphaIsLinearCorner) {
    const auto rows = sweep_alpha({0.0, 0.0, 1.0}, 1, {});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].f1, 0.0);
    EXPECT_EQ(rows[0].f2, 1.0);
    EXPECT_EQ(rows[0].regime, Regime::saturated_linear);
}

TEST(Sweep, InteriorRowsPayPenalty) {
    for (std::size_t rounds : {1u, 100u}) {
        const auto rows = sweep_alpha({5e5, 9e5, 1e4}, rounds, {});
        ASSERT_EQ(rows.size(), 41u);
        std::size_t interior = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SweepRow& r = rows[i];
            if (i > 0) EXPECT_LT(rows[i - 1].alpha, r.alpha);
            EXPECT_GE(r.f1, 0.0);
            EXPECT_LE(r.f1, 1.0);
            EXPECT_GE(r.f2, 0.0);
            EXPECT_LE(r.f2, 1.0);
            EXPECT_LE(std::abs(r.bonus - r.alpha * r.z_value), 1e-9 * std::abs(r.bonus));
            if (classify_equilibrium(FractionPair{r.f1, r.f2}) == EquilibriumClass::interior) {
                ++interior;
                EXPECT_LT(r.bonus, 0.0) << "alpha=" << r.alpha;
            }
        }
        EXPECT_GT(interior, 0u);
    }
}

TEST(Sweep, Deterministic) {
    const auto a = sweep_alpha({6e5, 7e5, 2.5e4}, 10, {});
    const auto b = sweep_alpha({6e5, 7e5, 2.5e4}, 10, {});
    EXPECT_EQ(a, b);
}

TEST(Threshold, Examples) {
    ModelParams m;
    EXPECT_NEAR(h_eps_threshold(m), 31.80, 0.01);
    EXPECT_NEAR(h_eps_threshold(m), 31.8016, 1e-9);

    ModelParams balanced = m;
    balanced.r_c = balanced.n_f * balanced.r_f;
    EXPECT_DOUBLE_EQ(h_eps_threshold(balanced), 0.0);

    ModelParams doubled = m;
    doubled.r_f *= 2.0;
    EXPECT_NEAR(h_eps_threshold(doubled), -282.7168, 1e-9);
}

TEST(Threshold, LocatesCoefficientSignChange) {
    // Bisect h_eps for the sign change of n_f*r_f - r_c + h_eps, adjusting h_f.
    ModelParams doubled;
    doubled.r_f *= 2.0;
    auto coefficient = [&](double h_eps) { return doubled.n_f * doubled.r_f - doubled.r_c + h_eps; };
    double lo = -1000.0, hi = 1000.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (coefficient(mid) > 0.0 ? hi : lo) = mid;
    }
    EXPECT_NEAR(h_eps_threshold(doubled), 0.5 * (lo + hi), 1e-9);
}

TEST(Threshold, IndependentOfUnrelatedFields) {
    const double base = h_eps_threshold({});
    ModelParams m;
    m.p *= 3.0;
    m.c_d *= 0.5;
    m.c_n *= 1.7;
    m.n_c *= 2.2;
    EXPECT_EQ(h_eps_threshold(m), base);
}

TEST(Threshold, MatchesLinearRegimeCorner) {
    ModelParams m;
    m.h_f = m.h_c + h_eps_threshold(m) - 1.0;
    EXPECT_EQ(solve_linear_regime(m).fractions, (FractionPair{1.0, 1.0}));
    m.h_f = m.h_c + h_eps_threshold(ModelParams{}) + 1.0;
    EXPECT_EQ(solve_linear_regime(m).fractions, (FractionPair{0.0, 1.0}));
}

TEST(Classify, Labels) {
    EXPECT_EQ(classify_equilibrium(FractionPair{0.9536, 0.9397}), EquilibriumClass::interior);
    EXPECT_EQ(classify_equilibrium(FractionPair{0.0, 1.0}), EquilibriumClass::corner);
    EXPECT_EQ(classify_equilibrium(FractionPair{1.0, 0.5}), EquilibriumClass::f1_boundary);
    EXPECT_EQ(classify_equilibrium(FractionPair{0.5, 1.0 - 1e-7}), EquilibriumClass::f2_boundary);
    EXPECT_EQ(classify_equilibrium(FractionPair{1e-5, 0.5}), EquilibriumClass::interior);
    EXPECT_EQ(to_string(EquilibriumClass::f1_boundary), "f1-boundary");
}
