#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "capfee/model.hpp"
#include "capfee/solver.hpp"

namespace capfee {

struct SweepRow {
    double alpha = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
    double bonus = 0.0;
    double z_value = 0.0;
    Regime regime = Regime::boundary;
    std::size_t rounds = 1;

    bool operator==(const SweepRow&) const = default;
};

struct AlphaGrid {
    double min = 5e5;
    double max = 9e5;
    double step = 1e4;

    /// Inclusive grid points. A single point when min == max.
    [[nodiscard]] std::vector<double> points() const;
};

/// Runs the repeated game for every alpha on `grid` with an unbounded cut-off,
/// keeping the final round. `shape` supplies kappa and the exponents; its alpha
/// and xi are ignored. Rows come back in alpha order.
[[nodiscard]] std::vector<SweepRow> sweep_alpha(const AlphaGrid& grid, std::size_t rounds,
                                                const ModelParams& params,
                                                const SolveSettings& settings = {},
                                                const BonusPolicy& shape = {});

/// h_eps at which the insurer's linear coefficient at f2 = 1 changes sign.
[[nodiscard]] double h_eps_threshold(const ModelParams& params);

enum class EquilibriumClass { interior, f1_boundary, f2_boundary, corner };

[[nodiscard]] std::string_view to_string(EquilibriumClass c) noexcept;

[[nodiscard]] EquilibriumClass classify_equilibrium(const FractionPair& fp, double tol = 1e-6);

[[nodiscard]] inline EquilibriumClass classify_equilibrium(const EquilibriumReport& report,
                                                           double tol = 1e-6) {
    return classify_equilibrium(report.fractions, tol);
}

}  // namespace capfee
