#include "capfee/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace capfee {

std::vector<double> AlphaGrid::points() const {
    if (!(min >= 0.0) || !std::isfinite(max)) {
        throw InvariantError("constraint violated: 0 <= alpha_min");
    }
    if (!(step > 0.0)) throw InvariantError("constraint violated: step > 0");
    if (max < min) throw InvariantError("empty alpha grid: alpha_max < alpha_min");

    // Relative slack so that (max - min) / step landing a hair under an integer
    // still includes max.
    const double span = (max - min) / step;
    const auto count = static_cast<std::size_t>(std::floor(span * (1.0 + 1e-12) + 1e-9)) + 1;
    std::vector<double> pts(count);
    for (std::size_t i = 0; i < count; ++i) {
        pts[i] = min + static_cast<double>(i) * step;
    }
    return pts;
}

std::vector<SweepRow> sweep_alpha(const AlphaGrid& grid, std::size_t rounds,
                                  const ModelParams& params, const SolveSettings& settings,
                                  const BonusPolicy& shape) {
    if (rounds == 0) throw InvariantError("constraint violated: rounds >= 1");
    params.validate();
    settings.validate();
    const std::vector<double> alphas = grid.points();

    std::vector<SweepRow> rows(alphas.size());
    auto run_row = [&](std::size_t i) {
        BonusPolicy policy = shape;
        policy.alpha = alphas[i];
        policy.xi = kUnboundedCutoff;
        const GameTrace trace = play_repeated(rounds, params, policy, settings);
        const EquilibriumReport& rep = trace.final_round().report;
        rows[i] = {alphas[i], rep.fractions.f1, rep.fractions.f2, rep.bonus, rep.z_value,
                   rep.regime, rounds};
    };

    // Rows are independent; stripe them across workers and emit in grid order.
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, alphas.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < alphas.size(); ++i) run_row(i);
        return rows;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < alphas.size(); i += workers) run_row(i);
        });
    }
    pool.clear();
    return rows;
}

double h_eps_threshold(const ModelParams& params) {
    params.validate();
    return params.r_c - params.n_f * params.r_f;
}

std::string_view to_string(EquilibriumClass c) noexcept {
    switch (c) {
        case EquilibriumClass::interior: return "interior";
        case EquilibriumClass::f1_boundary: return "f1-boundary";
        case EquilibriumClass::f2_boundary: return "f2-boundary";
        case EquilibriumClass::corner: return "corner";
    }
    return "unknown";
}

EquilibriumClass classify_equilibrium(const FractionPair& fp, double tol) {
    auto extreme = [tol](double v) { return v <= tol || v >= 1.0 - tol; };
    const bool f1_edge = extreme(fp.f1);
    const bool f2_edge = extreme(fp.f2);
    if (f1_edge && f2_edge) return EquilibriumClass::corner;
    if (f1_edge) return EquilibriumClass::f1_boundary;
    if (f2_edge) return EquilibriumClass::f2_boundary;
    return EquilibriumClass::interior;
}

}  // namespace capfee
