#include "capfee/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace capfee {

namespace {

void require_resolution(double res) {
    if (!(res > 0.0 && res <= 0.1)) {
        throw InvariantError("constraint violated: 0 < grid_resolution <= 0.1");
    }
}

std::size_t cells_for(double res) {
    return static_cast<std::size_t>(std::ceil(1.0 / res - 1e-9));
}

// Uniform grid over [lo, hi] with `cells` cells; the first best node wins ties.
template <class Score>
double grid_arg_best(double lo, double hi, std::size_t cells, Score&& score) {
    double best_x = lo;
    double best_v = score(lo);
    for (std::size_t i = 1; i <= cells; ++i) {
        const double x = i == cells ? hi : lo + (hi - lo) * static_cast<double>(i) /
                                                    static_cast<double>(cells);
        const double v = score(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    return best_x;
}

}  // namespace

double oracle_best_response(double f1, const ModelParams& params, const BonusPolicy& policy,
                            double grid_resolution, std::size_t zoom_levels) {
    require_resolution(grid_resolution);
    if (!(f1 >= 0.0 && f1 <= 1.0)) {
        throw InvariantError("input out of domain: f1 must lie in [0, 1]");
    }
    auto profit = [&](double f2) { return practice_profit_reduced({f1, f2}, params, policy); };

    const std::size_t cells = cells_for(grid_resolution);
    double best = grid_arg_best(0.0, 1.0, cells, profit);
    double step = 1.0 / static_cast<double>(cells);
    for (std::size_t level = 0; level < zoom_levels; ++level) {
        const double lo = std::max(0.0, best - step);
        const double hi = std::min(1.0, best + step);
        // Keep the incumbent unless a strictly better node turns up.
        const double cand = grid_arg_best(lo, hi, 20, profit);
        if (profit(cand) > profit(best) || (profit(cand) == profit(best) && cand < best)) {
            best = cand;
        }
        step /= 10.0;
    }
    return best;
}

std::size_t oracle_full_zoom(double grid_resolution) {
    std::size_t levels = 0;
    for (double step = grid_resolution; step > 1e-12 && levels < 40; step /= 10.0) ++levels;
    return levels;
}

OracleReport oracle_stackelberg(const ModelParams& params, const BonusPolicy& policy,
                                double grid_resolution, const SolveSettings& settings) {
    const std::size_t zoom = oracle_full_zoom(grid_resolution);
    return oracle_stackelberg(params, policy, grid_resolution, settings, zoom, zoom);
}

OracleReport oracle_stackelberg(const ModelParams& params, const BonusPolicy& policy,
                                double grid_resolution, const SolveSettings& settings,
                                std::size_t follower_zoom, std::size_t leader_zoom) {
    require_resolution(grid_resolution);
    params.validate();
    policy.validate();

    const std::size_t cells = cells_for(grid_resolution);
    std::vector<double> f1s(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) {
        f1s[i] = i == cells ? 1.0 : static_cast<double>(i) / static_cast<double>(cells);
    }
    std::vector<double> f2s(f1s.size());
    std::vector<double> costs(f1s.size());

    auto column = [&](std::size_t i) {
        f2s[i] = oracle_best_response(f1s[i], params, policy, grid_resolution, follower_zoom);
        costs[i] = insurer_cost_reduced({f1s[i], f2s[i]}, params, policy);
    };
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1) {
        for (std::size_t i = 0; i < f1s.size(); ++i) column(i);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < f1s.size(); i += workers) column(i);
            });
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < costs.size(); ++i) {
        if (costs[i] < costs[best]) best = i;
    }

    // Zoom the leader as well: near a kink of R(f1) the follower share moves
    // much faster than f1, so a bare grid node would misplace f2.
    double f1_best = f1s[best];
    double f2_best = f2s[best];
    double cost_best = costs[best];
    double step = 1.0 / static_cast<double>(cells);
    for (std::size_t level = 0; level < leader_zoom; ++level) {
        const double lo = std::max(0.0, f1_best - step);
        const double hi = std::min(1.0, f1_best + step);
        for (int i = 0; i <= 20; ++i) {
            const double x = i == 20 ? hi : lo + (hi - lo) * i / 20.0;
            const double f2 = oracle_best_response(x, params, policy, grid_resolution, follower_zoom);
            const double c = insurer_cost_reduced({x, f2}, params, policy);
            if (c < cost_best || (c == cost_best && x < f1_best)) {
                f1_best = x;
                f2_best = f2;
                cost_best = c;
            }
        }
        step /= 10.0;
    }

    const EquilibriumReport solved = solve_stackelberg(params, policy, settings);

    OracleReport out;
    out.grid_resolution = grid_resolution;
    out.oracle_f1 = f1_best;
    out.oracle_f2 = f2_best;
    out.oracle_objective = cost_best;
    out.solver_f1 = solved.fractions.f1;
    out.solver_f2 = solved.fractions.f2;
    out.solver_objective = solved.insurer_cost_reduced;
    out.max_deviation = std::max(std::abs(out.oracle_f1 - out.solver_f1),
                                 std::abs(out.oracle_f2 - out.solver_f2));
    return out;
}

}  // namespace capfee
