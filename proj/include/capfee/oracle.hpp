#pragma once

// Brute-force reference solutions. Nothing here uses the closed-form follower
// response or the golden-section search; only the model evaluations are shared
// with the solver.

#include <cstddef>

#include "capfee/model.hpp"
#include "capfee/solver.hpp"

namespace capfee {

struct OracleReport {
    double grid_resolution = 0.0;
    double oracle_f1 = 0.0;
    double oracle_f2 = 0.0;
    double oracle_objective = 0.0;
    double solver_f1 = 0.0;
    double solver_f2 = 0.0;
    double solver_objective = 0.0;
    double max_deviation = 0.0;

    /// Agreement within `factor` grid steps on both fractions.
    [[nodiscard]] bool agrees(double factor = 2.0) const {
        return max_deviation <= factor * grid_resolution;
    }
};

/// Grid argmax over f2 of the reduced practice profit at fixed f1.
///
/// With `zoom_levels == 0` the answer is a node of the uniform grid with step
/// at most `grid_resolution`. Each zoom level re-grids the two cells around the
/// current winner ten times finer, so the result converges on the true argmax
/// without assuming anything about the objective beyond its being sampled.
[[nodiscard]] double oracle_best_response(double f1, const ModelParams& params,
                                          const BonusPolicy& policy, double grid_resolution,
                                          std::size_t zoom_levels = 0);

/// Zoom depth that drives the follower grid below 1e-12.
[[nodiscard]] std::size_t oracle_full_zoom(double grid_resolution);

/// Leader grid argmin of f1 -> P(f1, oracle_best_response(f1)) compared with
/// solve_stackelberg. Both levels are zoomed to full depth unless told
/// otherwise. An unrefined follower quantizes f2 and distorts the leader
/// problem by far more than one grid step; an unrefined leader misplaces f2
/// wherever R(f1) is steep.
[[nodiscard]] OracleReport oracle_stackelberg(const ModelParams& params,
                                              const BonusPolicy& policy,
                                              double grid_resolution = 1e-4,
                                              const SolveSettings& settings = {});

[[nodiscard]] OracleReport oracle_stackelberg(const ModelParams& params,
                                              const BonusPolicy& policy, double grid_resolution,
                                              const SolveSettings& settings,
                                              std::size_t follower_zoom, std::size_t leader_zoom);

}  // namespace capfee
