#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "capfee/model.hpp"

namespace capfee {

struct SolveSettings {
    std::size_t grid_points = 10001;
    double refine_tol = 1e-8;
    std::size_t max_refine_iters = 200;

    void validate() const;

    bool operator==(const SolveSettings&) const = default;
};

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

enum class Sense { minimize, maximize };

struct ScalarOptimum {
    double x = 0.0;
    double value = 0.0;
};

/// Coarse scan over `grid_points` equally spaced samples, then golden-section
/// refinement inside the bracket around the best sample. Ties go to the lower x.
/// Throws InvariantError on a degenerate interval.
[[nodiscard]] ScalarOptimum scalar_optimize(const std::function<double(double)>& objective,
                                            Interval interval, const SolveSettings& settings,
                                            Sense sense);

/// The practice's exact best response R(f1) = argmax_{f2 in [0,1]} of the
/// reduced profit. The objective is split into the pieces where the bonus is
/// saturated or linear in z; every candidate optimum (piece stationary points,
/// saturation breakpoints, interval ends) is evaluated and the best kept.
[[nodiscard]] double best_response_f2(double f1, const ModelParams& params,
                                      const BonusPolicy& policy);

/// Which insurer objective the leader minimizes. Both have the same argmin.
enum class CostForm { reduced, full };

/// One-round Stackelberg equilibrium by backward induction:
///   f1* = argmin_f1 P(f1, R(f1)),  f2* = R(f1*).
[[nodiscard]] EquilibriumReport solve_stackelberg(const ModelParams& params,
                                                  const BonusPolicy& policy,
                                                  const SolveSettings& settings = {},
                                                  CostForm form = CostForm::reduced);

/// Closed-form solution when the bonus does not depend on the fractions
/// (alpha = 0 or fully saturated). With `f2_override` only the insurer's
/// response to that visit share is computed. The report carries a zero bonus.
[[nodiscard]] EquilibriumReport solve_linear_regime(const ModelParams& params,
                                                    std::optional<double> f2_override = {});

/// Insurer's myopic response to a fixed visit share.
[[nodiscard]] double insurer_response_f1(double f2, const ModelParams& params,
                                         const BonusPolicy& policy, const SolveSettings& settings);

enum class UpdateOrder {
    sequential,    ///< f2(k) responds to f1(k)
    simultaneous,  ///< f2(k) responds to f1(k-1)
};

struct RoundRecord {
    std::size_t round_index = 0;
    FractionPair fractions;
    EquilibriumReport report;
};

struct GameTrace {
    std::vector<RoundRecord> rounds;
    double inflation_rate = 1.0;

    [[nodiscard]] const RoundRecord& final_round() const { return rounds.back(); }
};

/// Repeated game. Round 1 is the backward-induction solve; each later round
/// inflates r_f and r_c by `inflation_rate`, then the insurer best-responds to
/// the previous f2 and the practice to the insurer's choice.
[[nodiscard]] GameTrace play_repeated(std::size_t rounds, const ModelParams& params,
                                      const BonusPolicy& policy,
                                      const SolveSettings& settings = {},
                                      double inflation_rate = 1.0,
                                      UpdateOrder order = UpdateOrder::sequential);

}  // namespace capfee
