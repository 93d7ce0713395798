#include "capfee/solver.hpp"

#include <algorithm>
#include <cmath>

namespace capfee {

namespace {

void require_fraction_input(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InvariantError(std::string("input out of domain: ") + name + " must lie in [0, 1]");
    }
}

void push_if_fraction(std::vector<double>& out, double v) {
    if (std::isfinite(v) && v >= 0.0 && v <= 1.0) out.push_back(v);
}

// f2 at which f1^e1 * f2^e2 == target, when that lies in [0, 1].
void push_penalty_level(std::vector<double>& out, double target, double f1_term, double exp_f2) {
    if (target <= 0.0) return;
    push_if_fraction(out, std::pow(target / f1_term, 1.0 / exp_f2));
}

}  // namespace

double best_response_f2(double f1, const ModelParams& params, const BonusPolicy& policy) {
    require_fraction_input(f1, "f1");

    const double slope = practice_visit_slope(f1, params);
    const double f1_term = std::pow(f1, policy.exp_f1);

    std::vector<double> candidates{0.0, 1.0};
    if (policy.alpha > 0.0 && f1_term > 0.0) {
        // Breakpoints of the bonus: z = +xi and z = -xi.
        if (!policy.unbounded()) {
            push_penalty_level(candidates, 0.5 * (1.0 - policy.xi / policy.kappa), f1_term,
                               policy.exp_f2);
            push_penalty_level(candidates, 0.5 * (1.0 + policy.xi / policy.kappa), f1_term,
                               policy.exp_f2);
        }
        // Stationary point of slope*f2 - 2*alpha*kappa*f1_term*f2^e2 on the unsaturated piece.
        if (policy.exp_f2 != 1.0 && slope > 0.0) {
            const double denom = 2.0 * policy.alpha * policy.kappa * f1_term * policy.exp_f2;
            const double f2_star = std::pow(slope / denom, 1.0 / (policy.exp_f2 - 1.0));
            push_if_fraction(candidates, std::min(f2_star, 1.0));
        }
    }
    std::sort(candidates.begin(), candidates.end());

    double best_f2 = candidates.front();
    double best_v = practice_profit_reduced({f1, best_f2}, params, policy);
    for (double c : candidates) {
        const double v = practice_profit_reduced({f1, c}, params, policy);
        if (v > best_v) {
            best_v = v;
            best_f2 = c;
        }
    }
    return best_f2;
}

EquilibriumReport solve_stackelberg(const ModelParams& params, const BonusPolicy& policy,
                                    const SolveSettings& settings, CostForm form) {
    params.validate();
    policy.validate();
    settings.validate();

    auto leader_cost = [&](double f1) {
        const FractionPair fp{f1, best_response_f2(f1, params, policy)};
        return form == CostForm::reduced ? insurer_cost_reduced(fp, params, policy)
                                         : insurer_cost_full(fp, params, policy);
    };
    const ScalarOptimum opt = scalar_optimize(leader_cost, {0.0, 1.0}, settings, Sense::minimize);
    const FractionPair fp{opt.x, best_response_f2(opt.x, params, policy)};
    return make_report(fp, params, policy);
}

EquilibriumReport solve_linear_regime(const ModelParams& params, std::optional<double> f2_override) {
    params.validate();
    if (f2_override) require_fraction_input(*f2_override, "f2_override");

    // Linear follower: the f2 coefficient decides the corner, ties to 0.
    auto follower = [&](double f1) { return practice_visit_slope(f1, params) > 0.0 ? 1.0 : 0.0; };
    auto insurer_coefficient = [&](double f2) {
        return f2 * params.n_f * params.r_f - params.r_c + params.h_eps();
    };

    FractionPair fp;
    if (f2_override) {
        fp.f2 = *f2_override;
        fp.f1 = insurer_coefficient(fp.f2) < 0.0 ? 1.0 : 0.0;
    } else {
        // Insurer cost is f1*p*coefficient(R(f1)): compare the two corners.
        const double cost_at_one = params.p * insurer_coefficient(follower(1.0));
        fp.f1 = cost_at_one < 0.0 ? 1.0 : 0.0;
        fp.f2 = follower(fp.f1);
    }

    BonusPolicy no_bonus;
    no_bonus.alpha = 0.0;
    return make_report(fp, params, no_bonus);
}

double insurer_response_f1(double f2, const ModelParams& params, const BonusPolicy& policy,
                           const SolveSettings& settings) {
    require_fraction_input(f2, "f2");
    auto cost = [&](double f1) { return insurer_cost_reduced({f1, f2}, params, policy); };
    return scalar_optimize(cost, {0.0, 1.0}, settings, Sense::minimize).x;
}

GameTrace play_repeated(std::size_t rounds, const ModelParams& params, const BonusPolicy& policy,
                        const SolveSettings& settings, double inflation_rate, UpdateOrder order) {
    if (rounds == 0) throw InvariantError("constraint violated: rounds >= 1");
    if (!(inflation_rate > 0.0) || !std::isfinite(inflation_rate)) {
        throw InvariantError("constraint violated: inflation_rate > 0");
    }

    GameTrace trace;
    trace.inflation_rate = inflation_rate;
    trace.rounds.reserve(rounds);

    EquilibriumReport first = solve_stackelberg(params, policy, settings);
    trace.rounds.push_back({1, first.fractions, first});

    ModelParams current = params;
    FractionPair prev = first.fractions;
    for (std::size_t k = 2; k <= rounds; ++k) {
        current.r_f *= inflation_rate;
        current.r_c *= inflation_rate;

        FractionPair next;
        next.f1 = insurer_response_f1(prev.f2, current, policy, settings);
        next.f2 = best_response_f2(order == UpdateOrder::sequential ? next.f1 : prev.f1, current,
                                   policy);
        EquilibriumReport rep = make_report(next, current, policy);
        trace.rounds.push_back({k, next, rep});
        prev = next;
    }
    return trace;
}

}  // namespace capfee
