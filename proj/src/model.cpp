#include "capfee/model.hpp"

#include <cmath>

namespace capfee {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvariantError(std::string("constraint violated: ") + name + " > 0");
    }
}

void require_fraction(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InvariantError(std::string("constraint violated: 0 <= ") + name + " <= 1");
    }
}

}  // namespace

void ModelParams::validate() const {
    require_positive(p, "p");
    require_positive(n_f, "n_f");
    require_positive(n_c, "n_c");
    require_positive(r_f, "r_f");
    require_positive(r_c, "r_c");
    require_positive(h_f, "h_f");
    require_positive(h_c, "h_c");
    require_positive(c_d, "c_d");
    require_positive(c_n, "c_n");
}

void BonusPolicy::validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw InvariantError("constraint violated: alpha >= 0");
    }
    if (!(xi > 0.0)) {
        throw InvariantError("constraint violated: xi > 0 or xi = inf");
    }
    require_positive(kappa, "kappa");
    require_positive(exp_f1, "exp_f1");
    require_positive(exp_f2, "exp_f2");
}

void FractionPair::validate() const {
    require_fraction(f1, "f1");
    require_fraction(f2, "f2");
}

std::string_view to_string(Regime r) noexcept {
    switch (r) {
        case Regime::interior: return "interior";
        case Regime::boundary: return "boundary";
        case Regime::saturated_linear: return "saturated-linear";
    }
    return "unknown";
}

double perf_metric(const FractionPair& fp, const BonusPolicy& policy) {
    const double penalty = std::pow(fp.f1, policy.exp_f1) * std::pow(fp.f2, policy.exp_f2);
    return policy.kappa * (1.0 - 2.0 * penalty);
}

double bonus(double z, const BonusPolicy& policy) {
    if (z > policy.xi) return policy.alpha * policy.xi;
    if (z < -policy.xi) return -policy.alpha * policy.xi;
    return policy.alpha * z;
}

double insurer_cost_full(const FractionPair& fp, const ModelParams& m, const BonusPolicy& policy) {
    const double ffs_patients = fp.f1 * m.p;
    const double cap_patients = (1.0 - fp.f1) * m.p;
    return ffs_patients * (fp.f2 * m.n_f) * m.r_f  // FFS visits
           + cap_patients * m.r_c                  // capitation payments
           + ffs_patients * m.h_f                  // FFS hospitalization
           + cap_patients * m.h_c                  // capitation hospitalization
           + bonus(perf_metric(fp, policy), policy);
}

double insurer_cost_reduced(const FractionPair& fp, const ModelParams& m,
                            const BonusPolicy& policy) {
    return fp.f1 * m.p * (fp.f2 * m.n_f * m.r_f - m.r_c + m.h_eps())
           + bonus(perf_metric(fp, policy), policy);
}

double practice_profit_full(const FractionPair& fp, const ModelParams& m,
                            const BonusPolicy& policy) {
    const double ffs_patients = fp.f1 * m.p;
    const double cap_patients = (1.0 - fp.f1) * m.p;
    return ffs_patients * (fp.f2 * m.n_f) * m.r_f
           + cap_patients * m.r_c
           - ffs_patients * (fp.f2 * m.n_f) * m.c_d
           - cap_patients * ((1.0 - fp.f2) * m.n_c) * m.c_n
           + bonus(perf_metric(fp, policy), policy);
}

double practice_visit_slope(double f1, const ModelParams& m) noexcept {
    return m.p * (m.n_f * f1 * (m.r_f - m.c_d) + m.n_c * m.c_n * (1.0 - f1));
}

double practice_profit_reduced(const FractionPair& fp, const ModelParams& m,
                               const BonusPolicy& policy) {
    return fp.f2 * practice_visit_slope(fp.f1, m) + bonus(perf_metric(fp, policy), policy);
}

EquilibriumReport make_report(const FractionPair& fp, const ModelParams& params,
                              const BonusPolicy& policy) {
    EquilibriumReport r;
    r.fractions = fp;
    r.z_value = perf_metric(fp, policy);
    r.bonus = bonus(r.z_value, policy);
    r.insurer_cost_full = insurer_cost_full(fp, params, policy);
    r.insurer_cost_reduced = insurer_cost_reduced(fp, params, policy);
    r.practice_profit_full = practice_profit_full(fp, params, policy);
    r.practice_profit_reduced = practice_profit_reduced(fp, params, policy);

    const bool interior = fp.f1 > 0.0 && fp.f1 < 1.0 && fp.f2 > 0.0 && fp.f2 < 1.0;
    if (interior) {
        r.regime = Regime::interior;
    } else if (policy.alpha == 0.0 || std::abs(r.z_value) > policy.xi) {
        // bonus is constant around the solution, both players face linear problems
        r.regime = Regime::saturated_linear;
    } else {
        r.regime = Regime::boundary;
    }
    return r;
}

}  // namespace capfee
