#pragma once

// Insurer/practice payment-share model: domain types and pure objective
// evaluation. All money is in dollars per practice per year.

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace capfee {

/// Raised when a value violates a documented type invariant.
class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Economic constants of one practice/insurer pair. Defaults are the
/// published annual estimates for a US primary care practice.
struct ModelParams {
    double p = 1684.0;      ///< patients per practice
    double n_f = 2.24;      ///< visits per FFS patient
    double n_c = 3.44;      ///< visits per capitation patient
    double r_f = 140.41;    ///< FFS revenue per visit
    double r_c = 346.32;    ///< capitation revenue per patient
    double h_f = 9954.00;   ///< hospitalization cost per FFS patient
    double h_c = 9861.85;   ///< hospitalization cost per capitation patient
    double c_d = 63.56;     ///< doctor cost per FFS visit
    double c_n = 24.04;     ///< nurse cost per capitation visit

    /// Hospitalization cost gap h_f - h_c. May be negative.
    [[nodiscard]] double h_eps() const noexcept { return h_f - h_c; }

    /// Throws InvariantError naming the first non-positive field.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

inline constexpr double kUnboundedCutoff = std::numeric_limits<double>::infinity();

/// Insurer-set bonus terms plus the shape of the performance metric
///   z(f1, f2) = kappa * (1 - 2 * f1^exp_f1 * f2^exp_f2).
/// An infinite `xi` disables saturation of the bonus.
struct BonusPolicy {
    double alpha = 682000.0;
    double xi = kUnboundedCutoff;
    double kappa = 0.113;
    double exp_f1 = 0.5;
    double exp_f2 = 2.0;

    [[nodiscard]] bool unbounded() const noexcept { return xi == kUnboundedCutoff; }
    void validate() const;

    bool operator==(const BonusPolicy&) const = default;
};

/// A decision point: FFS patient share (insurer) and FFS visit share (practice).
struct FractionPair {
    double f1 = 0.0;
    double f2 = 0.0;

    void validate() const;

    bool operator==(const FractionPair&) const = default;
};

enum class Regime { interior, boundary, saturated_linear };

[[nodiscard]] std::string_view to_string(Regime r) noexcept;

struct EquilibriumReport {
    FractionPair fractions;
    double z_value = 0.0;
    double bonus = 0.0;  ///< positive: insurer pays practice
    double insurer_cost_full = 0.0;
    double insurer_cost_reduced = 0.0;
    double practice_profit_full = 0.0;
    double practice_profit_reduced = 0.0;
    Regime regime = Regime::boundary;
};

[[nodiscard]] double perf_metric(const FractionPair& fp, const BonusPolicy& policy);

/// Saturating linear transfer: alpha*clamp(z, -xi, xi).
[[nodiscard]] double bonus(double z, const BonusPolicy& policy);

[[nodiscard]] double insurer_cost_full(const FractionPair& fp, const ModelParams& params,
                                       const BonusPolicy& policy);

/// Insurer cost with the fraction-independent term p*(r_c + h_c) dropped.
[[nodiscard]] double insurer_cost_reduced(const FractionPair& fp, const ModelParams& params,
                                          const BonusPolicy& policy);

[[nodiscard]] double practice_profit_full(const FractionPair& fp, const ModelParams& params,
                                          const BonusPolicy& policy);

/// Practice profit with the f2-independent term (1-f1)*p*(r_c - n_c*c_n) dropped.
[[nodiscard]] double practice_profit_reduced(const FractionPair& fp, const ModelParams& params,
                                             const BonusPolicy& policy);

/// Marginal practice profit per unit f2, excluding the bonus:
///   p * (n_f*f1*(r_f - c_d) + n_c*c_n*(1 - f1)).
[[nodiscard]] double practice_visit_slope(double f1, const ModelParams& params) noexcept;

/// Evaluates every objective at `fp` and labels the regime.
[[nodiscard]] EquilibriumReport make_report(const FractionPair& fp, const ModelParams& params,
                                            const BonusPolicy& policy);

}  // namespace capfee
