#include <algorithm>
#include <cmath>

#include "capfee/solver.hpp"

namespace capfee {

void SolveSettings::validate() const {
    if (grid_points < 3) throw InvariantError("constraint violated: grid_points >= 3");
    if (!(refine_tol > 0.0 && refine_tol < 1e-2)) {
        throw InvariantError("constraint violated: 0 < refine_tol < 1e-2");
    }
    if (max_refine_iters < 1) throw InvariantError("constraint violated: max_refine_iters >= 1");
}

ScalarOptimum scalar_optimize(const std::function<double(double)>& objective, Interval interval,
                              const SolveSettings& settings, Sense sense) {
    settings.validate();
    if (!(interval.hi - interval.lo > 0.0)) {
        throw InvariantError("degenerate interval: width must be positive");
    }

    // Internally everything is a minimization.
    const double sign = sense == Sense::minimize ? 1.0 : -1.0;
    auto f = [&](double x) { return sign * objective(x); };

    const std::size_t n = settings.grid_points;
    const double width = interval.hi - interval.lo;
    auto node = [&](std::size_t i) {
        return i + 1 == n ? interval.hi
                          : interval.lo + width * static_cast<double>(i) / static_cast<double>(n - 1);
    };

    std::size_t best_i = 0;
    double best_v = f(node(0));
    for (std::size_t i = 1; i < n; ++i) {
        const double v = f(node(i));
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }

    double a = node(best_i == 0 ? 0 : best_i - 1);
    double b = node(std::min(best_i + 1, n - 1));

    constexpr double inv_phi = 0.6180339887498948482;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (std::size_t it = 0; it < settings.max_refine_iters && (b - a) >= settings.refine_tol; ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }

    const double x_ref = fc <= fd ? c : d;
    const double v_ref = std::min(fc, fd);

    ScalarOptimum out;
    if (v_ref < best_v) {
        out = {x_ref, v_ref};
    } else {
        out = {node(best_i), best_v};
    }
    out.value *= sign;
    return out;
}

}  // namespace capfee
