#include "rapdibc/integer.hpp"

#include <cmath>

#include "rapdibc/tolerance.hpp"
#include "solve_impl.hpp"

namespace rapdibc {

std::int64_t ceil_count(double lambda, int n_f, int n) {
    const double q = n_f * (lambda - std::floor(lambda));
    const double rounded = std::round(q);
    if (std::abs(q - rounded) > n * tol::relative)
        throw NonIntegralData("active fractional mass " + std::to_string(q) +
                              " is not integral; instance data is not integer");
    return static_cast<std::int64_t>(rounded);
}

double integer_value(double lambda, double v_b, int n_f, Objective phi, int n) {
    const std::int64_t up = ceil_count(lambda, n_f, n);
    return v_b + static_cast<double>(up) * eval(phi, std::ceil(lambda)) +
           static_cast<double>(n_f - up) * eval(phi, std::floor(lambda));
}

std::vector<std::int64_t> integer_reconstruct(const Instance& inst,
                                              const PartitionVector& k,
                                              double lambda) {
    if (!inst.integer_data())
        throw NonIntegralData("integer reconstruction requires an integer instance");
    const int n = inst.n();
    const std::vector<int> assign = partition_assignment(k, n);

    std::vector<std::int64_t> x(n);
    std::vector<int> active;
    active.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double lo = inst.lower(i, assign[i]);
        const double up = inst.upper(i, assign[i]);
        const double alpha = lo + inst.b(i);
        const double beta = up + inst.b(i);
        // Same classification the positioned search uses: a variable whose
        // upper breakpoint equals lambda counts as clamped, which also covers
        // degenerate one-point intervals.
        if (lambda >= beta) {
            x[i] = static_cast<std::int64_t>(std::llround(up));
        } else if (lambda >= alpha) {
            active.push_back(i);
        } else {
            x[i] = static_cast<std::int64_t>(std::llround(lo));
        }
    }

    const int n_f = static_cast<int>(active.size());
    const std::int64_t up_count = ceil_count(lambda, n_f, n);
    const std::int64_t lam_ceil = static_cast<std::int64_t>(std::ceil(lambda));
    const std::int64_t lam_floor = static_cast<std::int64_t>(std::floor(lambda));
    for (int pos = 0; pos < n_f; ++pos) {
        const int i = active[pos];
        const std::int64_t b_i = static_cast<std::int64_t>(std::llround(inst.b(i)));
        x[i] = (pos < up_count ? lam_ceil : lam_floor) - b_i;
    }
    return x;
}

Solution solve_integer(const Instance& inst, Objective phi, double R,
                       const SolveOptions& options, SweepStats* stats,
                       SweepRecord* record) {
    if (!inst.integer_data())
        throw NonIntegralData("solve_integer requires an integer instance");
    return solve_impl(inst, phi, R, /*integer_mode=*/true, options, stats, record);
}

}  // namespace rapdibc
