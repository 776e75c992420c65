// Shared test utilities: independent reference solvers and instance
// generators. Everything here is deliberately written from the definitions,
// without touching the incremental bookkeeping under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rapdibc/instance.hpp"
#include "rapdibc/objective.hpp"
#include "rapdibc/partition.hpp"
#include "rapdibc/rng.hpp"
#include "rapdibc/simple_rap.hpp"

namespace testutil {

using namespace rapdibc;

// --- small instance builders -------------------------------------------------

inline Instance make_instance(std::vector<double> b, std::vector<double> first_lower,
                              std::vector<double> last_upper,
                              std::vector<double> shared_lower,
                              std::vector<double> shared_upper, double R,
                              bool integer_data = false) {
    RawInstance raw;
    raw.n = static_cast<int>(b.size());
    raw.m = static_cast<int>(shared_lower.size()) + 1;
    raw.b = std::move(b);
    raw.first_lower = std::move(first_lower);
    raw.last_upper = std::move(last_upper);
    raw.shared_lower = std::move(shared_lower);
    raw.shared_upper = std::move(shared_upper);
    raw.resource = R;
    raw.integer_data = integer_data;
    return std::move(canonicalize(raw).instance);
}

// One box per variable (m = 1).
inline Instance box_instance(std::vector<double> b, std::vector<double> lower,
                             std::vector<double> upper, double R,
                             bool integer_data = false) {
    return make_instance(std::move(b), std::move(lower), std::move(upper), {}, {}, R,
                         integer_data);
}

// All variables share the same interval union {first} u interiors u {last}.
inline Instance uniform_instance(int n, std::vector<double> bounds_chain,
                                 std::vector<double> b, double R,
                                 bool integer_data = false) {
    // bounds_chain = l1, u1, l2, u2, ..., lm, um
    const int m = static_cast<int>(bounds_chain.size()) / 2;
    std::vector<double> first_lower(n, bounds_chain[0]);
    std::vector<double> last_upper(n, bounds_chain[2 * m - 1]);
    std::vector<double> shared_lower, shared_upper;
    for (int j = 1; j < m; ++j) shared_lower.push_back(bounds_chain[2 * j]);
    for (int j = 0; j + 1 < m; ++j) shared_upper.push_back(bounds_chain[2 * j + 1]);
    return make_instance(std::move(b), std::move(first_lower), std::move(last_upper),
                         std::move(shared_lower), std::move(shared_upper), R,
                         integer_data);
}

// The n=3 semi-continuous instance on which the quadratic and hinge optima
// part ways: values {0} u [1, 3], R = 3, b = (-0.85, -1.5, -1.5).
inline Instance divergence_instance() {
    return uniform_instance(3, {0.0, 0.0, 1.0, 3.0}, {-0.85, -1.5, -1.5}, 3.0);
}

// --- independent references --------------------------------------------------

inline double z_of(const std::vector<double>& b, const std::vector<double>& lo,
                   const std::vector<double>& up, double lambda) {
    double z = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i)
        z += std::clamp(lambda - b[i], lo[i], up[i]);
    return z;
}

struct BisectionResult {
    bool feasible = false;
    double lambda = 0.0;
    std::vector<double> x;
    double value = 0.0;
};

// Reference solver for the box subproblem via bisection on the multiplier,
// evaluating the allocation total from scratch at every probe.
inline BisectionResult bisect_box(const std::vector<double>& b,
                                  const std::vector<double>& lo,
                                  const std::vector<double>& up, double R,
                                  Objective phi) {
    BisectionResult res;
    double sum_lo = 0.0, sum_up = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        sum_lo += lo[i];
        sum_up += up[i];
    }
    if (R < sum_lo - 1e-9 || R > sum_up + 1e-9) return res;

    double a = lo[0] + b[0], c = up[0] + b[0];
    for (std::size_t i = 0; i < b.size(); ++i) {
        a = std::min(a, lo[i] + b[i]);
        c = std::max(c, up[i] + b[i]);
    }
    a -= 1.0;
    c += 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + c);
        (z_of(b, lo, up, mid) < R ? a : c) = mid;
    }
    res.feasible = true;
    res.lambda = 0.5 * (a + c);
    res.x.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        res.x[i] = std::clamp(res.lambda - b[i], lo[i], up[i]);
    res.value = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) res.value += eval(phi, res.x[i] + b[i]);
    return res;
}

// Grid search over the box with the sum constraint eliminated into the last
// coordinate; refined around the incumbent. n <= 3.
inline double grid_min_box(const std::vector<double>& b, const std::vector<double>& lo,
                           const std::vector<double>& up, double R, Objective phi,
                           int divisions = 400, int refinements = 2) {
    const int n = static_cast<int>(b.size());
    double best = std::numeric_limits<double>::infinity();

    auto consider = [&](const std::vector<double>& x) {
        for (int i = 0; i < n; ++i)
            if (x[i] < lo[i] - 1e-12 || x[i] > up[i] + 1e-12) return;
        double v = 0.0;
        for (int i = 0; i < n; ++i) v += eval(phi, x[i] + b[i]);
        best = std::min(best, v);
    };

    std::vector<double> cur_lo = lo, cur_up = up;
    std::vector<double> best_x;
    for (int round = 0; round <= refinements; ++round) {
        double round_best = std::numeric_limits<double>::infinity();
        std::vector<double> round_x;
        std::vector<double> x(n);
        if (n == 1) {
            x[0] = R;
            consider(x);
            round_x = x;
        } else if (n == 2) {
            for (int i = 0; i <= divisions; ++i) {
                x[0] = cur_lo[0] + (cur_up[0] - cur_lo[0]) * i / divisions;
                x[1] = R - x[0];
                double v = eval(phi, x[0] + b[0]) + eval(phi, x[1] + b[1]);
                if (x[1] >= lo[1] - 1e-12 && x[1] <= up[1] + 1e-12 && v < round_best) {
                    round_best = v;
                    round_x = x;
                }
                consider(x);
            }
        } else {
            for (int i = 0; i <= divisions; ++i) {
                x[0] = cur_lo[0] + (cur_up[0] - cur_lo[0]) * i / divisions;
                for (int j = 0; j <= divisions; ++j) {
                    x[1] = cur_lo[1] + (cur_up[1] - cur_lo[1]) * j / divisions;
                    x[2] = R - x[0] - x[1];
                    double v = eval(phi, x[0] + b[0]) + eval(phi, x[1] + b[1]) +
                               eval(phi, x[2] + b[2]);
                    if (x[2] >= lo[2] - 1e-12 && x[2] <= up[2] + 1e-12 && v < round_best) {
                        round_best = v;
                        round_x = x;
                    }
                    consider(x);
                }
            }
        }
        if (round_x.empty()) break;
        // Shrink the search window around the incumbent.
        for (int i = 0; i < n; ++i) {
            const double step = (cur_up[i] - cur_lo[i]) / divisions;
            cur_lo[i] = std::max(lo[i], round_x[i] - 2 * step);
            cur_up[i] = std::min(up[i], round_x[i] + 2 * step);
        }
    }
    return best;
}

// Bookkeeping sums recomputed from the definitions for a search positioned at
// lambda: breakpoints with value <= lambda have been consumed.
struct ScratchState {
    double B = 0.0, F = 0.0, V_B = 0.0;
    int N_F = 0;
};

inline ScratchState scratch_state_at(const std::vector<double>& b,
                                     const std::vector<double>& lo,
                                     const std::vector<double>& up, Objective phi,
                                     double lambda) {
    ScratchState s;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double alpha = lo[i] + b[i];
        const double beta = up[i] + b[i];
        if (lambda >= beta) {
            s.B += up[i];
            s.V_B += eval(phi, beta);
        } else if (lambda >= alpha) {
            s.F += b[i];
            s.N_F += 1;
        } else {
            s.B += lo[i];
            s.V_B += eval(phi, alpha);
        }
    }
    return s;
}

inline ScratchState scratch_state_at(const Instance& inst, const PartitionVector& k,
                                     Objective phi, double lambda) {
    const int n = inst.n();
    std::vector<int> assign = partition_assignment(k, n);
    std::vector<double> lo(n), up(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = inst.lower(i, assign[i]);
        up[i] = inst.upper(i, assign[i]);
    }
    return scratch_state_at(inst.b(), lo, up, phi, lambda);
}

// --- feasibility and integer optimality checks -------------------------------

inline bool feasible_point(const Instance& inst, const std::vector<double>& x,
                           double R) {
    if (static_cast<int>(x.size()) != inst.n()) return false;
    double sum = 0.0;
    for (int i = 0; i < inst.n(); ++i) {
        if (!interval_of(inst, i, x[i])) return false;
        sum += x[i];
    }
    return std::abs(sum - R) <= inst.n() * std::max(1e-12, 1e-9 * std::abs(R));
}

// Coordinate-wise integer optimality conditions at the half-integer
// multiplier between floor(lambda) and ceil(lambda).
inline bool integer_conditions_hold(const Instance& inst, const PartitionVector& k,
                                    double lambda, const std::vector<std::int64_t>& x) {
    const double lam_mid = 0.5 * (std::floor(lambda) + std::ceil(lambda));
    const std::vector<int> assign = partition_assignment(k, inst.n());
    for (int i = 0; i < inst.n(); ++i) {
        const std::int64_t lo = static_cast<std::int64_t>(inst.lower(i, assign[i]));
        const std::int64_t up = static_cast<std::int64_t>(inst.upper(i, assign[i]));
        const std::int64_t bi = static_cast<std::int64_t>(inst.b(i));
        const double alpha = static_cast<double>(lo + bi);
        const double beta = static_cast<double>(up + bi);
        bool ok = false;
        if (lam_mid <= alpha) ok = ok || x[i] == lo;
        if (lam_mid >= beta) ok = ok || x[i] == up;
        if (lam_mid >= alpha && lam_mid <= beta) {
            const std::int64_t flo = static_cast<std::int64_t>(std::floor(lam_mid));
            const std::int64_t fhi = static_cast<std::int64_t>(std::ceil(lam_mid));
            if (lam_mid == std::floor(lam_mid))
                ok = ok || x[i] == flo - bi;
            else
                ok = ok || x[i] == flo - bi || x[i] == fhi - bi;
        }
        if (!ok) return false;
    }
    return true;
}

// --- random instance generators ----------------------------------------------

// Admissible integer instance with all data in a small window; roughly half
// the draws force each structural case so all four combinations appear.
inline Instance random_integer_instance(Rng& rng, int n, int m, int max_bound = 8) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RawInstance raw;
        raw.n = n;
        raw.m = m;
        raw.integer_data = true;

        std::vector<std::int64_t> b(n);
        for (auto& v : b) v = rng.uniform_int(-4, 4);
        std::sort(b.begin(), b.end(), std::greater<>());
        raw.b.assign(b.begin(), b.end());

        std::int64_t first_upper = max_bound;
        std::int64_t last_lower = 0;
        std::int64_t max_gap = 0;
        const bool force_f2 = rng.uniform_int(0, 1) == 1;
        const bool force_l2 = rng.uniform_int(0, 1) == 1;
        if (m >= 2) {
            std::vector<std::int64_t> gaps(m - 1), widths(m - 1, 0);
            for (auto& g : gaps) g = rng.uniform_int(1, 2);
            for (int j = 1; j < m - 1; ++j) widths[j] = rng.uniform_int(0, 2);
            max_gap = *std::max_element(gaps.begin(), gaps.end());

            first_upper = force_f2 ? rng.uniform_int(max_gap, max_gap + 2)
                                   : rng.uniform_int(0, 2);
            raw.shared_upper.resize(m - 1);
            raw.shared_lower.resize(m - 1);
            std::int64_t cur = first_upper;
            for (int j = 0; j < m - 1; ++j) {
                raw.shared_upper[j] = static_cast<double>(cur);
                const std::int64_t next_lower = cur + gaps[j];
                raw.shared_lower[j] = static_cast<double>(next_lower);
                cur = next_lower + (j + 1 < m - 1 ? widths[j + 1] : 0);
            }
            last_lower = static_cast<std::int64_t>(raw.shared_lower[m - 2]);
            if (last_lower + (force_l2 ? max_gap : 0) > max_bound) continue;
        }

        raw.first_lower.resize(n);
        raw.last_upper.resize(n);
        if (m == 1) {
            for (int i = 0; i < n; ++i) {
                const std::int64_t lo = rng.uniform_int(0, max_bound);
                raw.first_lower[i] = static_cast<double>(lo);
                raw.last_upper[i] = static_cast<double>(rng.uniform_int(lo, max_bound));
            }
        } else {
            std::vector<std::int64_t> fl(n), lu(n);
            const std::int64_t fl_max = force_f2 ? first_upper - max_gap : first_upper;
            const std::int64_t lu_min = force_l2 ? last_lower + max_gap : last_lower;
            for (int i = 0; i < n; ++i) fl[i] = rng.uniform_int(0, fl_max);
            for (int i = 0; i < n; ++i) lu[i] = rng.uniform_int(lu_min, max_bound);
            if (!force_f2) std::sort(fl.begin(), fl.end());               // f1
            if (!force_l2) std::sort(lu.begin(), lu.end(), std::greater<>());  // l1
            raw.first_lower.assign(fl.begin(), fl.end());
            raw.last_upper.assign(lu.begin(), lu.end());
        }

        std::int64_t sum_lo = 0, sum_up = 0;
        for (int i = 0; i < n; ++i) {
            sum_lo += static_cast<std::int64_t>(raw.first_lower[i]);
            sum_up += static_cast<std::int64_t>(raw.last_upper[i]);
        }
        raw.resource = static_cast<double>(rng.uniform_int(sum_lo - 1, sum_up + 1));

        try {
            Canonicalized canon = canonicalize(raw);
            if (!case_flags(canon.instance).admissible()) continue;
            return std::move(canon.instance);
        } catch (const Error&) {
            continue;
        }
    }
    throw GenerationFailed("random_integer_instance: no admissible draw");
}

// Continuous instance forcing the requested structural case ('1' or '2' on
// each side). Returns a validated, admissible instance.
inline Instance random_case_instance(Rng& rng, char f_case, char l_case, int n, int m) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RawInstance raw;
        raw.n = n;
        raw.m = m;

        std::vector<double> b(n);
        for (auto& v : b) v = rng.uniform(-2.0, 2.0);
        std::sort(b.begin(), b.end(), std::greater<>());
        raw.b = b;

        std::vector<double> gaps(m - 1);
        for (auto& g : gaps) g = rng.uniform(0.2, 1.0);
        const double max_gap = *std::max_element(gaps.begin(), gaps.end());

        const double first_upper =
            f_case == '2' ? max_gap + rng.uniform(0.0, 1.0) : rng.uniform(0.5, 1.5);
        raw.shared_upper.resize(m - 1);
        raw.shared_lower.resize(m - 1);
        double cur = first_upper;
        for (int j = 0; j < m - 1; ++j) {
            raw.shared_upper[j] = cur;
            raw.shared_lower[j] = cur + gaps[j];
            cur = raw.shared_lower[j] + (j + 1 < m - 1 ? rng.uniform(0.1, 0.8) : 0.0);
        }
        const double last_lower = raw.shared_lower[m - 2];

        raw.first_lower.resize(n);
        raw.last_upper.resize(n);
        for (int i = 0; i < n; ++i) {
            raw.first_lower[i] = f_case == '2' ? rng.uniform(0.0, first_upper - max_gap)
                                               : rng.uniform(0.0, first_upper);
            raw.last_upper[i] = l_case == '2'
                                    ? last_lower + max_gap + rng.uniform(0.0, 2.0)
                                    : last_lower + rng.uniform(0.1, 2.0);
        }
        if (f_case == '1') std::sort(raw.first_lower.begin(), raw.first_lower.end());
        if (l_case == '1')
            std::sort(raw.last_upper.begin(), raw.last_upper.end(), std::greater<>());

        raw.resource = 0.0;  // caller picks R; keep the instance feasible-range agnostic
        try {
            Canonicalized canon = canonicalize(raw);
            const CaseFlags flags = case_flags(canon.instance);
            if (f_case == '1' && !flags.f1) continue;
            if (f_case == '2' && !flags.f2) continue;
            if (l_case == '1' && !flags.l1) continue;
            if (l_case == '2' && !flags.l2) continue;
            return std::move(canon.instance);
        } catch (const Error&) {
            continue;
        }
    }
    throw GenerationFailed("random_case_instance: no admissible draw");
}

}  // namespace testutil
