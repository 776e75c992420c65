#include "rapdibc/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "rapdibc/tolerance.hpp"

namespace rapdibc {

namespace {

double checked_pow_count(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < exp; ++i) {
        if (total > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
        total *= base;
    }
    return static_cast<double>(total);
}

struct BoxResult {
    SearchStatus status;
    double lambda;
    double value;
};

// Strict improvement beyond the tie tolerance; the first candidate found in
// enumeration order keeps ties, which makes the oracles deterministic.
bool better_than(double value, double incumbent) {
    if (!std::isfinite(incumbent)) return true;
    return value < incumbent - tol::margin(value, incumbent);
}

BoxResult solve_box(const std::vector<double>& b, const std::vector<double>& lo,
                    const std::vector<double>& up, Objective phi, double R) {
    BookkeepingState st = init_box_state(b, lo, up, phi);
    MultiplierResult res = advance(st, phi, R);
    return {res.status, res.lambda, res.value};
}

}  // namespace

Solution brute_force(const Instance& inst, Objective phi, double R,
                     const OracleOptions& options) {
    const int n = inst.n();
    const int m = inst.m();
    if (checked_pow_count(m, n, options.cap) > static_cast<double>(options.cap))
        throw CapExceeded("m^n interval assignments exceed the oracle cap");

    Solution best;
    std::vector<int> assign(n, 0);
    std::vector<double> lo(n), up(n);
    for (;;) {
        double sum_lo = 0.0, sum_up = 0.0;
        for (int i = 0; i < n; ++i) {
            lo[i] = inst.lower(i, assign[i]);
            up[i] = inst.upper(i, assign[i]);
            sum_lo += lo[i];
            sum_up += up[i];
        }
        if (tol::ge(R, sum_lo) && tol::le(R, sum_up)) {
            BoxResult res = solve_box(inst.b(), lo, up, phi, R);
            if (res.status == SearchStatus::found &&
                better_than(res.value, best.objective)) {
                best.status = SolveStatus::optimal;
                best.objective = res.value;
                best.lambda = res.lambda;
                best.x = reconstruct_box(inst.b(), lo, up, res.lambda);
                best.partition.assign(assign.begin(), assign.end());
            }
        }
        // Next assignment in lexicographic order.
        int pos = n - 1;
        while (pos >= 0 && assign[pos] == m - 1) assign[pos--] = 0;
        if (pos < 0) break;
        ++assign[pos];
    }
    return best;
}

Solution algorithm_enumerative(const Instance& inst, Objective phi, double R,
                               const OracleOptions& options) {
    const int n = inst.n();
    const int m = inst.m();
    if (count_nondecreasing(m - 1, n) > options.cap)
        throw CapExceeded("partition count exceeds the oracle cap");

    Solution best;
    std::vector<double> lo(n), up(n);
    for (const PartitionVector& k : enumerate_partitions(n, m)) {
        const std::vector<int> assign = partition_assignment(k, n);
        double sum_lo = 0.0, sum_up = 0.0;
        for (int i = 0; i < n; ++i) {
            lo[i] = inst.lower(i, assign[i]);
            up[i] = inst.upper(i, assign[i]);
            sum_lo += lo[i];
            sum_up += up[i];
        }
        if (tol::gt(sum_lo, R) || tol::lt(sum_up, R)) continue;  // no feasible point
        BoxResult res = solve_box(inst.b(), lo, up, phi, R);
        if (res.status != SearchStatus::found) continue;
        if (better_than(res.value, best.objective)) {
            best.status = SolveStatus::optimal;
            best.objective = res.value;
            best.lambda = res.lambda;
            best.x = reconstruct_box(inst.b(), lo, up, res.lambda);
            best.partition = k;
        }
    }
    return best;
}

namespace {

// Greedy point of the relaxed box [first_lower_i, last_upper_i]: assign each
// variable the most it can take while reserving the lower bounds of the rest.
std::vector<double> greedy_fill(const Instance& inst, double R) {
    const int n = inst.n();
    std::vector<double> tail_lower(n + 1, 0.0);
    for (int i = n - 1; i >= 0; --i)
        tail_lower[i] = tail_lower[i + 1] + inst.first_lower(i);

    std::vector<double> y(n);
    double remaining = R;
    for (int i = 0; i < n; ++i) {
        double v = std::min(inst.last_upper(i), remaining - tail_lower[i + 1]);
        v = std::max(v, inst.first_lower(i));
        y[i] = v;
        remaining -= v;
    }
    return y;
}

// Index of the unique coordinate lying in a gap, or -1 when y is feasible.
int gap_variable(const Instance& inst, const std::vector<double>& y) {
    for (int i = 0; i < inst.n(); ++i)
        if (!interval_of(inst, i, y[i])) return i;
    return -1;
}

}  // namespace

GreedyResult greedy_feasible(const Instance& inst, double R) {
    const int n = inst.n();
    const int m = inst.m();

    double sum_first_lower = 0.0, sum_last_upper = 0.0;
    for (int i = 0; i < n; ++i) {
        sum_first_lower += inst.first_lower(i);
        sum_last_upper += inst.last_upper(i);
    }
    if (tol::lt(R, sum_first_lower) || tol::gt(R, sum_last_upper))
        return {GreedyStatus::infeasible, {}};

    if (m == 1) return {GreedyStatus::found, greedy_fill(inst, R)};

    const CaseFlags flags = case_flags(inst);
    const double shared_first_upper = inst.shared_upper()[0];
    const double last_lower = inst.shared_lower()[m - 2];

    if (flags.l2) {
        // Everything fits in the first intervals: fill them proportionally.
        double capacity = 0.0;
        for (int i = 0; i < n; ++i) capacity += shared_first_upper - inst.first_lower(i);
        if (tol::le(R, sum_first_lower + capacity)) {
            const double ratio = capacity > 0.0 ? (R - sum_first_lower) / capacity : 0.0;
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i)
                x[i] = inst.first_lower(i) +
                       (shared_first_upper - inst.first_lower(i)) * std::clamp(ratio, 0.0, 1.0);
            return {GreedyStatus::found, x};
        }

        // Greedy fill; if one coordinate lands in a gap, push it up to the
        // next interval and take the difference out of variable 0, which sits
        // in its last interval and is long enough to absorb any gap.
        double tail = 0.0;
        for (int i = 1; i < n; ++i) tail += inst.first_lower(i);
        if (tol::ge(R, last_lower + tail)) {
            std::vector<double> y = greedy_fill(inst, R);
            const int s = gap_variable(inst, y);
            if (s < 0) return {GreedyStatus::found, std::move(y)};
            assert(s > 0);
            int j = 0;
            while (j < m - 1 && !(y[s] < inst.lower(s, j + 1))) ++j;
            assert(j < m - 1);
            const double bump = inst.lower(s, j + 1) - y[s];
            y[s] += bump;
            y[0] -= bump;
            return {GreedyStatus::found, std::move(y)};
        }
    }

    if (flags.f2) {
        // Everything fits in the last intervals: fill them proportionally.
        double capacity = 0.0;
        for (int i = 0; i < n; ++i) capacity += inst.last_upper(i) - last_lower;
        if (tol::ge(R, n * last_lower)) {
            const double ratio = capacity > 0.0 ? (R - n * last_lower) / capacity : 0.0;
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i)
                x[i] = last_lower +
                       (inst.last_upper(i) - last_lower) * std::clamp(ratio, 0.0, 1.0);
            return {GreedyStatus::found, x};
        }

        // Greedy fill with the mirrored repair: push the gap coordinate down
        // to the interval below and give the surplus to variable n-1, whose
        // first interval is long enough to absorb it.
        double head = 0.0;
        for (int i = 0; i + 1 < n; ++i) head += inst.last_upper(i);
        if (tol::le(R, head + shared_first_upper)) {
            std::vector<double> y = greedy_fill(inst, R);
            const int s = gap_variable(inst, y);
            if (s < 0) return {GreedyStatus::found, std::move(y)};
            assert(s + 1 < n);
            int j = 0;
            while (j < m - 1 && !(y[s] < inst.lower(s, j + 1))) ++j;
            assert(j < m - 1);
            const double drop = y[s] - inst.upper(s, j);
            y[s] -= drop;
            y[n - 1] += drop;
            return {GreedyStatus::found, std::move(y)};
        }
    }

    return {GreedyStatus::not_covered, {}};
}

Solution brute_force_integer(const Instance& inst, Objective phi, double R,
                             const OracleOptions& options) {
    if (!inst.integer_data())
        throw NonIntegralData("integer oracle requires an integer instance");
    const int n = inst.n();
    const int m = inst.m();

    // Integer candidates per variable, ascending across the interval union.
    std::vector<std::vector<std::int64_t>> candidates(n);
    double combinations = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            const std::int64_t lo =
                static_cast<std::int64_t>(std::ceil(inst.lower(i, j)));
            const std::int64_t up =
                static_cast<std::int64_t>(std::floor(inst.upper(i, j)));
            for (std::int64_t v = lo; v <= up; ++v) candidates[i].push_back(v);
        }
        if (candidates[i].empty()) return {};  // no integer point at all
        combinations *= static_cast<double>(candidates[i].size());
        if (combinations > static_cast<double>(options.cap))
            throw CapExceeded("integer point count exceeds the oracle cap");
    }

    const std::int64_t target = static_cast<std::int64_t>(std::llround(R));
    if (target != R) return {};  // fractional resource: no integer point sums to it

    // Remaining-sum windows for depth-first pruning.
    std::vector<std::int64_t> tail_min(n + 1, 0), tail_max(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        tail_min[i] = tail_min[i + 1] + candidates[i].front();
        tail_max[i] = tail_max[i + 1] + candidates[i].back();
    }

    Solution best;
    std::vector<std::int64_t> x(n);
    std::vector<double> xd(n);

    auto dfs = [&](auto&& self, int depth, std::int64_t remaining, double cost) -> void {
        if (depth == n) {
            if (remaining == 0 &&
                better_than(cost, best.objective)) {
                best.status = SolveStatus::optimal;
                best.objective = cost;
                for (int i = 0; i < n; ++i) xd[i] = static_cast<double>(x[i]);
                best.x = xd;
            }
            return;
        }
        for (std::int64_t v : candidates[depth]) {
            const std::int64_t rest = remaining - v;
            if (rest < tail_min[depth + 1] || rest > tail_max[depth + 1]) continue;
            x[depth] = v;
            self(self, depth + 1, rest,
                 cost + eval(phi, static_cast<double>(v) + inst.b(depth)));
        }
    };
    dfs(dfs, 0, target, 0.0);
    return best;
}

}  // namespace rapdibc
