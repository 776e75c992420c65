#include "rapdibc/sweep.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <thread>

#include "rapdibc/integer.hpp"
#include "rapdibc/tolerance.hpp"
#include "solve_impl.hpp"

namespace rapdibc {

void shift_partition(BookkeepingState& st, const Instance& inst, Objective phi,
                     const PartitionVector& k, double lambda_k) {
    assert(!k.empty());
    const int t = k.back();
    assert(t < inst.n());
    const int old_j = st.interval[t];
    assert(old_j >= 1);

    const double b_t = st.b[t];
    const double old_lo = st.lower[t];
    const double old_up = st.upper[t];
    const double old_alpha = old_lo + b_t;
    const double old_beta = old_up + b_t;

    // Round 1: remove variable t's contribution at lambda_k under its old box.
    if (lambda_k < old_alpha) {
        st.B -= old_lo;
        st.V_B -= eval(phi, old_alpha);
    } else if (lambda_k < old_beta) {
        st.F -= b_t;
        st.N_F -= 1;
    } else {
        st.B -= old_up;
        st.V_B -= eval(phi, old_beta);
    }
    // Any queued entries of t are now stale.
    st.epoch[t] += 1;

    // Round 2: add the contribution under the box one interval down, queueing
    // only the breakpoints the search has not yet passed.
    const int new_j = old_j - 1;
    const double new_lo = inst.lower(t, new_j);
    const double new_up = inst.upper(t, new_j);
    const double new_alpha = new_lo + b_t;
    const double new_beta = new_up + b_t;
    st.interval[t] = new_j;
    st.lower[t] = new_lo;
    st.upper[t] = new_up;

    if (lambda_k < new_alpha) {
        st.B += new_lo;
        st.V_B += eval(phi, new_alpha);
        st.lower_queue.push({new_alpha, t, st.epoch[t]});
        st.upper_queue.push({new_beta, t, st.epoch[t]});
    } else if (lambda_k < new_beta) {
        st.F += b_t;
        st.N_F += 1;
        st.upper_queue.push({new_beta, t, st.epoch[t]});
    } else {
        st.B += new_up;
        st.V_B += eval(phi, new_beta);
    }
}

namespace {

struct SweepOutcome {
    SweepRecord record;
    std::uint64_t processed = 0;
    std::uint64_t violations = 0;
};

// Accepts a candidate into the reduction; ties within tolerance go to the
// lexicographically smallest partition. Candidates arrive in lexicographic
// partition order, so first-seen wins among ties.
void offer(SweepRecord& rec, double value, const PartitionVector& k, double lambda) {
    if (!std::isfinite(rec.best_value)) {
        rec.best_value = value;
        rec.best_partition = k;
        rec.best_lambda = lambda;
    } else if (tol::eq(value, rec.best_value)) {
        if (lexicographic_less(k, rec.best_partition)) {
            rec.best_value = value;
            rec.best_partition = k;
            rec.best_lambda = lambda;
        }
    } else if (value < rec.best_value) {
        rec.best_value = value;
        rec.best_partition = k;
        rec.best_lambda = lambda;
    }
}

// One resumable breakpoint search covering every completion of the prefix:
// partitions (prefix..., t) for t = prefix.back() .. n.
SweepOutcome run_sweep(const Instance& inst, Objective phi, double R,
                       const PartitionVector& prefix, bool integer_mode,
                       bool log_partitions) {
    const int n = inst.n();
    const int m = inst.m();
    SweepOutcome out;

    int tail = prefix.empty() ? 0 : prefix.back();
    PartitionVector k = prefix;
    k.push_back(tail);

    // Feasibility window for the current partition, maintained in O(1) as the
    // tail advances. Both sums only decrease along the sweep.
    double sum_lower = 0.0;
    double sum_upper = 0.0;
    {
        std::vector<int> assign = partition_assignment(k, n);
        for (int i = 0; i < n; ++i) {
            sum_lower += inst.lower(i, assign[i]);
            sum_upper += inst.upper(i, assign[i]);
        }
    }

    BookkeepingState state;
    bool state_valid = false;
    double prev_lambda = 0.0;
    bool have_prev = false;

    for (;;) {
        if (tol::gt(R, sum_upper)) {
            // Too little capacity; later partitions have even less.
            const std::uint64_t remaining = static_cast<std::uint64_t>(n - tail) + 1;
            out.processed += remaining;
            if (log_partitions) {
                PartitionVector kk = k;
                for (int t = tail; t <= n; ++t) {
                    kk.back() = t;
                    out.record.log.push_back({kk, 0.0, 0.0, false});
                }
            }
            break;
        }

        ++out.processed;
        if (tol::lt(R, sum_lower)) {
            // Not yet enough room below; the feasible tails start later.
            if (log_partitions) out.record.log.push_back({k, 0.0, 0.0, false});
            state_valid = false;
            have_prev = false;
        } else {
            if (!state_valid) {
                state = init_state(inst, k, phi);
                state_valid = true;
                have_prev = false;
            }
            MultiplierResult res = advance(state, phi, R);
            if (res.status == SearchStatus::found) {
                if (have_prev && !(res.lambda > prev_lambda)) ++out.violations;
                prev_lambda = res.lambda;
                have_prev = true;
                const double value =
                    integer_mode
                        ? integer_value(res.lambda, state.V_B, state.N_F, phi, n)
                        : res.value;
                offer(out.record, value, k, res.lambda);
                if (log_partitions) out.record.log.push_back({k, res.lambda, value, true});
            } else {
                // Borderline of the tolerance window; treat as infeasible.
                if (log_partitions) out.record.log.push_back({k, 0.0, 0.0, false});
                state_valid = false;
                have_prev = false;
            }
        }

        if (tail == n) break;

        // Move variable `tail` down from the last interval to the one below.
        sum_lower += inst.lower(tail, m - 2) - inst.lower(tail, m - 1);
        sum_upper += inst.upper(tail, m - 2) - inst.upper(tail, m - 1);
        if (state_valid && have_prev)
            shift_partition(state, inst, phi, k, prev_lambda);
        else
            state_valid = false;
        ++tail;
        k.back() = tail;
    }
    return out;
}

Solution finalize(const Instance& inst, bool integer_mode, const SweepRecord& best) {
    Solution sol;
    if (!std::isfinite(best.best_value)) {
        sol.status = SolveStatus::infeasible;
        return sol;
    }
    sol.status = SolveStatus::optimal;
    sol.partition = best.best_partition;
    sol.lambda = best.best_lambda;
    sol.objective = best.best_value;
    if (integer_mode) {
        std::vector<std::int64_t> xi =
            integer_reconstruct(inst, best.best_partition, best.best_lambda);
        sol.x.assign(xi.begin(), xi.end());
    } else {
        sol.x = reconstruct(inst, best.best_partition, best.best_lambda);
    }
    return sol;
}

}  // namespace

Solution solve_impl(const Instance& inst, Objective phi, double R, bool integer_mode,
                    const SolveOptions& options, SweepStats* stats,
                    SweepRecord* record) {
    validate(inst);
    const int n = inst.n();
    const int m = inst.m();

    SweepRecord best;
    SweepStats local_stats;

    if (m == 1) {
        // Single box subproblem; no partitions to sweep.
        local_stats.sweeps = 1;
        local_stats.partitions_processed = 1;
        PartitionVector empty;
        double sum_lower = 0.0, sum_upper = 0.0;
        for (int i = 0; i < n; ++i) {
            sum_lower += inst.first_lower(i);
            sum_upper += inst.last_upper(i);
        }
        if (tol::ge(R, sum_lower) && tol::le(R, sum_upper)) {
            BookkeepingState state = init_state(inst, empty, phi);
            MultiplierResult res = advance(state, phi, R);
            if (res.status == SearchStatus::found) {
                const double value =
                    integer_mode ? integer_value(res.lambda, state.V_B, state.N_F, phi, n)
                                 : res.value;
                offer(best, value, empty, res.lambda);
                if (options.log_partitions)
                    best.log.push_back({empty, res.lambda, value, true});
            }
        }
        if (options.log_partitions && best.log.empty())
            best.log.push_back({empty, 0.0, 0.0, false});
    } else {
        const std::vector<PartitionVector> prefixes = enumerate_subpartitions(n, m);
        local_stats.sweeps = prefixes.size();

        const unsigned threads =
            std::min<unsigned>(std::max(1u, options.threads),
                               static_cast<unsigned>(prefixes.size()));
        std::vector<SweepOutcome> outcomes(prefixes.size());
        if (threads <= 1) {
            for (std::size_t i = 0; i < prefixes.size(); ++i)
                outcomes[i] = run_sweep(inst, phi, R, prefixes[i], integer_mode,
                                        options.log_partitions);
        } else {
            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= prefixes.size()) return;
                    outcomes[i] = run_sweep(inst, phi, R, prefixes[i], integer_mode,
                                            options.log_partitions);
                }
            };
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (std::thread& t : pool) t.join();
        }

        // Deterministic reduction in prefix order regardless of scheduling.
        for (SweepOutcome& o : outcomes) {
            local_stats.partitions_processed += o.processed;
            local_stats.monotonicity_violations += o.violations;
            if (std::isfinite(o.record.best_value))
                offer(best, o.record.best_value, o.record.best_partition,
                      o.record.best_lambda);
            if (options.log_partitions)
                best.log.insert(best.log.end(), o.record.log.begin(), o.record.log.end());
        }
    }

    if (stats) *stats = local_stats;
    Solution sol = finalize(inst, integer_mode, best);
    if (record) *record = std::move(best);
    return sol;
}

Solution solve(const Instance& inst, Objective phi, double R,
               const SolveOptions& options, SweepStats* stats, SweepRecord* record) {
    return solve_impl(inst, phi, R, /*integer_mode=*/false, options, stats, record);
}

}  // namespace rapdibc
