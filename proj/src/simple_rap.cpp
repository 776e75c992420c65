#include "rapdibc/simple_rap.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "rapdibc/tolerance.hpp"

namespace rapdibc {

namespace {

// Min-heap order on (value, var); the var tie-break keeps pops deterministic.
struct EntryAfter {
    bool operator()(const BreakpointEntry& a, const BreakpointEntry& b) const {
        if (a.value != b.value) return a.value > b.value;
        return a.var > b.var;
    }
};

}  // namespace

void BreakpointQueue::push(BreakpointEntry e) {
    heap_.push_back(e);
    std::push_heap(heap_.begin(), heap_.end(), EntryAfter{});
}

void BreakpointQueue::pop() {
    std::pop_heap(heap_.begin(), heap_.end(), EntryAfter{});
    heap_.pop_back();
}

namespace {

// Drops stale entries (epoch mismatch) until the top is live.
const BreakpointEntry* live_top(BreakpointQueue& q,
                                const std::vector<std::uint32_t>& epoch) {
    while (!q.empty()) {
        const BreakpointEntry& e = q.top();
        if (e.epoch == epoch[e.var]) return &e;
        q.pop();
    }
    return nullptr;
}

enum class Kind { lower, upper };

// Next breakpoint in (value, lower-before-upper, var) order.
struct NextBreakpoint {
    const BreakpointEntry* entry;
    Kind kind;
};

NextBreakpoint peek_min(BookkeepingState& st) {
    const BreakpointEntry* a = live_top(st.lower_queue, st.epoch);
    const BreakpointEntry* b = live_top(st.upper_queue, st.epoch);
    if (a && (!b || a->value <= b->value)) return {a, Kind::lower};
    return {b, Kind::upper};
}

// Running-sum updates for one consumed breakpoint: the variable enters the
// active set at its lower breakpoint and leaves at its upper one.
void apply_consume(BookkeepingState& st, Objective phi, int var, Kind kind) {
    if (kind == Kind::lower) {
        st.B -= st.lower[var];
        st.F += st.b[var];
        st.N_F += 1;
        st.V_B -= eval(phi, st.lower[var] + st.b[var]);
        st.lower_queue.pop();
    } else {
        st.B += st.upper[var];
        st.F -= st.b[var];
        st.N_F -= 1;
        st.V_B += eval(phi, st.upper[var] + st.b[var]);
        st.upper_queue.pop();
    }
}

}  // namespace

BookkeepingState init_box_state(std::vector<double> b, std::vector<double> lower,
                                std::vector<double> upper, Objective phi) {
    const int n = static_cast<int>(b.size());
    BookkeepingState st;
    st.b = std::move(b);
    st.lower = std::move(lower);
    st.upper = std::move(upper);
    st.interval.assign(n, 0);
    st.epoch.assign(n, 0);
    st.lower_queue.reserve(n);
    st.upper_queue.reserve(n);
    for (int i = 0; i < n; ++i) {
        st.B += st.lower[i];
        st.V_B += eval(phi, st.lower[i] + st.b[i]);
        st.lower_queue.push({st.lower[i] + st.b[i], i, 0});
        st.upper_queue.push({st.upper[i] + st.b[i], i, 0});
    }
    return st;
}

BookkeepingState init_state(const Instance& inst, const PartitionVector& k,
                            Objective phi) {
    const int n = inst.n();
    std::vector<int> assign = partition_assignment(k, n);
    std::vector<double> lo(n), up(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = inst.lower(i, assign[i]);
        up[i] = inst.upper(i, assign[i]);
    }
    BookkeepingState st = init_box_state(inst.b(), std::move(lo), std::move(up), phi);
    st.interval = std::move(assign);
    return st;
}

void consume_up_to(BookkeepingState& st, Objective phi, double lambda) {
    for (;;) {
        NextBreakpoint next = peek_min(st);
        if (!next.entry || next.entry->value > lambda) return;
        st.last_consumed = next.entry->value;
        apply_consume(st, phi, next.entry->var, next.kind);
    }
}

MultiplierResult advance(BookkeepingState& st, Objective phi, double R) {
    for (;;) {
        NextBreakpoint next = peek_min(st);
        if (!next.entry) {
            // All variables clamped at their upper bound; z is flat at B.
            if (tol::eq(st.B, R))
                return {SearchStatus::found, st.last_consumed,
                        st.V_B + st.N_F * eval(phi, st.last_consumed)};
            return {st.B < R ? SearchStatus::infeasible_high
                             : SearchStatus::infeasible_low,
                    0.0, 0.0};
        }

        const double bp = next.entry->value;
        const double z = st.B + st.N_F * bp - st.F;
        if (tol::eq(z, R)) {
            // The multiplier is this breakpoint. Settle the remaining ties at
            // its value so the state matches a fresh search positioned here;
            // the running sums and z are invariant under those pops.
            consume_up_to(st, phi, bp);
            return {SearchStatus::found, bp, st.V_B + st.N_F * eval(phi, bp)};
        }
        if (z > R) {
            if (st.N_F == 0) return {SearchStatus::infeasible_low, 0.0, 0.0};
            const double lambda = (R - st.B + st.F) / st.N_F;
            return {SearchStatus::found, lambda,
                    st.V_B + st.N_F * eval(phi, lambda)};
        }
        st.last_consumed = bp;
        apply_consume(st, phi, next.entry->var, next.kind);
    }
}

std::vector<double> reconstruct_box(const std::vector<double>& b,
                                    const std::vector<double>& lower,
                                    const std::vector<double>& upper,
                                    double lambda) {
    const int n = static_cast<int>(b.size());
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = std::clamp(lambda - b[i], lower[i], upper[i]);
    return x;
}

std::vector<double> reconstruct(const Instance& inst, const PartitionVector& k,
                                double lambda) {
    const int n = inst.n();
    std::vector<int> assign = partition_assignment(k, n);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i)
        x[i] = std::clamp(lambda - inst.b(i), inst.lower(i, assign[i]),
                          inst.upper(i, assign[i]));
    return x;
}

std::vector<LiveBreakpoint> live_breakpoints(const BookkeepingState& st) {
    std::vector<LiveBreakpoint> out;
    for (const BreakpointEntry& e : st.lower_queue.raw())
        if (e.epoch == st.epoch[e.var]) out.push_back({e.value, e.var, false});
    for (const BreakpointEntry& e : st.upper_queue.raw())
        if (e.epoch == st.epoch[e.var]) out.push_back({e.value, e.var, true});
    std::sort(out.begin(), out.end(), [](const LiveBreakpoint& a, const LiveBreakpoint& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.is_upper != b.is_upper) return !a.is_upper;
        return a.var < b.var;
    });
    return out;
}

}  // namespace rapdibc
