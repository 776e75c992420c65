#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rapdibc/instance.hpp"
#include "rapdibc/objective.hpp"
#include "rapdibc/partition.hpp"

namespace rapdibc {

// Entry of a breakpoint priority queue.  Entries are never removed from the
// middle of the heap: changing a variable's box bumps its epoch, and stale
// entries are discarded when they surface at the top.
struct BreakpointEntry {
    double value = 0.0;
    int var = 0;
    std::uint32_t epoch = 0;
};

class BreakpointQueue {
public:
    void push(BreakpointEntry e);
    const BreakpointEntry& top() const { return heap_.front(); }
    void pop();
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    void reserve(std::size_t n) { heap_.reserve(n); }
    const std::vector<BreakpointEntry>& raw() const { return heap_; }

private:
    std::vector<BreakpointEntry> heap_;  // min-heap on (value, var)
};

// Resumable state of the sequential breakpoint search for one box-constrained
// subproblem: minimize sum phi(x_i + b_i) subject to sum x_i = R and
// lower[i] <= x_i <= upper[i].
//
// A variable enters the active set when its lower breakpoint
// alpha_i = lower[i] + b[i] is consumed and leaves it when its upper
// breakpoint beta_i = upper[i] + b[i] is consumed.  The running sums track:
//   B    bound values of all variables currently clamped at a bound,
//   F    shifts b_i of the active variables,
//   N_F  number of active variables,
//   V_B  objective contributions phi(bound + b_i) of the clamped variables.
struct BookkeepingState {
    std::vector<double> b;
    std::vector<double> lower, upper;  // current box per variable
    std::vector<int> interval;         // current interval index per variable
    std::vector<std::uint32_t> epoch;  // bumping invalidates queued entries

    BreakpointQueue lower_queue;  // alpha entries
    BreakpointQueue upper_queue;  // beta entries

    double B = 0.0;
    double F = 0.0;
    int N_F = 0;
    double V_B = 0.0;

    // Value of the most recently consumed breakpoint; reported as the
    // multiplier when the target is met on the flat tail of z.
    double last_consumed = -std::numeric_limits<double>::infinity();

    int n() const { return static_cast<int>(b.size()); }
};

enum class SearchStatus {
    found,
    infeasible_low,   // R below the sum of lower bounds
    infeasible_high,  // R above the sum of upper bounds
};

struct MultiplierResult {
    SearchStatus status = SearchStatus::found;
    double lambda = 0.0;
    double value = 0.0;  // V_B + N_F * phi(lambda) at the stop point
};

// Fresh search state for the subproblem selected by partition k.
BookkeepingState init_state(const Instance& inst, const PartitionVector& k,
                            Objective phi);

// Fresh search state for an explicit box (used by the enumeration oracles).
BookkeepingState init_box_state(std::vector<double> b, std::vector<double> lower,
                                std::vector<double> upper, Objective phi);

// Consumes breakpoints in non-decreasing (value, lower-before-upper, index)
// order until the allocation total z(lambda) = B + N_F * lambda - F reaches R.
// On success the state is left positioned at the returned multiplier (every
// breakpoint with value <= lambda consumed) so the search can later resume
// toward a larger multiplier.
MultiplierResult advance(BookkeepingState& state, Objective phi, double R);

// Consumes every live breakpoint with value <= lambda, applying the running
// sum updates.  advance() uses this to settle ties at its stop value; tests
// use it to position a fresh state at an arbitrary multiplier.
void consume_up_to(BookkeepingState& state, Objective phi, double lambda);

// Optimal allocation for partition k at multiplier lambda:
// x_i = clamp(lambda - b_i, lower, upper) over the interval chosen by k.
std::vector<double> reconstruct(const Instance& inst, const PartitionVector& k,
                                double lambda);

// Clamp reconstruction against an explicit box.
std::vector<double> reconstruct_box(const std::vector<double>& b,
                                    const std::vector<double>& lower,
                                    const std::vector<double>& upper,
                                    double lambda);

// Live (non-stale) queue contents, sorted by (value, kind, var); for state
// comparison in tests and verification.
struct LiveBreakpoint {
    double value;
    int var;
    bool is_upper;

    friend bool operator==(const LiveBreakpoint&, const LiveBreakpoint&) = default;
};
std::vector<LiveBreakpoint> live_breakpoints(const BookkeepingState& state);

}  // namespace rapdibc
