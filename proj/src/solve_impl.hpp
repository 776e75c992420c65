#pragma once

#include "rapdibc/sweep.hpp"

namespace rapdibc {

// Shared sweep core behind solve() and solve_integer(); integer_mode swaps
// the per-partition score for the rounded integer value.
Solution solve_impl(const Instance& inst, Objective phi, double R, bool integer_mode,
                    const SolveOptions& options, SweepStats* stats,
                    SweepRecord* record);

}  // namespace rapdibc
