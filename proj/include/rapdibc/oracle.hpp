#pragma once

#include <cstdint>
#include <vector>

#include "rapdibc/instance.hpp"
#include "rapdibc/sweep.hpp"

namespace rapdibc {

struct OracleOptions {
    std::uint64_t cap = 1'000'000;  // maximum subproblems / integer points
};

// Exhaustive reference: solves the box subproblem of every interval
// assignment (all m^n of them, monotone or not) and keeps the best.
// Throws CapExceeded when m^n exceeds the cap.
Solution brute_force(const Instance& inst, Objective phi, double R,
                     const OracleOptions& options = {});

// Enumerative reference: every monotone partition solved from scratch with a
// feasibility pre-check.  Throws CapExceeded when C(n+m-1, m-1) exceeds the cap.
Solution algorithm_enumerative(const Instance& inst, Objective phi, double R,
                               const OracleOptions& options = {});

enum class GreedyStatus {
    found,        // x is feasible
    not_covered,  // parameters outside the supported construction ranges
    infeasible,   // R outside [sum of smallest lowers, sum of largest uppers]
};

struct GreedyResult {
    GreedyStatus status = GreedyStatus::not_covered;
    std::vector<double> x;
};

// Polynomial-time feasibility construction: greedy fill with a one-variable
// repair, or proportional fill of the first/last intervals, depending on the
// instance's case flags and the position of R.  not_covered is not a proof of
// infeasibility; the full solver still decides.
GreedyResult greedy_feasible(const Instance& inst, double R);

// Exhaustive integer reference: all integer points of the interval unions
// with coordinate sum R.  Throws CapExceeded when the number of per-variable
// candidate combinations exceeds the cap.
Solution brute_force_integer(const Instance& inst, Objective phi, double R,
                             const OracleOptions& options = {});

}  // namespace rapdibc
