#pragma once

#include <cstdint>
#include <vector>

#include "rapdibc/instance.hpp"
#include "rapdibc/sweep.hpp"

namespace rapdibc {

// Number of active variables that receive the ceiling of their fractional
// value: N_F * (lambda - floor(lambda)), which is integral for integer data.
// Throws NonIntegralData when the quantity is further than n * tol from an
// integer.
std::int64_t ceil_count(double lambda, int n_f, int n);

// Optimal integer objective value of the subproblem solved at multiplier
// lambda, straight from the continuous bookkeeping:
//   V_B + N_F⁺ phi(ceil(lambda)) + (N_F - N_F⁺) phi(floor(lambda)).
double integer_value(double lambda, double v_b, int n_f, Objective phi, int n);

// Integer allocation for partition k at continuous multiplier lambda:
// clamped variables keep their bound, the first N_F⁺ active variables (in
// canonical order) are rounded up and the rest down.  Sums to R exactly.
std::vector<std::int64_t> integer_reconstruct(const Instance& inst,
                                              const PartitionVector& k,
                                              double lambda);

// Integer-variable solver: runs the continuous partition sweep but scores
// every partition by its rounded integer value, then materializes the winner.
// Requires an integer-data instance.
Solution solve_integer(const Instance& inst, Objective phi, double R,
                       const SolveOptions& options = {},
                       SweepStats* stats = nullptr, SweepRecord* record = nullptr);

}  // namespace rapdibc
