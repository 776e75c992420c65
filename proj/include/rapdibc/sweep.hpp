#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rapdibc/instance.hpp"
#include "rapdibc/objective.hpp"
#include "rapdibc/simple_rap.hpp"

namespace rapdibc {

enum class SolveStatus { optimal, infeasible };

struct Solution {
    SolveStatus status = SolveStatus::infeasible;
    std::vector<double> x;  // canonical variable order; empty when infeasible
    double lambda = 0.0;
    PartitionVector partition;  // winning partition vector
    double objective = std::numeric_limits<double>::infinity();
};

struct PartitionRecord {
    PartitionVector partition;
    double lambda;
    double value;
    bool feasible;
};

// Best candidate seen so far plus the optional per-partition trace.
struct SweepRecord {
    double best_value = std::numeric_limits<double>::infinity();
    PartitionVector best_partition;
    double best_lambda = 0.0;
    std::vector<PartitionRecord> log;
};

struct SweepStats {
    std::uint64_t partitions_processed = 0;
    std::uint64_t monotonicity_violations = 0;  // multiplier decreases within a sweep
    std::uint64_t sweeps = 0;
};

struct SolveOptions {
    unsigned threads = 1;        // sweeps for distinct prefixes may run in parallel
    bool log_partitions = false; // record (K, lambda, V) for every partition
};

// Exact solver: for each partition prefix runs one resumable breakpoint
// search across all completions, transferring the bookkeeping state between
// consecutive partitions instead of restarting.  Ties between partitions with
// equal value (within tolerance) go to the lexicographically smallest one.
// Throws NotAdmissible; infeasibility is reported through the status.
Solution solve(const Instance& inst, Objective phi, double R,
               const SolveOptions& options = {}, SweepStats* stats = nullptr,
               SweepRecord* record = nullptr);

// Moves a positioned search state from partition k to the next partition in
// the sweep (last entry incremented).  The affected variable is k.back(); its
// box drops from the last interval to the one below.  lambda_k is the
// multiplier at which the state is positioned.
void shift_partition(BookkeepingState& state, const Instance& inst, Objective phi,
                     const PartitionVector& k, double lambda_k);

}  // namespace rapdibc
