#pragma once

#include <cstdint>
#include <vector>

namespace rapdibc {

// Non-decreasing vector of length m-1 with entries in [0, n].  Entry j is the
// number of leading variables assigned to intervals 0..j; variable i lives in
// interval #{k : K[k] <= i}.
using PartitionVector = std::vector<int>;

bool is_valid_partition(const PartitionVector& k, int n);

// Interval index of variable i under partition k (0-based).
int partition_interval(const PartitionVector& k, int i);

// Per-variable interval assignment for all of 0..n-1 in O(n + |k|).
std::vector<int> partition_assignment(const PartitionVector& k, int n);

// All non-decreasing vectors of the given length over [0, n], in
// lexicographic order.  C(n + len, len) vectors in total.
std::vector<PartitionVector> enumerate_nondecreasing(int len, int n);

// Full partition vectors (length m-1) for the enumerative solver.
std::vector<PartitionVector> enumerate_partitions(int n, int m);

// Fixed prefixes of length m-2 swept by the resumable search; the single
// empty vector for m <= 2.
std::vector<PartitionVector> enumerate_subpartitions(int n, int m);

// C(n + len, len) without materializing, for cap checks; saturates at
// 2^63 - 1 on overflow.
std::uint64_t count_nondecreasing(int len, int n);

bool lexicographic_less(const PartitionVector& a, const PartitionVector& b);

}  // namespace rapdibc
