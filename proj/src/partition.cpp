#include "rapdibc/partition.hpp"

#include <algorithm>

namespace rapdibc {

bool is_valid_partition(const PartitionVector& k, int n) {
    int prev = 0;
    for (int v : k) {
        if (v < prev || v > n) return false;
        prev = v;
    }
    return true;
}

int partition_interval(const PartitionVector& k, int i) {
    // Number of entries <= i; k is non-decreasing.
    return static_cast<int>(std::upper_bound(k.begin(), k.end(), i) - k.begin());
}

std::vector<int> partition_assignment(const PartitionVector& k, int n) {
    std::vector<int> assign(n);
    int j = 0;
    const int len = static_cast<int>(k.size());
    for (int i = 0; i < n; ++i) {
        while (j < len && k[j] <= i) ++j;
        assign[i] = j;
    }
    return assign;
}

std::vector<PartitionVector> enumerate_nondecreasing(int len, int n) {
    std::vector<PartitionVector> out;
    if (len <= 0) {
        out.push_back({});
        return out;
    }
    PartitionVector cur(len, 0);
    for (;;) {
        out.push_back(cur);
        int pos = len - 1;
        while (pos >= 0 && cur[pos] == n) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int j = pos + 1; j < len; ++j) cur[j] = cur[pos];
    }
    return out;
}

std::vector<PartitionVector> enumerate_partitions(int n, int m) {
    return enumerate_nondecreasing(m - 1, n);
}

std::vector<PartitionVector> enumerate_subpartitions(int n, int m) {
    return enumerate_nondecreasing(m - 2, n);
}

std::uint64_t count_nondecreasing(int len, int n) {
    if (len <= 0) return 1;
    // C(n + len, len), saturating.
    const std::uint64_t limit = UINT64_MAX / 2;
    std::uint64_t result = 1;
    for (int i = 1; i <= len; ++i) {
        if (result > limit / (static_cast<std::uint64_t>(n) + i)) return limit;
        result = result * (static_cast<std::uint64_t>(n) + i) / i;
    }
    return result;
}

bool lexicographic_less(const PartitionVector& a, const PartitionVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace rapdibc
