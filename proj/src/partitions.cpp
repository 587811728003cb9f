#include "qlines/partitions.hpp"

namespace qlines {

std::vector<PartitionTriple> partitions_three(int n) {
    std::vector<PartitionTriple> out;
    for (int p = n - 2; p >= 1; --p)
        for (int q = std::min(p, n - p - 1); q >= 1; --q) {
            int r = n - p - q;
            if (r < 1 || r > q) continue;
            out.emplace_back(p, q, r);
        }
    return out;
}

int p3_count(int n) { return static_cast<int>(partitions_three(n).size()); }

std::vector<PartitionTriple> compositions_three(int n) {
    std::vector<PartitionTriple> out;
    for (int p = 1; p <= n - 2; ++p)
        for (int q = 1; q <= n - p - 1; ++q) out.emplace_back(p, q, n - p - q);
    return out;
}

} // namespace qlines
