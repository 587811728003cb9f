#pragma once

#include <vector>

#include "qlines/constructions.hpp"

namespace qlines {

// Partitions of n into exactly three positive parts, p >= q >= r >= 1,
// in decreasing lexicographic order.
std::vector<PartitionTriple> partitions_three(int n);

// p_3(n): the number of such partitions.
int p3_count(int n);

// All ordered triples (p,q,r) of positive integers with p+q+r = n.
std::vector<PartitionTriple> compositions_three(int n);

} // namespace qlines
