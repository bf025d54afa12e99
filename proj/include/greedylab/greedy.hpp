#pragma once

#include <vector>

#include "greedylab/types.hpp"

namespace greedylab {

// Indices 1..window ordered by decreasing |x_n|, ties by smaller index.
std::vector<int> greedy_ordering(const CoefVec& x);

// The canonical greedy set of size m (first m entries of greedy_ordering).
IndexSet greedy_set(const CoefVec& x, int m);

struct GreedySets {
    std::vector<IndexSet> sets;  // canonical set first
    bool truncated = false;      // true when the cap cut the enumeration short
};

// Every A with |A| = m and min_{n in A} |x_n| >= max_{k not in A} |x_k|.
// Only the maximal tie class is free; the strictly larger moduli are forced.
GreedySets all_greedy_sets(const CoefVec& x, int m, int cap = 64);

// Coordinate projection P_A x.
CoefVec project(const CoefVec& x, const IndexSet& A);

// Complementary projection x - P_A x.
CoefVec residual(const CoefVec& x, const IndexSet& A);

// Thresholding greedy approximand G_m(x) via the canonical greedy set.
CoefVec tga(const CoefVec& x, int m);

// Partial sum S_m x = P_{[1..m]} x; m = 0 gives the zero vector.
CoefVec partial_sum(const CoefVec& x, int m);

// Truncation at height lambda >= 0: coordinates with |x_n| > lambda are
// replaced by lambda * sgn(x_n), the rest are kept.
CoefVec truncate(const CoefVec& x, double lambda);

}  // namespace greedylab
