#pragma once

#include "nchull/geometry.hpp"
#include "nchull/partition.hpp"

#include <utility>
#include <vector>

namespace nchull {

/// Geometric ground truth, computed from exact coordinates alone: every
/// combinatorial predicate in the library is validated against these.

/// Partition verdict by pairwise hull disjointness.
bool nc_oracle(const std::vector<ExactPoint>& points, const Partition& partition);

/// All noncrossing partitions of the point set, in lexicographic RGS order.
/// Throws BudgetError beyond max_n points.
std::vector<Partition> nc_lattice_oracle(const std::vector<ExactPoint>& points, int max_n = 10);

struct TreeOracleResult {
    bool noncrossing = false;       ///< embedded forest: no point inside an edge,
                                    ///< no improper edge pair intersection
    bool convex_geodesics = false;  ///< meaningful only when noncrossing
};

/// Literal all-subtrees test of the convex-geodesic property, plus exact
/// segment intersection tests for the noncrossing part.
TreeOracleResult tree_oracle(const std::vector<ExactPoint>& points,
                             const std::vector<std::pair<int, int>>& edges,
                             int max_n = 7);

/// Pairwise-path variant of the geodesic test (the equivalent formulation);
/// exposed so tests can compare the two.
bool tree_oracle_pairwise_cg(const std::vector<ExactPoint>& points,
                             const std::vector<std::pair<int, int>>& edges);

} // namespace nchull
