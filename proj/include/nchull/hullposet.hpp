#pragma once

#include "nchull/config.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace nchull {

/// An element of H(n): for rank >= 3 a cyclic order of the n labels
/// (canonical rotation starts at label 0) together with the corner set; for
/// rank 2 a linear order up to reversal (lexicographically smaller reading).
struct HullElement {
    int n = 0;
    int rank = 0;               // 2, or the corner count
    std::vector<int> order;     // cyclic (rank >= 3) or linear (rank == 2)
    std::vector<int> corners;   // sorted labels; empty for rank 2

    static HullElement cyclic(std::vector<int> order, std::vector<int> corners);
    static HullElement linear(std::vector<int> order);

    std::string to_string() const; // cyclic:0,1,2|corners:0,2  /  linear:0,1,2
    bool operator==(const HullElement&) const = default;
    bool operator<(const HullElement& o) const;

    bool is_minimal() const { return rank == 2; }
    bool is_maximal() const { return rank == n; }
    /// The element as a positional HullConfig plus position->label map
    /// (rotated to start at a corner).
    std::pair<HullConfig, std::vector<int>> to_config() const;
};

/// Memoizes collapse sets and rank-2 down-sets across queries.
struct HullPosetCache {
    std::map<std::string, std::vector<HullElement>> collapses;
    std::map<std::string, std::set<std::string>> rank2_below;
};

/// All rank-k elements of H(n): (n-1)!*C(n,k) of them for k >= 3, n!/2
/// linear orders for k == 2.
std::vector<HullElement> enumerate_hull(int n, int k);

/// Covers below: for rank >= 4, each corner demoted in place; for rank 3,
/// every linear order reachable by dropping one corner onto the opposite
/// side's line (the demoted corner may land in any gap and the points of its
/// two incident sides interleave freely, so the outcomes are exactly the
/// label orders that restrict correctly to the three side chains).
std::vector<HullElement> elementary_collapses(const HullElement& element,
                                              HullPosetCache& cache);

/// a <= b by search over collapse covers.
bool leq(const HullElement& a, const HullElement& b, HullPosetCache& cache);

/// Minimal element: number of maximal elements above (2^{n-2}); maximal
/// element: number of minimal elements below (n*2^{n-3}). Computed by search.
long count_extremes(const HullElement& element, HullPosetCache& cache);

/// The interval [a,b] has exactly 2^{rk b - rk a} elements and is order
/// isomorphic to the Boolean lattice of that height.
bool interval_is_boolean(const HullElement& a, const HullElement& b, HullPosetCache& cache);

/// All elements of [a,b] (needs leq(a,b)).
std::vector<HullElement> interval_elements(const HullElement& a, const HullElement& b,
                                           HullPosetCache& cache);

/// All of H(n) with its collapse covers, deterministically ordered.
struct HullPosetDiagram {
    std::vector<HullElement> elements;                 // sorted by (rank, string)
    std::vector<std::pair<int, int>> edges;            // (upper, lower) cover pairs
};
HullPosetDiagram hull_poset_diagram(int n, HullPosetCache& cache);

std::string hull_poset_json(const HullPosetDiagram& diagram);
std::string hull_poset_dot(const HullPosetDiagram& diagram);

} // namespace nchull
