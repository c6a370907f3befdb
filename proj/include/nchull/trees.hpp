#pragma once

#include "nchull/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nchull {

/// An edge set on the configuration's points. Stored with a < b per edge,
/// edges sorted lexicographically.
struct Forest {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Forest() = default;
    Forest(int n, std::vector<std::pair<int, int>> e);
    std::string to_string() const; // wire format 0-1;1-2;2-3
    static Forest parse(const std::string& text, int n);
    bool operator==(const Forest&) const = default;
    bool operator<(const Forest& o) const { return edges < o.edges; }
};

/// Single edge validity: the open segment contains no configuration point
/// (equivalently, the endpoints are not separated by a same-side point).
bool edge_valid(const HullConfig& config, int a, int b);
/// Valid edges, pairwise noncrossing (no cyclic interleaving of endances).
bool is_noncrossing_forest(const HullConfig& config, const Forest& forest);
/// Spanning + acyclic + connected + noncrossing.
bool is_noncrossing_tree(const HullConfig& config, const Forest& tree);

/// Every pairwise geodesic's vertex hull meets P only in the path vertices.
/// Hull membership is combinatorial: a point is swallowed iff it lies
/// strictly between two same-side vertices.
bool has_convex_geodesics(const HullConfig& config, const Forest& forest);

/// Connected components as blocks; noncrossing whenever the forest is
/// noncrossing with convex geodesics.
Partition part_of(const HullConfig& config, const Forest& forest);

/// All spanning noncrossing trees with convex geodesics.
std::vector<Forest> enumerate_cg_trees(const HullConfig& config, int max_n = 10);

/// The 2^{n-1} partitions Part(mu) over subforests mu of a spanning cg tree,
/// verified distinct and order-isomorphic to Bool(n-1).
struct BoolSubposet {
    Forest tree;
    std::vector<Partition> elements; // indexed by subforest bitmask over tree.edges
};
BoolSubposet bool_subposet(const HullConfig& config, const Forest& tree);
/// Membership in Bool(tree): every block induces a connected subgraph.
bool in_bool_subposet(const Forest& tree, const Partition& p);

/// rank(join S) == |S| for every subset S of the given atoms.
bool atoms_generate_boolean(const NCLattice& lattice, const std::vector<int>& atom_set);

/// All (n-1)-subsets of atoms joining to the top with additive ranks; these
/// are the maximal Boolean subposets.
std::vector<std::vector<int>> maximal_boolean_atom_sets(const NCLattice& lattice);

/// Replaces e = {p,q} by {p,r} where f = {q,r} is angularly adjacent to e
/// at q in the realized embedding. Throws if e,f are not adjacent tree edges
/// at a common vertex; throws SlideLeavesClass if the new edge is invalid or
/// crossing.
struct SlideLeavesClass : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Forest slide(const HullConfig& config, const Forest& tree,
             std::pair<int, int> e, std::pair<int, int> f);

/// partition in Bool(slide result)?  Must match the criterion: the block of
/// p contains both q and r, or neither.
bool slide_membership(const HullConfig& config, const Forest& tree, const Forest& slid,
                      const Partition& partition);

struct UnionCheck {
    bool covered = false;
    std::vector<int> witness;   // per element, index into the tree list (-1 if none)
    int missing_element = -1;   // first uncovered element if any
};
UnionCheck boolean_union_check(const NCLattice& lattice, const std::vector<Forest>& trees);

/// Elementary collapse of a polygon corner: demotes z_{side,0} to a
/// side-internal point (rank k-1 >= 3). Returns the collapsed configuration
/// and the old->new index map (a rotation when side == 1).
struct Collapse {
    HullConfig configP;
    std::vector<int> old_to_new;
};
Collapse collapse_corner(const HullConfig& configQ, int side);

/// Constructive repair from the union theorem's induction step: given a cg
/// tree on Q and rho in Bool(treeQ), produces a cg tree on P = m(Q) whose
/// Boolean subposet contains m(rho). `exhaustive_fallback` additionally
/// searches all cg trees if the slide procedure fails to certify (for
/// cross-validation; the procedure itself must not fail on valid inputs).
Forest collapse_repair(const HullConfig& configQ, const Forest& treeQ,
                       const HullConfig& configP, const std::vector<int>& old_to_new,
                       const Partition& rho, bool exhaustive_fallback = false);
Forest collapse_repair(const HullConfig& configQ, const Forest& treeQ, int collapsed_corner,
                       const Partition& rho, bool exhaustive_fallback = false);

} // namespace nchull
