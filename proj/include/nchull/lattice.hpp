#pragma once

#include "nchull/config.hpp"
#include "nchull/partition.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace nchull {

/// Conv(B1) and Conv(B2) intersect, decided combinatorially: either the two
/// blocks interleave in the cyclic boundary order, or a point of one lies
/// strictly between two same-side points of the other. Segments use the
/// second test alone.
bool blocks_cross(const HullConfig& config, uint32_t b1, uint32_t b2);

/// All block pairs have disjoint hulls.
bool is_noncrossing(const HullConfig& config, const Partition& p);

/// Noncrossing partitions in lexicographic RGS order, by filtering all set
/// partitions. Exposed for cross-checks against the pruned generator.
std::vector<Partition> noncrossing_by_filter(const HullConfig& config);
/// The same list via point-by-point extension with crossing prunes
/// (crossing is monotone under block growth, so pruning is sound).
std::vector<Partition> noncrossing_by_generator(const HullConfig& config);

/// NC(P) as an explicit graded lattice. Immutable once built.
struct NCLattice {
    HullConfig config;
    int n = 0;
    std::vector<Partition> elements;           // canonical enumeration order
    std::vector<int> rank;                     // n - #blocks
    std::vector<std::pair<int, int>> covers;   // (lower, upper), sorted
    std::unordered_map<Partition, int, PartitionHash> index;

    int index_of(const Partition& p) const;
    int bottom() const;                        // all singletons
    int top() const;                           // one block
    std::vector<int> atoms() const;
    std::vector<int> coatoms() const;
    /// Upper covers / lower covers adjacency.
    std::vector<std::vector<int>> up_adjacency() const;
};

struct BuildOptions {
    int max_n = 12;
    long max_partitions = 2'000'000;
};

/// Builds NC(P): enumeration (RGS filter for n <= 9, pruned generator
/// above), ranks, and covers as rank-1 block merges.
NCLattice build_lattice(const HullConfig& config, const BuildOptions& options = {});

int meet(const NCLattice& lattice, int a, int b);
/// Transitive-closure coarsening followed by merging crossing block pairs to
/// a fixpoint; provably the least noncrossing upper bound.
int join(const NCLattice& lattice, int a, int b);
Partition join_partitions(const HullConfig& config, const Partition& a, const Partition& b);

std::vector<long> rank_polynomial(const NCLattice& lattice);
bool is_rank_symmetric(const NCLattice& lattice);
/// Gradedness from the raw refinement order: the relation's covers are
/// recomputed without the rank-1-merge shortcut and each must raise rank by
/// exactly one, which makes every maximal chain have n-1 steps.
bool is_graded(const NCLattice& lattice);
/// Covers derived from the order relation alone (for verification).
std::vector<std::pair<int, int>> covers_from_order(const NCLattice& lattice);

/// Identity-labelled order embedding NC(P) -> NC(Q) for P <= Q in H(n):
/// every partition noncrossing in P stays noncrossing in Q and the orders
/// agree on the shared elements.
bool embedding_check(const HullConfig& configP, const HullConfig& configQ,
                     const BuildOptions& options = {});

std::string lattice_json(const NCLattice& lattice);
std::string lattice_dot(const NCLattice& lattice);

} // namespace nchull
