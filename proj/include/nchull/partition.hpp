#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nchull {

/// A set partition of {0..n-1} in canonical form: every block sorted
/// ascending, blocks ordered by minimum element. Blocks are also kept as
/// bitmasks (n <= 32) for fast refinement and crossing tests.
class Partition {
public:
    Partition() = default;
    /// From block lists; canonicalizes. Throws unless the blocks partition
    /// {0..n-1} exactly.
    Partition(int n, std::vector<std::vector<int>> blocks);
    /// From a restricted growth string.
    static Partition from_rgs(const std::vector<int>& rgs);
    static Partition singletons(int n);
    static Partition one_block(int n);
    /// Parses the wire form `0,1|2|3,4,5`.
    static Partition parse(const std::string& text, int n);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(masks_.size()); }
    /// rk = n - #blocks.
    int rank() const { return n_ - block_count(); }
    const std::vector<uint32_t>& masks() const { return masks_; }
    std::vector<std::vector<int>> blocks() const;
    /// Index of the block containing point p.
    int block_of(int p) const;
    uint32_t block_mask_of(int p) const { return masks_[block_of(p)]; }

    /// Refinement order: every block of *this inside a block of o.
    bool refines(const Partition& o) const;
    /// Blockwise common refinement (the meet in the full partition lattice).
    Partition meet_with(const Partition& o) const;
    /// Transitive-closure coarsening (the join in the full partition lattice).
    Partition join_with(const Partition& o) const;
    Partition merge_blocks(int b1, int b2) const;
    /// The partition restricted to the points of `subset` (old index ->
    /// new index given by map).
    Partition restrict_map(const std::vector<int>& old_to_new, int new_n) const;

    std::string to_string() const;
    bool operator==(const Partition& o) const { return n_ == o.n_ && masks_ == o.masks_; }
    bool operator<(const Partition& o) const { return masks_ < o.masks_; }

private:
    int n_ = 0;
    std::vector<uint32_t> masks_; // sorted by lowest set bit
};

/// All set partitions of {0..n-1} in lexicographic restricted-growth-string
/// order.
std::vector<Partition> all_partitions(int n);

/// Visits RGS prefixes: extend(point, block_index_or_new) returning false
/// prunes the branch. Used by the pruned noncrossing generator.
struct PartitionHash {
    size_t operator()(const Partition& p) const;
};

} // namespace nchull
