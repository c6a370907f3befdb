#pragma once

#include "nchull/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nchull {

/// A partition of the lattice into saturated chains, each spanning ranks
/// r..(n-1)-r (the lattice has height n-1).
struct ChainDecomposition {
    std::vector<std::vector<int>> chains; // element indices, increasing rank
};

/// De Bruijn–style symmetric chain decomposition of the subset lattice
/// Bool(m). Chains hold subset bitmasks; two subsets share a chain iff their
/// indicator words have the same matched-pair skeleton under parenthesis
/// matching (1 opens, 0 closes).
std::vector<std::vector<uint32_t>> bool_scd(int m);

/// The atom with non-singleton block {z_{1,0}, z_{i,j}} and the coatom
/// splitting P at z_{i,j}. Side 1 must be blank; 2 <= i <= k-1, 0 <= j <= c_i.
Partition alpha(const HullConfig& config, int i, int j);
Partition beta(const HullConfig& config, int i, int j);

struct Decomposition {
    std::vector<int> x_part; // z_{1,0} singleton or with z_{k,c_k}
    struct Interval {
        int i, j;
        std::vector<int> elements; // the interval [alpha_ij, beta_ij]
    };
    std::vector<Interval> intervals;
};

/// Partitions NC(P) into X and the intervals [alpha_ij, beta_ij], classifying
/// each element by the block of z_{1,0}. Requires the blank side at position 1.
Decomposition decompose(const NCLattice& lattice);

/// The interval isomorphism [alpha_ij, beta_ij] ~ NC(A_ij) x NC(B_ij):
/// blocks of rho, blocks of sigma, and z_{1,0} joined into sigma's block
/// containing z_{i,j}. sigma and rho are partitions of the arc
/// sub-configurations' local indices (single-point arcs take the one-point
/// partition).
Partition interval_product_iso(const HullConfig& config, int i, int j,
                               const Partition& sigma, const Partition& rho);

/// Peels each grid of chain pairs into nested hooks: chains spanning
/// [r1+r2+t, h1+h2-r1-r2-t]. Inputs must be symmetric chain decompositions
/// of graded posets with the stated heights.
template <typename A, typename B>
std::vector<std::vector<std::pair<A, B>>> product_scd(
    const std::vector<std::vector<A>>& chains_a, int height_a,
    const std::vector<std::vector<B>>& chains_b, int height_b);

/// Symmetric chain decomposition of NC(P) for a segment or a polygon with a
/// blank side, per the recursive construction. blank_side overrides the
/// default choice (lowest-index blank side of the cyclic canonical form).
ChainDecomposition scd(const NCLattice& lattice, std::optional<int> blank_side = std::nullopt);

struct ScdReport {
    bool disjoint = false;
    bool covering = false;
    bool saturated = false;
    bool centered = false;
    std::string witness; // first counterexample, empty if all pass
    bool all() const { return disjoint && covering && saturated && centered; }
};

ScdReport verify_scd(const NCLattice& lattice, const ChainDecomposition& decomposition);

std::string scd_json(const NCLattice& lattice, const ChainDecomposition& decomposition);

// --- implementation of the template ---

namespace detail {
/// Hook peel of an (la x lb) grid: hook t is row t up to column lb-1-t, then
/// that column down the remaining rows.
std::vector<std::vector<std::pair<int, int>>> product_hooks(int la, int lb);
void check_centered_lengths(size_t len, int height, const char* what);
} // namespace detail

template <typename A, typename B>
std::vector<std::vector<std::pair<A, B>>> product_scd(
    const std::vector<std::vector<A>>& chains_a, int height_a,
    const std::vector<std::vector<B>>& chains_b, int height_b) {
    std::vector<std::vector<std::pair<A, B>>> out;
    for (const auto& ca : chains_a) {
        detail::check_centered_lengths(ca.size(), height_a, "left");
        for (const auto& cb : chains_b) {
            detail::check_centered_lengths(cb.size(), height_b, "right");
            for (const auto& hook : detail::product_hooks(
                     static_cast<int>(ca.size()), static_cast<int>(cb.size()))) {
                std::vector<std::pair<A, B>> chain;
                chain.reserve(hook.size());
                for (auto [ia, ib] : hook) chain.emplace_back(ca[ia], cb[ib]);
                out.push_back(std::move(chain));
            }
        }
    }
    return out;
}

} // namespace nchull
