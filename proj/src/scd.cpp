#include "nchull/scd.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nchull {

namespace detail {

std::vector<std::vector<std::pair<int, int>>> product_hooks(int la, int lb) {
    std::vector<std::vector<std::pair<int, int>>> hooks;
    for (int t = 0; t < std::min(la, lb); ++t) {
        std::vector<std::pair<int, int>> hook;
        for (int j = 0; j <= lb - 1 - t; ++j) hook.emplace_back(t, j);
        for (int i = t + 1; i <= la - 1; ++i) hook.emplace_back(i, lb - 1 - t);
        hooks.push_back(std::move(hook));
    }
    return hooks;
}

void check_centered_lengths(size_t len, int height, const char* what) {
    if (len == 0 || (static_cast<int>(len) - 1 - height) % 2 != 0 ||
        static_cast<int>(len) > height + 1)
        throw std::invalid_argument(std::string("product_scd: ") + what +
                                    " chain cannot be centered for its height");
}

} // namespace detail

std::vector<std::vector<uint32_t>> bool_scd(int m) {
    if (m < 0) throw std::invalid_argument("bool_scd: negative m");
    // Group subsets by matching skeleton: scan the indicator word, a 0
    // closes the nearest unmatched 1. Unmatched positions always read
    // 0...01...1 and vary along the chain.
    std::map<std::vector<int>, std::vector<uint32_t>> by_skeleton;
    for (uint32_t s = 0; s < (1u << m); ++s) {
        std::vector<int> open;
        std::vector<int> skeleton(m, -1); // matched partner, or -1
        for (int i = 0; i < m; ++i) {
            if (s >> i & 1) {
                open.push_back(i);
            } else if (!open.empty()) {
                skeleton[open.back()] = i;
                skeleton[i] = open.back();
                open.pop_back();
            }
        }
        by_skeleton[skeleton].push_back(s);
    }
    std::vector<std::vector<uint32_t>> chains;
    for (auto& [skel, subsets] : by_skeleton) {
        std::sort(subsets.begin(), subsets.end(),
                  [](uint32_t a, uint32_t b) { return std::popcount(a) < std::popcount(b); });
        chains.push_back(std::move(subsets));
    }
    return chains;
}

namespace {

void require_blank_first(const HullConfig& config) {
    if (config.is_segment() || config.side_count(1) != 0)
        throw std::invalid_argument("side 1 must be blank");
}

} // namespace

Partition alpha(const HullConfig& config, int i, int j) {
    require_blank_first(config);
    if (i < 2 || i > config.k() - 1 || j < 0 || j > config.side_count(i))
        throw std::invalid_argument("alpha: (i,j) out of range");
    std::vector<std::vector<int>> blocks{{0, config.point_index(i, j)}};
    for (int p = 1; p < config.n(); ++p)
        if (p != config.point_index(i, j)) blocks.push_back({p});
    return Partition(config.n(), std::move(blocks));
}

Partition beta(const HullConfig& config, int i, int j) {
    require_blank_first(config);
    if (i < 2 || i > config.k() - 1 || j < 0 || j > config.side_count(i))
        throw std::invalid_argument("beta: (i,j) out of range");
    int split = config.point_index(i, j);
    std::vector<int> low, high;
    for (int p = 0; p < config.n(); ++p)
        (p <= split ? low : high).push_back(p);
    return Partition(config.n(), {low, high});
}

Decomposition decompose(const NCLattice& lattice) {
    const HullConfig& config = lattice.config;
    require_blank_first(config);
    const int n = lattice.n;
    Decomposition d;
    std::map<std::pair<int, int>, std::vector<int>> by_ij;
    for (size_t e = 0; e < lattice.elements.size(); ++e) {
        const Partition& p = lattice.elements[e];
        uint32_t b0 = p.block_mask_of(0);
        if (b0 == 1u || (b0 >> (n - 1) & 1)) {
            d.x_part.push_back(static_cast<int>(e));
            continue;
        }
        int last = 31 - std::countl_zero(b0);
        PointRef r = config.point_ref(last);
        if (r.side < 2 || r.side > config.k() - 1)
            throw std::logic_error("decompose: noncrossing element outside X has bad split point");
        by_ij[{r.side, r.offset}].push_back(static_cast<int>(e));
    }
    for (auto& [ij, elems] : by_ij)
        d.intervals.push_back({ij.first, ij.second, std::move(elems)});
    return d;
}

Partition interval_product_iso(const HullConfig& config, int i, int j,
                               const Partition& sigma, const Partition& rho) {
    require_blank_first(config);
    const int n = config.n();
    int split = config.point_index(i, j);
    // A = points 1..split, B = split+1..n-1.
    std::vector<std::vector<int>> blocks;
    int target = -1;
    for (const auto& b : sigma.blocks()) {
        std::vector<int> mapped;
        for (int p : b) mapped.push_back(1 + p);
        if (std::find(mapped.begin(), mapped.end(), split) != mapped.end())
            target = static_cast<int>(blocks.size());
        blocks.push_back(std::move(mapped));
    }
    if (sigma.n() != split || target < 0)
        throw std::invalid_argument("interval_product_iso: sigma does not fit A_ij");
    blocks[target].insert(blocks[target].begin(), 0);
    for (const auto& b : rho.blocks()) {
        std::vector<int> mapped;
        for (int p : b) mapped.push_back(split + 1 + p);
        blocks.push_back(std::move(mapped));
    }
    if (rho.n() != n - 1 - split)
        throw std::invalid_argument("interval_product_iso: rho does not fit B_ij");
    return Partition(n, std::move(blocks));
}

namespace {

using PartitionChains = std::vector<std::vector<Partition>>;

// Chains of partitions in the local indexing of `config`. Memoized on the
// shape string; callers remap through their own index maps.
PartitionChains scd_partitions(const HullConfig& config,
                               std::map<std::string, PartitionChains>& memo,
                               std::optional<int> blank_side);

PartitionChains scd_segment(const HullConfig& config) {
    const int n = config.n();
    PartitionChains chains;
    for (const auto& chain : bool_scd(n - 1)) {
        std::vector<Partition> mapped;
        for (uint32_t gaps : chain) {
            // Gap g set merges points g and g+1.
            std::vector<std::vector<int>> blocks;
            std::vector<int> cur{0};
            for (int p = 1; p < n; ++p) {
                if (gaps >> (p - 1) & 1) {
                    cur.push_back(p);
                } else {
                    blocks.push_back(cur);
                    cur = {p};
                }
            }
            blocks.push_back(cur);
            mapped.emplace_back(n, std::move(blocks));
        }
        chains.push_back(std::move(mapped));
    }
    return chains;
}

// SCD of an arc sub-configuration, mapped back to parent indices.
PartitionChains scd_of_arc(const HullConfig& parent, int start, int end,
                           std::map<std::string, PartitionChains>& memo) {
    if (start == end) {
        // Single point: the trivial one-element poset.
        return {{Partition(1, {{0}})}};
    }
    ArcSubconfig arc = arc_subconfig(parent, start, end);
    PartitionChains local = scd_partitions(arc.config, memo, std::nullopt);
    // Remap to arc-local positions 0..m-1 in arc order (the caller composes
    // with its own placement); here we keep the arc's new indexing.
    return local;
}

PartitionChains scd_polygon(const HullConfig& config,
                            std::map<std::string, PartitionChains>& memo,
                            std::optional<int> blank_side) {
    int side;
    if (blank_side) {
        side = *blank_side;
        if (side < 1 || side > config.k() || config.side_count(side) != 0)
            throw std::invalid_argument("requested blank side is not blank");
    } else {
        int rot = canonical_rotation(config);
        HullConfig canon = canonical_shape(config);
        auto blanks = canon.blank_sides();
        if (blanks.empty())
            throw std::invalid_argument(
                "no blank side: the symmetric chain construction requires one");
        side = (rot + blanks.front() - 1) % config.k() + 1;
    }
    ArcSubconfig rot = rotate_to_side(config, side);
    const HullConfig& P = rot.config;
    const int n = P.n();
    const int k = P.k();

    PartitionChains chains;

    // X part: NC(P - {z_{1,0}}) x Bool(1); the cover merges {z_{1,0}} into
    // the block of z_{k,c_k}.
    {
        PartitionChains rest = scd_of_arc(P, 1, n - 1, memo);
        ArcSubconfig arc = arc_subconfig(P, 1, n - 1);
        std::vector<std::vector<int>> bool1{{0, 1}};
        for (auto& hook : product_scd(rest, n - 2, bool1, 1)) {
            std::vector<Partition> chain;
            for (auto& [sigma, eps] : hook) {
                std::vector<std::vector<int>> blocks;
                int target = -1;
                for (const auto& b : sigma.blocks()) {
                    std::vector<int> mapped;
                    for (int p : b) mapped.push_back(arc.new_to_old[p]);
                    std::sort(mapped.begin(), mapped.end());
                    if (std::find(mapped.begin(), mapped.end(), n - 1) != mapped.end())
                        target = static_cast<int>(blocks.size());
                    blocks.push_back(std::move(mapped));
                }
                if (eps == 0)
                    blocks.push_back({0});
                else
                    blocks[target].insert(blocks[target].begin(), 0);
                chain.emplace_back(n, std::move(blocks));
            }
            chains.push_back(std::move(chain));
        }
    }

    // Intervals [alpha_ij, beta_ij] ~ NC(A_ij) x NC(B_ij).
    for (int i = 2; i <= k - 1; ++i) {
        for (int j = 0; j <= P.side_count(i); ++j) {
            int split = P.point_index(i, j);
            PartitionChains ca = scd_of_arc(P, 1, split, memo);
            PartitionChains cb = scd_of_arc(P, split + 1, n - 1, memo);
            // Local partitions must be on A's / B's own index order, which the
            // arc maps provide; A_ij never wraps so arc order equals offset order.
            std::vector<int> a_map, b_map;
            if (split == 1) {
                a_map = {1};
            } else {
                ArcSubconfig arcA = arc_subconfig(P, 1, split);
                a_map = arcA.new_to_old;
            }
            if (split + 1 == n - 1) {
                b_map = {n - 1};
            } else {
                ArcSubconfig arcB = arc_subconfig(P, split + 1, n - 1);
                b_map = arcB.new_to_old;
            }
            for (auto& hook : product_scd(ca, split - 1, cb, n - split - 2)) {
                std::vector<Partition> chain;
                for (auto& [sigma, rho] : hook) {
                    std::vector<std::vector<int>> blocks;
                    int target = -1;
                    for (const auto& b : sigma.blocks()) {
                        std::vector<int> mapped;
                        for (int p : b) mapped.push_back(a_map[p]);
                        std::sort(mapped.begin(), mapped.end());
                        if (std::find(mapped.begin(), mapped.end(), split) != mapped.end())
                            target = static_cast<int>(blocks.size());
                        blocks.push_back(std::move(mapped));
                    }
                    blocks[target].insert(blocks[target].begin(), 0);
                    for (const auto& b : rho.blocks()) {
                        std::vector<int> mapped;
                        for (int p : b) mapped.push_back(b_map[p]);
                        std::sort(mapped.begin(), mapped.end());
                        blocks.push_back(std::move(mapped));
                    }
                    chain.emplace_back(n, std::move(blocks));
                }
                chains.push_back(std::move(chain));
            }
        }
    }

    // Map back from the rotated indexing to the caller's.
    PartitionChains out;
    for (auto& chain : chains) {
        std::vector<Partition> mapped;
        for (const Partition& p : chain)
            mapped.push_back(p.restrict_map(rot.new_to_old, n));
        out.push_back(std::move(mapped));
    }
    return out;
}

PartitionChains scd_partitions(const HullConfig& config,
                               std::map<std::string, PartitionChains>& memo,
                               std::optional<int> blank_side) {
    std::string key = config.to_string();
    if (!blank_side) {
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    PartitionChains result = config.is_segment() ? scd_segment(config)
                                                 : scd_polygon(config, memo, blank_side);
    if (!blank_side) memo.emplace(std::move(key), result);
    return result;
}

} // namespace

ChainDecomposition scd(const NCLattice& lattice, std::optional<int> blank_side) {
    std::map<std::string, PartitionChains> memo;
    PartitionChains chains = scd_partitions(lattice.config, memo, blank_side);
    ChainDecomposition d;
    for (const auto& chain : chains) {
        std::vector<int> idx;
        for (const Partition& p : chain) idx.push_back(lattice.index_of(p));
        d.chains.push_back(std::move(idx));
    }
    // Deterministic order: by bottom element's index.
    std::sort(d.chains.begin(), d.chains.end());
    return d;
}

ScdReport verify_scd(const NCLattice& lattice, const ChainDecomposition& decomposition) {
    ScdReport rep;
    const size_t m = lattice.elements.size();
    std::vector<int> seen(m, 0);
    rep.disjoint = true;
    for (const auto& chain : decomposition.chains)
        for (int e : chain) {
            if (e < 0 || static_cast<size_t>(e) >= m)
                throw std::invalid_argument("verify_scd: element index out of range");
            if (seen[e]++ && rep.disjoint) {
                rep.disjoint = false;
                if (rep.witness.empty())
                    rep.witness = "element repeated: " + lattice.elements[e].to_string();
            }
        }
    rep.covering = true;
    for (size_t e = 0; e < m; ++e)
        if (!seen[e]) {
            rep.covering = false;
            if (rep.witness.empty())
                rep.witness = "element missing: " + lattice.elements[e].to_string();
            break;
        }
    std::set<std::pair<int, int>> cover_set(lattice.covers.begin(), lattice.covers.end());
    rep.saturated = true;
    for (const auto& chain : decomposition.chains)
        for (size_t t = 0; t + 1 < chain.size(); ++t)
            if (!cover_set.count({chain[t], chain[t + 1]})) {
                rep.saturated = false;
                if (rep.witness.empty())
                    rep.witness = "not a cover: " + lattice.elements[chain[t]].to_string() +
                                  " -> " + lattice.elements[chain[t + 1]].to_string();
                break;
            }
    rep.centered = true;
    for (const auto& chain : decomposition.chains) {
        if (chain.empty()) continue;
        int lo = lattice.rank[chain.front()];
        int hi = lattice.rank[chain.back()];
        if (lo + hi != lattice.n - 1) {
            rep.centered = false;
            if (rep.witness.empty())
                rep.witness = "chain spans ranks " + std::to_string(lo) + ".." +
                              std::to_string(hi) + " in a poset of height " +
                              std::to_string(lattice.n - 1);
            break;
        }
    }
    return rep;
}

std::string scd_json(const NCLattice& lattice, const ChainDecomposition& decomposition) {
    nlohmann::ordered_json j;
    j["shape"] = lattice.config.to_string();
    j["chains"] = decomposition.chains;
    return j.dump();
}

} // namespace nchull
