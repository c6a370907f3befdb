#include "nchull/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nchull {

namespace {

// Number of maximal runs of block labels around the circle; >= 4 runs means
// the two blocks interleave.
bool cyclic_interleaved(int n, uint32_t b1, uint32_t b2) {
    int runs = 0;
    int prev = -1, first = -1;
    for (int i = 0; i < n; ++i) {
        int lab = (b1 & (1u << i)) ? 0 : (b2 & (1u << i)) ? 1 : -1;
        if (lab < 0) continue;
        if (first < 0) first = lab;
        if (lab != prev) ++runs;
        prev = lab;
    }
    if (prev == first && runs > 1) --runs; // cyclic wrap merges first and last run
    return runs >= 4;
}

bool same_side_containment(const HullConfig& config, uint32_t outer, uint32_t inner) {
    const int k = config.is_segment() ? 1 : config.k();
    for (int s = 1; s <= k; ++s) {
        std::vector<int> line = config.side_line(s);
        int lo = -1, hi = -1;
        for (size_t t = 0; t < line.size(); ++t)
            if (outer & (1u << line[t])) {
                if (lo < 0) lo = static_cast<int>(t);
                hi = static_cast<int>(t);
            }
        if (lo < 0 || hi <= lo + 1) continue;
        for (int t = lo + 1; t < hi; ++t)
            if (inner & (1u << line[t])) return true;
    }
    return false;
}

} // namespace

bool blocks_cross(const HullConfig& config, uint32_t b1, uint32_t b2) {
    if (b1 & b2) throw std::invalid_argument("blocks_cross: blocks overlap");
    if (!config.is_segment() && cyclic_interleaved(config.n(), b1, b2)) return true;
    return same_side_containment(config, b1, b2) || same_side_containment(config, b2, b1);
}

bool is_noncrossing(const HullConfig& config, const Partition& p) {
    if (p.n() != config.n()) throw std::invalid_argument("partition size mismatch");
    const auto& masks = p.masks();
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i + 1; j < masks.size(); ++j)
            if (blocks_cross(config, masks[i], masks[j])) return false;
    return true;
}

std::vector<Partition> noncrossing_by_filter(const HullConfig& config) {
    std::vector<Partition> out;
    for (const Partition& p : all_partitions(config.n()))
        if (is_noncrossing(config, p)) out.push_back(p);
    return out;
}

std::vector<Partition> noncrossing_by_generator(const HullConfig& config) {
    const int n = config.n();
    std::vector<Partition> out;
    std::vector<uint32_t> blocks;
    auto rec = [&](auto&& self, int point) -> void {
        if (point == n) {
            std::vector<std::vector<int>> lists;
            for (uint32_t m : blocks) {
                std::vector<int> b;
                for (int i = 0; i < n; ++i)
                    if (m & (1u << i)) b.push_back(i);
                lists.push_back(std::move(b));
            }
            out.emplace_back(n, std::move(lists));
            return;
        }
        const uint32_t bit = 1u << point;
        for (size_t b = 0; b <= blocks.size(); ++b) {
            if (b < blocks.size()) {
                uint32_t grown = blocks[b] | bit;
                bool ok = true;
                for (size_t o = 0; o < blocks.size() && ok; ++o)
                    if (o != b && blocks_cross(config, grown, blocks[o])) ok = false;
                if (!ok) continue;
                blocks[b] = grown;
                self(self, point + 1);
                blocks[b] = grown & ~bit;
            } else {
                bool ok = true;
                for (size_t o = 0; o < blocks.size() && ok; ++o)
                    if (blocks_cross(config, bit, blocks[o])) ok = false;
                if (!ok) continue;
                blocks.push_back(bit);
                self(self, point + 1);
                blocks.pop_back();
            }
        }
    };
    if (n > 0) {
        blocks.push_back(1u);
        rec(rec, 1);
    }
    return out;
}

int NCLattice::index_of(const Partition& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw std::invalid_argument("partition not in lattice: " + p.to_string());
    return it->second;
}

int NCLattice::bottom() const { return index_of(Partition::singletons(n)); }
int NCLattice::top() const { return index_of(Partition::one_block(n)); }

std::vector<int> NCLattice::atoms() const {
    std::vector<int> out;
    for (size_t i = 0; i < elements.size(); ++i)
        if (rank[i] == 1) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> NCLattice::coatoms() const {
    std::vector<int> out;
    for (size_t i = 0; i < elements.size(); ++i)
        if (rank[i] == n - 2) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<std::vector<int>> NCLattice::up_adjacency() const {
    std::vector<std::vector<int>> up(elements.size());
    for (auto [lo, hi] : covers) up[lo].push_back(hi);
    return up;
}

NCLattice build_lattice(const HullConfig& config, const BuildOptions& options) {
    if (config.n() > options.max_n)
        throw BudgetError("build_lattice: n=" + std::to_string(config.n()) +
                          " exceeds budget max_n=" + std::to_string(options.max_n));
    NCLattice L;
    L.config = config;
    L.n = config.n();
    L.elements = (L.n <= 9) ? noncrossing_by_filter(config) : noncrossing_by_generator(config);
    if (static_cast<long>(L.elements.size()) > options.max_partitions)
        throw BudgetError("build_lattice: element count exceeds max_partitions");
    L.rank.reserve(L.elements.size());
    for (size_t i = 0; i < L.elements.size(); ++i) {
        L.rank.push_back(L.elements[i].rank());
        L.index.emplace(L.elements[i], static_cast<int>(i));
    }
    // Covers as rank-1 merges of two blocks; validity is re-checked against
    // the raw order by is_graded / covers_from_order.
    for (size_t i = 0; i < L.elements.size(); ++i) {
        const Partition& p = L.elements[i];
        for (int b1 = 0; b1 < p.block_count(); ++b1)
            for (int b2 = b1 + 1; b2 < p.block_count(); ++b2) {
                Partition merged = p.merge_blocks(b1, b2);
                auto it = L.index.find(merged);
                if (it != L.index.end())
                    L.covers.emplace_back(static_cast<int>(i), it->second);
            }
    }
    std::sort(L.covers.begin(), L.covers.end());
    L.covers.erase(std::unique(L.covers.begin(), L.covers.end()), L.covers.end());
    return L;
}

int meet(const NCLattice& lattice, int a, int b) {
    const Partition m = lattice.elements.at(a).meet_with(lattice.elements.at(b));
    return lattice.index_of(m);
}

Partition join_partitions(const HullConfig& config, const Partition& a, const Partition& b) {
    Partition j = a.join_with(b);
    // Merge crossing block pairs until noncrossing. Any noncrossing upper
    // bound must coarsen each intermediate, so the fixpoint is the join.
    bool changed = true;
    while (changed) {
        changed = false;
        const auto& masks = j.masks();
        for (int x = 0; x < j.block_count() && !changed; ++x)
            for (int y = x + 1; y < j.block_count() && !changed; ++y)
                if (blocks_cross(config, masks[x], masks[y])) {
                    j = j.merge_blocks(x, y);
                    changed = true;
                }
    }
    return j;
}

int join(const NCLattice& lattice, int a, int b) {
    return lattice.index_of(join_partitions(lattice.config, lattice.elements.at(a), lattice.elements.at(b)));
}

std::vector<long> rank_polynomial(const NCLattice& lattice) {
    std::vector<long> counts(lattice.n, 0);
    for (int r : lattice.rank) counts.at(r)++;
    return counts;
}

bool is_rank_symmetric(const NCLattice& lattice) {
    std::vector<long> c = rank_polynomial(lattice);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != c[c.size() - 1 - i]) return false;
    return true;
}

namespace {

// Bitset rows over the element set.
struct Relation {
    size_t n = 0, words = 0;
    std::vector<uint64_t> bits;
    Relation(size_t n_) : n(n_), words((n_ + 63) / 64), bits(n_ * words, 0) {}
    void set(size_t i, size_t j) { bits[i * words + j / 64] |= 1ULL << (j % 64); }
    bool get(size_t i, size_t j) const { return bits[i * words + j / 64] >> (j % 64) & 1; }
    const uint64_t* row(size_t i) const { return &bits[i * words]; }
};

Relation strict_order(const NCLattice& L) {
    const size_t m = L.elements.size();
    Relation lt(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (i != j && L.rank[i] < L.rank[j] && L.elements[i].refines(L.elements[j]))
                lt.set(i, j);
    return lt;
}

} // namespace

std::vector<std::pair<int, int>> covers_from_order(const NCLattice& lattice) {
    const size_t m = lattice.elements.size();
    Relation lt = strict_order(lattice);
    // above[i] = elements above i; below[j] likewise. i <. j iff nothing
    // sits strictly between.
    Relation below(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (lt.get(i, j)) below.set(j, i);
    std::vector<std::pair<int, int>> covers;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (!lt.get(i, j)) continue;
            const uint64_t* up = lt.row(i);
            const uint64_t* dn = below.row(j);
            bool between = false;
            for (size_t w = 0; w < lt.words && !between; ++w)
                if (up[w] & dn[w]) between = true;
            if (!between) covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    std::sort(covers.begin(), covers.end());
    return covers;
}

bool is_graded(const NCLattice& lattice) {
    for (auto [lo, hi] : covers_from_order(lattice))
        if (lattice.rank[hi] - lattice.rank[lo] != 1) return false;
    return true;
}

bool embedding_check(const HullConfig& configP, const HullConfig& configQ,
                     const BuildOptions& options) {
    if (configP.n() != configQ.n())
        throw std::invalid_argument("embedding_check: point counts differ");
    if (configP.is_segment()) {
        // Identity labels flatten Q onto the segment only when the wrap side
        // is blank; otherwise point n-1 is internal in Q but extreme in P.
        if (!configQ.is_segment() && configQ.side_count(configQ.k()) != 0)
            throw std::invalid_argument("embedding_check: configs not comparable");
    } else {
        if (configQ.is_segment())
            throw std::invalid_argument("embedding_check: polygon cannot sit below a segment");
        std::vector<int> cp = configP.corner_indices();
        std::vector<int> cq = configQ.corner_indices();
        for (int c : cp)
            if (std::find(cq.begin(), cq.end(), c) == cq.end())
                throw std::invalid_argument("embedding_check: corner sets not nested");
    }
    NCLattice LP = build_lattice(configP, options);
    NCLattice LQ = build_lattice(configQ, options);
    for (const Partition& p : LP.elements)
        if (LQ.index.find(p) == LQ.index.end()) return false;
    // The injection is the identity on partitions and refinement reads only
    // the labels, so the orders coincide on the shared elements.
    return true;
}

std::string lattice_json(const NCLattice& lattice) {
    nlohmann::ordered_json j;
    j["shape"] = lattice.config.to_string();
    j["n"] = lattice.n;
    std::vector<std::string> elems;
    for (const Partition& p : lattice.elements) elems.push_back(p.to_string());
    j["elements"] = elems;
    j["ranks"] = lattice.rank;
    std::vector<std::vector<int>> cov;
    for (auto [lo, hi] : lattice.covers) cov.push_back({lo, hi});
    j["covers"] = cov;
    return j.dump();
}

std::string lattice_dot(const NCLattice& lattice) {
    std::ostringstream os;
    os << "digraph NC {\n  rankdir=BT;\n";
    for (size_t i = 0; i < lattice.elements.size(); ++i)
        os << "  e" << i << " [label=\"" << lattice.elements[i].to_string() << "\"];\n";
    for (auto [lo, hi] : lattice.covers)
        os << "  e" << lo << " -> e" << hi << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace nchull
