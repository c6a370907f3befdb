#include "nchull/oracle.hpp"

#include "nchull/config.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nchull {

namespace {

std::vector<ExactPoint> gather(const std::vector<ExactPoint>& points, uint32_t mask) {
    std::vector<ExactPoint> out;
    for (size_t i = 0; i < points.size(); ++i)
        if (mask & (1u << i)) out.push_back(points[i]);
    return out;
}

struct ForestAdj {
    std::vector<std::vector<int>> adj;
    explicit ForestAdj(int n, const std::vector<std::pair<int, int>>& edges) : adj(n) {
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
};

// Vertices reachable from v inside `allowed`.
uint32_t component_within(const ForestAdj& f, uint32_t allowed, int v) {
    uint32_t seen = 1u << v;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : f.adj[u])
            if ((allowed >> w & 1) && !(seen >> w & 1)) {
                seen |= 1u << w;
                stack.push_back(w);
            }
    }
    return seen;
}

bool validate_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> norm;
    for (auto [a, b] : edges) {
        if (a == b || a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("malformed edge list");
        norm.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(norm.begin(), norm.end());
    if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
        throw std::invalid_argument("duplicate edge");
    return true;
}

} // namespace

bool nc_oracle(const std::vector<ExactPoint>& points, const Partition& partition) {
    if (static_cast<int>(points.size()) != partition.n())
        throw std::invalid_argument("nc_oracle: size mismatch");
    const auto& masks = partition.masks();
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i + 1; j < masks.size(); ++j)
            if (!hulls_disjoint(gather(points, masks[i]), gather(points, masks[j])))
                return false;
    return true;
}

std::vector<Partition> nc_lattice_oracle(const std::vector<ExactPoint>& points, int max_n) {
    const int n = static_cast<int>(points.size());
    if (n > max_n)
        throw BudgetError("nc_lattice_oracle: n exceeds budget");
    // Memoize pairwise block-hull disjointness; block masks repeat heavily
    // across the Bell-number sweep.
    std::vector<std::vector<ExactPoint>> hull_of(1u << n);
    std::vector<char> have_hull(1u << n, 0);
    auto hull = [&](uint32_t m) -> const std::vector<ExactPoint>& {
        if (!have_hull[m]) {
            hull_of[m] = convex_hull(gather(points, m));
            have_hull[m] = 1;
        }
        return hull_of[m];
    };
    auto disjoint = [&](uint32_t a, uint32_t b) {
        const auto& ha = hull(a);
        const auto& hb = hull(b);
        return hulls_disjoint(ha, hb);
    };
    std::vector<Partition> out;
    for (const Partition& p : all_partitions(n)) {
        const auto& masks = p.masks();
        bool ok = true;
        for (size_t i = 0; i < masks.size() && ok; ++i)
            for (size_t j = i + 1; j < masks.size() && ok; ++j)
                if (!disjoint(masks[i], masks[j])) ok = false;
        if (ok) out.push_back(p);
    }
    return out;
}

bool tree_oracle_pairwise_cg(const std::vector<ExactPoint>& points,
                             const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(points.size());
    ForestAdj f(n, edges);
    // Unique path between x and y via DFS parent trace.
    auto path_mask = [&](int x, int y) -> uint32_t {
        std::vector<int> parent(n, -2);
        parent[x] = -1;
        std::vector<int> stack{x};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (u == y) break;
            for (int w : f.adj[u])
                if (parent[w] == -2) {
                    parent[w] = u;
                    stack.push_back(w);
                }
        }
        if (parent[y] == -2) return 0;
        uint32_t m = 0;
        for (int v = y; v != -1; v = parent[v]) m |= 1u << v;
        return m;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            uint32_t pm = path_mask(x, y);
            if (!pm) continue; // different components
            std::vector<ExactPoint> h = convex_hull(gather(points, pm));
            for (int z = 0; z < n; ++z)
                if (!(pm >> z & 1) && point_in_hull(h, points[z])) return false;
        }
    return true;
}

TreeOracleResult tree_oracle(const std::vector<ExactPoint>& points,
                             const std::vector<std::pair<int, int>>& edges,
                             int max_n) {
    const int n = static_cast<int>(points.size());
    if (n > max_n) throw BudgetError("tree_oracle: n exceeds budget");
    validate_edges(n, edges);
    TreeOracleResult res;

    for (auto [a, b] : edges)
        for (int z = 0; z < n; ++z)
            if (z != a && z != b && strictly_inside_segment(points[a], points[b], points[z]))
                return res;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            bool shared = a == c || a == d || b == c || b == d;
            if (shared) continue; // overlap through a shared endpoint is
                                  // excluded by the third-point test above
            if (segments_intersect(points[a], points[b], points[c], points[d]))
                return res;
        }
    res.noncrossing = true;

    // Literal definition: every connected vertex subset spanning a subtree
    // must have a hull meeting the configuration only in its vertices.
    ForestAdj f(n, edges);
    res.convex_geodesics = true;
    const uint64_t all = (1ULL << n) - 1;
    for (uint64_t sub = 1; sub <= all && res.convex_geodesics; ++sub) {
        int v = std::countr_zero(static_cast<uint32_t>(sub));
        uint32_t sub32 = static_cast<uint32_t>(sub);
        if (component_within(f, sub32, v) != sub32) continue; // not a subtree's vertex set
        std::vector<ExactPoint> h = convex_hull(gather(points, sub32));
        for (int z = 0; z < n; ++z)
            if (!(sub32 >> z & 1) && point_in_hull(h, points[z])) {
                res.convex_geodesics = false;
                break;
            }
    }
    return res;
}

} // namespace nchull
