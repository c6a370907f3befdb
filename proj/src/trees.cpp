#include "nchull/trees.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nchull {

namespace {

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

// Two chords cross iff their endpoints interleave cyclically; same-side
// overlaps are impossible once both edges pass the third-point test.
bool edges_cross(const HullConfig& config, std::pair<int, int> e, std::pair<int, int> f) {
    auto [a, b] = e;
    auto [c, d] = f;
    if (a == c || a == d || b == c || b == d) return false;
    if (config.is_segment()) {
        auto inside = [](int lo, int hi, int x) { return lo < x && x < hi; };
        return inside(a, b, c) != inside(a, b, d);
    }
    int count = 0;
    for (int x : {c, d}) {
        int rel = (x - a + config.n()) % config.n();
        int relb = (b - a + config.n()) % config.n();
        if (0 < rel && rel < relb) ++count;
    }
    return count == 1;
}

Partition components_partition(int n, const std::vector<std::pair<int, int>>& edges) {
    UnionFind uf(n);
    for (auto [a, b] : edges) uf.unite(a, b);
    std::vector<std::vector<int>> blocks(n);
    for (int p = 0; p < n; ++p) blocks[uf.find(p)].push_back(p);
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const std::vector<int>& b) { return b.empty(); }),
                 blocks.end());
    return Partition(n, std::move(blocks));
}

std::vector<std::vector<int>> adjacency(const Forest& forest) {
    std::vector<std::vector<int>> adj(forest.n);
    for (auto [a, b] : forest.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// Vertices on the unique path from x to y, empty if disconnected.
std::vector<int> tree_path(const Forest& forest, int x, int y) {
    auto adj = adjacency(forest);
    std::vector<int> parent(forest.n, -2);
    parent[x] = -1;
    std::vector<int> stack{x};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (parent[w] == -2) {
                parent[w] = u;
                stack.push_back(w);
            }
    }
    std::vector<int> path;
    if (parent[y] == -2) return path;
    for (int v = y; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

Forest::Forest(int n_, std::vector<std::pair<int, int>> e) : n(n_) {
    for (auto [a, b] : e) {
        if (a == b || a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("malformed edge");
        edges.push_back(norm_edge(a, b));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
}

std::string Forest::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ';';
        os << edges[i].first << '-' << edges[i].second;
    }
    return os.str();
}

Forest Forest::parse(const std::string& text, int n) {
    std::vector<std::pair<int, int>> edges;
    if (!text.empty()) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ';')) {
            size_t dash = tok.find('-');
            if (dash == std::string::npos) throw std::invalid_argument("malformed tree: " + text);
            edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        }
    }
    return Forest(n, std::move(edges));
}

bool edge_valid(const HullConfig& config, int a, int b) {
    for (int z = 0; z < config.n(); ++z)
        if (z != a && z != b && strictly_between(config, a, b, z)) return false;
    return true;
}

bool is_noncrossing_forest(const HullConfig& config, const Forest& forest) {
    for (auto [a, b] : forest.edges)
        if (!edge_valid(config, a, b)) return false;
    for (size_t i = 0; i < forest.edges.size(); ++i)
        for (size_t j = i + 1; j < forest.edges.size(); ++j)
            if (edges_cross(config, forest.edges[i], forest.edges[j])) return false;
    UnionFind uf(forest.n);
    for (auto [a, b] : forest.edges)
        if (!uf.unite(a, b)) return false; // cycle
    return true;
}

bool is_noncrossing_tree(const HullConfig& config, const Forest& tree) {
    return static_cast<int>(tree.edges.size()) == tree.n - 1 && is_noncrossing_forest(config, tree);
}

bool has_convex_geodesics(const HullConfig& config, const Forest& forest) {
    if (!is_noncrossing_forest(config, forest))
        throw std::invalid_argument("has_convex_geodesics: not a noncrossing forest");
    const int n = config.n();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            std::vector<int> path = tree_path(forest, x, y);
            if (path.empty()) continue;
            std::vector<char> on_path(n, 0);
            for (int v : path) on_path[v] = 1;
            // z is in the hull of the path iff it sits strictly between two
            // same-side path vertices.
            for (int z = 0; z < n; ++z) {
                if (on_path[z]) continue;
                for (size_t i = 0; i < path.size(); ++i)
                    for (size_t j = i + 1; j < path.size(); ++j)
                        if (strictly_between(config, path[i], path[j], z)) return false;
            }
        }
    return true;
}

Partition part_of(const HullConfig& config, const Forest& forest) {
    if (!has_convex_geodesics(config, forest))
        throw std::invalid_argument("part_of: forest lacks convex geodesics");
    return components_partition(config.n(), forest.edges);
}

std::vector<Forest> enumerate_cg_trees(const HullConfig& config, int max_n) {
    const int n = config.n();
    if (n > max_n) throw BudgetError("enumerate_cg_trees: n exceeds budget");
    std::vector<std::pair<int, int>> candidates;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge_valid(config, a, b)) candidates.emplace_back(a, b);
    const int m = static_cast<int>(candidates.size());
    std::vector<std::vector<char>> cross(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            cross[i][j] = cross[j][i] = edges_cross(config, candidates[i], candidates[j]);

    std::vector<Forest> out;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int next, UnionFind uf) -> void {
        if (static_cast<int>(chosen.size()) == n - 1) {
            std::vector<std::pair<int, int>> edges;
            for (int c : chosen) edges.push_back(candidates[c]);
            Forest t(n, std::move(edges));
            if (has_convex_geodesics(config, t)) out.push_back(std::move(t));
            return;
        }
        if (m - next < n - 1 - static_cast<int>(chosen.size())) return;
        for (int c = next; c < m; ++c) {
            bool ok = true;
            for (int prev : chosen)
                if (cross[prev][c]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            UnionFind uf2 = uf;
            if (!uf2.unite(candidates[c].first, candidates[c].second)) continue;
            chosen.push_back(c);
            self(self, c + 1, std::move(uf2));
            chosen.pop_back();
        }
    };
    rec(rec, 0, UnionFind(n));
    std::sort(out.begin(), out.end());
    return out;
}

BoolSubposet bool_subposet(const HullConfig& config, const Forest& tree) {
    if (!is_noncrossing_tree(config, tree) || !has_convex_geodesics(config, tree))
        throw std::invalid_argument("bool_subposet: not a spanning cg tree");
    const int ne = static_cast<int>(tree.edges.size());
    BoolSubposet bs;
    bs.tree = tree;
    for (uint32_t mask = 0; mask < (1u << ne); ++mask) {
        std::vector<std::pair<int, int>> sub;
        for (int e = 0; e < ne; ++e)
            if (mask >> e & 1) sub.push_back(tree.edges[e]);
        bs.elements.push_back(components_partition(tree.n, sub));
    }
    // Distinctness and the order isomorphism onto Bool(n-1).
    for (uint32_t m1 = 0; m1 < bs.elements.size(); ++m1)
        for (uint32_t m2 = 0; m2 < bs.elements.size(); ++m2) {
            bool sub = (m1 & m2) == m1;
            if (bs.elements[m1].refines(bs.elements[m2]) != sub)
                throw std::logic_error("bool_subposet: order does not match subforest order");
        }
    return bs;
}

bool in_bool_subposet(const Forest& tree, const Partition& p) {
    auto adj = adjacency(tree);
    for (const auto& block : p.blocks()) {
        if (block.size() == 1) continue;
        std::vector<char> in_block(tree.n, 0);
        for (int v : block) in_block[v] = 1;
        // Connectivity of the induced subgraph.
        std::vector<int> stack{block[0]};
        std::vector<char> seen(tree.n, 0);
        seen[block[0]] = 1;
        size_t count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (in_block[w] && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != block.size()) return false;
    }
    return true;
}

bool atoms_generate_boolean(const NCLattice& lattice, const std::vector<int>& atom_set) {
    for (int a : atom_set)
        if (lattice.rank.at(a) != 1)
            throw std::invalid_argument("atoms_generate_boolean: non-atom in input");
    const size_t m = atom_set.size();
    for (uint32_t s = 0; s < (1u << m); ++s) {
        Partition j = Partition::singletons(lattice.n);
        int count = 0;
        for (size_t t = 0; t < m; ++t)
            if (s >> t & 1) {
                j = join_partitions(lattice.config, j, lattice.elements[atom_set[t]]);
                ++count;
            }
        if (j.rank() != count) return false;
    }
    return true;
}

std::vector<std::vector<int>> maximal_boolean_atom_sets(const NCLattice& lattice) {
    std::vector<int> atoms = lattice.atoms();
    const int n = lattice.n;
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    Partition current = Partition::singletons(n);
    // Rank additivity is hereditary, so prefix pruning is sound; the full
    // subset condition is certified once a candidate reaches size n-1.
    auto rec = [&](auto&& self, size_t next, const Partition& cur) -> void {
        if (static_cast<int>(chosen.size()) == n - 1) {
            if (cur.block_count() == 1 && atoms_generate_boolean(lattice, chosen))
                out.push_back(chosen);
            return;
        }
        if (atoms.size() - next < static_cast<size_t>(n - 1) - chosen.size()) return;
        for (size_t t = next; t < atoms.size(); ++t) {
            Partition j = join_partitions(lattice.config, cur, lattice.elements[atoms[t]]);
            if (j.rank() != static_cast<int>(chosen.size()) + 1) continue;
            chosen.push_back(atoms[t]);
            self(self, t + 1, j);
            chosen.pop_back();
        }
    };
    rec(rec, 0, current);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Cyclic angular order of the incident edges at q in the realized embedding.
// Distinct boundary points give distinct directions except along one side
// line, where the nearer point comes first.
std::vector<std::pair<int, int>> incident_in_angular_order(const HullConfig& config,
                                                           const Forest& tree, int q) {
    std::vector<ExactPoint> pts = realize(config);
    std::vector<std::pair<int, int>> inc;
    for (auto e : tree.edges)
        if (e.first == q || e.second == q) inc.push_back(e);
    auto other = [&](std::pair<int, int> e) { return e.first == q ? e.second : e.first; };
    auto dir = [&](std::pair<int, int> e) {
        return ExactPoint(pts[other(e)].x - pts[q].x, pts[other(e)].y - pts[q].y);
    };
    auto half = [](const ExactPoint& v) {
        return (sgn(v.y) > 0 || (sgn(v.y) == 0 && sgn(v.x) > 0)) ? 0 : 1;
    };
    std::sort(inc.begin(), inc.end(), [&](std::pair<int, int> a, std::pair<int, int> b) {
        ExactPoint u = dir(a), v = dir(b);
        int hu = half(u), hv = half(v);
        if (hu != hv) return hu < hv;
        Rat cr = u.x * v.y - u.y * v.x;
        if (sgn(cr) != 0) return sgn(cr) > 0;
        Rat lu = u.x * u.x + u.y * u.y;
        Rat lv = v.x * v.x + v.y * v.y;
        return lu < lv;
    });
    return inc;
}

} // namespace

Forest slide(const HullConfig& config, const Forest& tree,
             std::pair<int, int> e, std::pair<int, int> f) {
    e = norm_edge(e.first, e.second);
    f = norm_edge(f.first, f.second);
    auto has = [&](std::pair<int, int> x) {
        return std::find(tree.edges.begin(), tree.edges.end(), x) != tree.edges.end();
    };
    if (!has(e) || !has(f)) throw std::invalid_argument("slide: edges not in tree");
    // Shared vertex q, remaining endpoints p and r.
    int q;
    if (e.first == f.first || e.first == f.second)
        q = e.first;
    else if (e.second == f.first || e.second == f.second)
        q = e.second;
    else
        throw std::invalid_argument("slide: edges do not share a vertex");
    int p = e.first == q ? e.second : e.first;
    int r = f.first == q ? f.second : f.first;

    auto inc = incident_in_angular_order(config, tree, q);
    auto pos = [&](std::pair<int, int> x) {
        return static_cast<int>(std::find(inc.begin(), inc.end(), x) - inc.begin());
    };
    int d = static_cast<int>(inc.size());
    int pe = pos(e), pf = pos(f);
    if ((pe + 1) % d != pf && (pf + 1) % d != pe)
        throw std::invalid_argument("slide: edges not angularly adjacent at the shared vertex");

    std::vector<std::pair<int, int>> edges = tree.edges;
    edges.erase(std::find(edges.begin(), edges.end(), e));
    edges.push_back(norm_edge(p, r));
    Forest slid(tree.n, std::move(edges));
    if (!is_noncrossing_tree(config, slid))
        throw SlideLeavesClass("slide: result leaves the noncrossing class");
    return slid;
}

bool slide_membership(const HullConfig& config, const Forest& tree, const Forest& slid,
                      const Partition& partition) {
    if (!in_bool_subposet(tree, partition))
        throw std::invalid_argument("slide_membership: partition not in Bool(tree)");
    (void)config;
    return in_bool_subposet(slid, partition);
}

UnionCheck boolean_union_check(const NCLattice& lattice, const std::vector<Forest>& trees) {
    UnionCheck uc;
    uc.witness.assign(lattice.elements.size(), -1);
    for (size_t e = 0; e < lattice.elements.size(); ++e) {
        for (size_t t = 0; t < trees.size(); ++t)
            if (in_bool_subposet(trees[t], lattice.elements[e])) {
                uc.witness[e] = static_cast<int>(t);
                break;
            }
        if (uc.witness[e] < 0 && uc.missing_element < 0)
            uc.missing_element = static_cast<int>(e);
    }
    uc.covered = uc.missing_element < 0;
    return uc;
}

Collapse collapse_corner(const HullConfig& configQ, int side) {
    if (configQ.is_segment()) throw std::invalid_argument("collapse_corner: segment input");
    const int k = configQ.k();
    if (k <= 3)
        throw std::invalid_argument("collapse_corner: collapsing a triangle needs an explicit landing");
    if (side < 1 || side > k) throw std::invalid_argument("collapse_corner: side out of range");
    const int n = configQ.n();
    Collapse out;
    std::vector<int> counts;
    if (side >= 2) {
        for (int s = 1; s <= k; ++s) {
            if (s == side) continue;
            if (s == side - 1)
                counts.push_back(configQ.side_count(side - 1) + 1 + configQ.side_count(side));
            else
                counts.push_back(configQ.side_count(s));
        }
        out.configP = HullConfig::polygon(std::move(counts));
        out.old_to_new.resize(n);
        std::iota(out.old_to_new.begin(), out.old_to_new.end(), 0);
    } else {
        for (int s = 2; s <= k - 1; ++s) counts.push_back(configQ.side_count(s));
        counts.push_back(configQ.side_count(k) + 1 + configQ.side_count(1));
        out.configP = HullConfig::polygon(std::move(counts));
        int base = configQ.point_index(2, 0);
        out.old_to_new.resize(n);
        for (int i = 0; i < n; ++i) out.old_to_new[i] = (i - base + n) % n;
    }
    return out;
}

namespace {

Forest map_forest(const Forest& f, const std::vector<int>& old_to_new, int n) {
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : f.edges) edges.push_back(norm_edge(old_to_new[a], old_to_new[b]));
    return Forest(n, std::move(edges));
}

bool valid_repair(const HullConfig& configQ, const HullConfig& configP,
                  const std::vector<int>& old_to_new, const Forest& treeQ,
                  const Partition& rho, Forest* outP) {
    if (!is_noncrossing_tree(configQ, treeQ) || !has_convex_geodesics(configQ, treeQ))
        return false;
    if (!in_bool_subposet(treeQ, rho)) return false;
    Forest mapped = map_forest(treeQ, old_to_new, configP.n());
    if (!is_noncrossing_tree(configP, mapped)) return false;
    if (!has_convex_geodesics(configP, mapped)) return false;
    *outP = std::move(mapped);
    return true;
}

} // namespace

Forest collapse_repair(const HullConfig& configQ, const Forest& treeQ,
                       const HullConfig& configP, const std::vector<int>& old_to_new,
                       const Partition& rho, bool exhaustive_fallback) {
    const int n = configQ.n();
    if (!is_noncrossing_tree(configQ, treeQ) || !has_convex_geodesics(configQ, treeQ))
        throw std::invalid_argument("collapse_repair: treeQ is not a spanning cg tree on Q");
    if (!in_bool_subposet(treeQ, rho))
        throw std::invalid_argument("collapse_repair: rho not in Bool(treeQ)");
    Partition rho_p = rho.restrict_map(old_to_new, n);
    if (!is_noncrossing(configP, rho_p))
        throw std::invalid_argument("collapse_repair: m(rho) is not noncrossing on P");

    // Collapsing to a segment leaves a single cg tree, and its Boolean
    // subposet is all of NC(P).
    if (configP.is_segment()) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return Forest(n, std::move(edges));
    }

    Forest result;
    if (valid_repair(configQ, configP, old_to_new, treeQ, rho, &result)) return result;

    // The collapsed corner is the Q-corner that lost corner status.
    int z0 = -1;
    for (int c : configQ.corner_indices())
        if (!configP.is_corner(old_to_new[c])) z0 = c;
    if (z0 < 0) throw std::invalid_argument("collapse_repair: map is not an elementary collapse");
    int zm = (z0 - 1 + n) % n;
    int zp = (z0 + 1) % n;

    auto try_candidates = [&]() -> std::optional<Forest> {
        std::vector<int> geo = tree_path(treeQ, zm, zp);
        if (geo.empty()) return std::nullopt;
        // z0 hangs off the geodesic by its unique edge.
        std::vector<int> nb;
        for (auto [a, b] : treeQ.edges) {
            if (a == z0) nb.push_back(b);
            if (b == z0) nb.push_back(a);
        }
        if (nb.size() != 1) return std::nullopt;
        auto jt = std::find(geo.begin(), geo.end(), nb[0]);
        if (jt == geo.end()) return std::nullopt;
        int j = static_cast<int>(jt - geo.begin());

        auto attempt = [&](const Forest& t, std::pair<int, int> e,
                           std::pair<int, int> f) -> std::optional<Forest> {
            try {
                Forest slid = slide(configQ, t, e, f);
                Forest mapped;
                if (has_convex_geodesics(configQ, slid) && in_bool_subposet(slid, rho) &&
                    valid_repair(configQ, configP, old_to_new, slid, rho, &mapped))
                    return mapped;
            } catch (const std::exception&) {
            }
            return std::nullopt;
        };

        if (rho.block_of(nb[0]) == rho.block_of(z0)) {
            // Shared-block case: one slide folds z0 into the geodesic.
            for (int d : {-1, +1}) {
                int t = j + d;
                if (t < 0 || t >= static_cast<int>(geo.size())) continue;
                if (auto r = attempt(treeQ, {geo[j], geo[t]}, {geo[j], z0})) return r;
            }
            return std::nullopt;
        }

        // Singleton case: walk z0 along the geodesic to the last vertex
        // sharing nb[0]'s block, then fold it in before the first leaver.
        if (rho.block_mask_of(z0) != (1u << z0)) return std::nullopt;
        struct Route {
            int dist;
            int dir;
        };
        std::vector<Route> routes;
        for (int d : {-1, +1}) {
            for (int t = j + d; t >= 0 && t < static_cast<int>(geo.size()); t += d) {
                if (rho.block_of(geo[t]) != rho.block_of(geo[j])) {
                    routes.push_back({std::abs(t - j), d});
                    break;
                }
            }
        }
        std::sort(routes.begin(), routes.end(),
                  [](const Route& a, const Route& b) { return a.dist < b.dist; });
        for (const Route& route : routes) {
            Forest cur = treeQ;
            bool ok = true;
            int attach = j;
            // Slide the z0 edge stepwise toward the leaver.
            for (int steps = 0; steps + 1 < route.dist && ok; ++steps) {
                int next = attach + route.dir;
                try {
                    cur = slide(configQ, cur, {z0, geo[attach]}, {geo[attach], geo[next]});
                    ok = has_convex_geodesics(configQ, cur) && in_bool_subposet(cur, rho);
                    attach = next;
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            if (!ok) continue;
            int vl = attach + route.dir;
            if (auto r = attempt(cur, {geo[attach], geo[vl]}, {geo[attach], z0})) return r;
        }
        return std::nullopt;
    };

    if (auto r = try_candidates()) return *r;

    if (exhaustive_fallback) {
        for (const Forest& t : enumerate_cg_trees(configP))
            if (in_bool_subposet(t, rho_p)) return t;
    }
    throw std::logic_error("collapse_repair: slide procedure failed to certify (bug)");
}

Forest collapse_repair(const HullConfig& configQ, const Forest& treeQ, int collapsed_corner,
                       const Partition& rho, bool exhaustive_fallback) {
    Collapse c = collapse_corner(configQ, collapsed_corner);
    return collapse_repair(configQ, treeQ, c.configP, c.old_to_new, rho, exhaustive_fallback);
}

} // namespace nchull
