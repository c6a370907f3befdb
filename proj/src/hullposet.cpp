#include "nchull/hullposet.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nchull {

namespace {

std::vector<int> rotate_to_zero(std::vector<int> order) {
    auto it = std::find(order.begin(), order.end(), 0);
    std::rotate(order.begin(), it, order.end());
    return order;
}

} // namespace

HullElement HullElement::cyclic(std::vector<int> order, std::vector<int> corners) {
    HullElement e;
    e.n = static_cast<int>(order.size());
    e.order = rotate_to_zero(std::move(order));
    std::sort(corners.begin(), corners.end());
    if (corners.size() < 3) throw std::invalid_argument("cyclic element needs >= 3 corners");
    e.corners = std::move(corners);
    e.rank = static_cast<int>(e.corners.size());
    return e;
}

HullElement HullElement::linear(std::vector<int> order) {
    HullElement e;
    e.n = static_cast<int>(order.size());
    std::vector<int> rev(order.rbegin(), order.rend());
    e.order = std::min(order, rev);
    e.rank = 2;
    return e;
}

std::string HullElement::to_string() const {
    std::ostringstream os;
    os << (rank == 2 ? "linear:" : "cyclic:");
    for (size_t i = 0; i < order.size(); ++i) {
        if (i) os << ',';
        os << order[i];
    }
    if (rank != 2) {
        os << "|corners:";
        for (size_t i = 0; i < corners.size(); ++i) {
            if (i) os << ',';
            os << corners[i];
        }
    }
    return os.str();
}

bool HullElement::operator<(const HullElement& o) const {
    if (rank != o.rank) return rank < o.rank;
    if (order != o.order) return order < o.order;
    return corners < o.corners;
}

std::pair<HullConfig, std::vector<int>> HullElement::to_config() const {
    if (rank == 2) return {HullConfig::segment(n), order};
    std::vector<char> is_corner(n, 0);
    for (int c : corners) is_corner[c] = 1;
    int start = 0;
    while (!is_corner[order[start]]) ++start;
    std::vector<int> pos_to_label(n);
    for (int t = 0; t < n; ++t) pos_to_label[t] = order[(start + t) % n];
    std::vector<int> counts;
    int run = -1;
    for (int t = 0; t < n; ++t) {
        if (is_corner[pos_to_label[t]]) {
            if (run >= 0) counts.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    counts.push_back(run);
    return {HullConfig::polygon(std::move(counts)), std::move(pos_to_label)};
}

std::vector<HullElement> enumerate_hull(int n, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("enumerate_hull: rank out of range");
    std::vector<HullElement> out;
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    if (k == 2) {
        // Canonical linear orders: first label smaller than last.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (perm.front() < perm.back()) out.push_back(HullElement::linear(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }
    do {
        std::vector<int> order{0};
        order.insert(order.end(), rest.begin(), rest.end());
        // Corner subsets of the labels.
        std::vector<int> sel(k);
        auto rec = [&](auto&& self, int pos, int from) -> void {
            if (pos == k) {
                out.push_back(HullElement::cyclic(order, sel));
                return;
            }
            for (int v = from; v < n; ++v) {
                sel[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Collapsing a corner x of a triangle-rank element: the fixed side chain F
// stays put, x lands anywhere, and the chains of x's two incident sides land
// between x and their far corners. The reachable linear orders are exactly
// the permutations whose restrictions to the three chains are monotone
// (F read forwards; each incident chain forwards or backwards).
void rank3_landings(const HullElement& y, std::set<HullElement>& out) {
    const int n = y.n;
    // Corners in cyclic order.
    std::vector<int> corner_pos;
    for (int t = 0; t < n; ++t)
        if (std::find(y.corners.begin(), y.corners.end(), y.order[t]) != y.corners.end())
            corner_pos.push_back(t);
    for (int ci = 0; ci < 3; ++ci) {
        int px = corner_pos[ci];
        int pu = corner_pos[(ci + 1) % 3];
        int pv = corner_pos[(ci + 2) % 3];
        auto chain = [&](int from, int to) {
            std::vector<int> c;
            for (int t = from;; t = (t + 1) % n) {
                c.push_back(y.order[t]);
                if (t == to) break;
            }
            return c;
        };
        std::vector<int> C1 = chain(px, pu); // x ... u
        std::vector<int> F = chain(pu, pv);  // u ... v
        std::vector<int> C3 = chain(pv, px); // v ... x
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        auto respects = [](const std::vector<int>& w, const std::vector<int>& c) {
            // c appears as a subsequence of w, forwards or backwards.
            std::vector<int> pos(w.size());
            for (size_t i = 0; i < w.size(); ++i) pos[w[i]] = static_cast<int>(i);
            bool fwd = true, bwd = true;
            for (size_t i = 0; i + 1 < c.size(); ++i) {
                if (pos[c[i]] > pos[c[i + 1]]) fwd = false;
                if (pos[c[i]] < pos[c[i + 1]]) bwd = false;
            }
            return fwd || bwd;
        };
        do {
            // Fix the global reading direction by pinning F forwards.
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[perm[i]] = i;
            bool f_fwd = true;
            for (size_t i = 0; i + 1 < F.size(); ++i)
                if (pos[F[i]] > pos[F[i + 1]]) f_fwd = false;
            if (!f_fwd) continue;
            if (!respects(perm, C1) || !respects(perm, C3)) continue;
            out.insert(HullElement::linear(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

} // namespace

std::vector<HullElement> elementary_collapses(const HullElement& element, HullPosetCache& cache) {
    if (element.rank == 2)
        throw std::invalid_argument("elementary_collapses: minimal element has none");
    std::string key = element.to_string();
    auto it = cache.collapses.find(key);
    if (it != cache.collapses.end()) return it->second;
    std::vector<HullElement> out;
    if (element.rank >= 4) {
        for (int drop : element.corners) {
            std::vector<int> rest;
            for (int c : element.corners)
                if (c != drop) rest.push_back(c);
            out.push_back(HullElement::cyclic(element.order, rest));
        }
    } else {
        std::set<HullElement> landings;
        rank3_landings(element, landings);
        out.assign(landings.begin(), landings.end());
    }
    std::sort(out.begin(), out.end());
    cache.collapses.emplace(std::move(key), out);
    return out;
}

namespace {

const std::set<std::string>& rank2_below(const HullElement& b, HullPosetCache& cache) {
    std::string key = b.to_string();
    auto it = cache.rank2_below.find(key);
    if (it != cache.rank2_below.end()) return it->second;
    std::set<std::string> acc;
    if (b.rank == 2) {
        acc.insert(key);
    } else {
        for (const HullElement& c : elementary_collapses(b, cache)) {
            const auto& sub = rank2_below(c, cache);
            acc.insert(sub.begin(), sub.end());
        }
    }
    return cache.rank2_below.emplace(std::move(key), std::move(acc)).first->second;
}

} // namespace

bool leq(const HullElement& a, const HullElement& b, HullPosetCache& cache) {
    if (a.n != b.n) throw std::invalid_argument("leq: label sets differ");
    if (a == b) return true;
    if (a.rank >= b.rank) return false;
    if (a.rank == 2) {
        // Only the rank-2 boundary needs genuine search; cache it per b.
        if (b.rank == 3) {
            auto cs = elementary_collapses(b, cache);
            return std::find(cs.begin(), cs.end(), a) != cs.end();
        }
        return rank2_below(b, cache).count(a.to_string()) > 0;
    }
    // Both 2D: breadth-first over corner demotions.
    std::deque<HullElement> frontier{b};
    std::set<std::string> seen;
    while (!frontier.empty()) {
        HullElement cur = frontier.front();
        frontier.pop_front();
        if (cur == a) return true;
        if (cur.rank <= a.rank || cur.rank == 3) continue;
        for (const HullElement& c : elementary_collapses(cur, cache)) {
            if (c == a) return true;
            if (c.rank > a.rank && seen.insert(c.to_string()).second) frontier.push_back(c);
        }
    }
    return false;
}

long count_extremes(const HullElement& element, HullPosetCache& cache) {
    const int n = element.n;
    if (element.is_maximal()) {
        return static_cast<long>(rank2_below(element, cache).size());
    }
    if (element.is_minimal()) {
        std::string key = element.to_string();
        long count = 0;
        for (const HullElement& m : enumerate_hull(n, n))
            if (rank2_below(m, cache).count(key)) ++count;
        return count;
    }
    throw std::invalid_argument("count_extremes: element is neither minimal nor maximal");
}

std::vector<HullElement> interval_elements(const HullElement& a, const HullElement& b,
                                           HullPosetCache& cache) {
    if (!leq(a, b, cache)) throw std::invalid_argument("interval_elements: a is not below b");
    // Down-set of b, filtered by being above a.
    std::set<HullElement> down{b};
    std::deque<HullElement> frontier{b};
    while (!frontier.empty()) {
        HullElement cur = frontier.front();
        frontier.pop_front();
        if (cur.rank == 2) continue;
        for (const HullElement& c : elementary_collapses(cur, cache))
            if (c.rank >= a.rank && down.insert(c).second) frontier.push_back(c);
    }
    std::vector<HullElement> out;
    for (const HullElement& x : down)
        if (leq(a, x, cache)) out.push_back(x);
    return out;
}

bool interval_is_boolean(const HullElement& a, const HullElement& b, HullPosetCache& cache) {
    std::vector<HullElement> interval = interval_elements(a, b, cache);
    const int gap = b.rank - a.rank;
    if (interval.size() != (1ull << gap)) return false;
    // Atoms of the interval and the atom-support map.
    std::vector<HullElement> atoms;
    for (const HullElement& x : interval)
        if (x.rank == a.rank + 1) atoms.push_back(x);
    if (static_cast<int>(atoms.size()) != gap) return false;
    std::set<uint32_t> supports;
    for (const HullElement& x : interval) {
        uint32_t mask = 0;
        for (size_t t = 0; t < atoms.size(); ++t)
            if (leq(atoms[t], x, cache)) mask |= 1u << t;
        if (static_cast<int>(std::popcount(mask)) > gap) return false;
        supports.insert(mask);
        // Order must match subset order on supports.
        for (const HullElement& y : interval) {
            uint32_t ymask = 0;
            for (size_t t = 0; t < atoms.size(); ++t)
                if (leq(atoms[t], y, cache)) ymask |= 1u << t;
            bool sub = (mask & ymask) == mask;
            if (leq(x, y, cache) != sub) return false;
        }
    }
    return supports.size() == (1ull << gap);
}

HullPosetDiagram hull_poset_diagram(int n, HullPosetCache& cache) {
    HullPosetDiagram d;
    for (int k = 2; k <= n; ++k) {
        std::vector<HullElement> level = enumerate_hull(n, k);
        d.elements.insert(d.elements.end(), level.begin(), level.end());
    }
    std::sort(d.elements.begin(), d.elements.end());
    std::map<std::string, int> index;
    for (size_t i = 0; i < d.elements.size(); ++i)
        index.emplace(d.elements[i].to_string(), static_cast<int>(i));
    for (size_t i = 0; i < d.elements.size(); ++i) {
        if (d.elements[i].rank == 2) continue;
        for (const HullElement& c : elementary_collapses(d.elements[i], cache))
            d.edges.emplace_back(static_cast<int>(i), index.at(c.to_string()));
    }
    std::sort(d.edges.begin(), d.edges.end());
    return d;
}

std::string hull_poset_json(const HullPosetDiagram& diagram) {
    nlohmann::ordered_json j;
    std::vector<std::string> nodes;
    for (const HullElement& e : diagram.elements) nodes.push_back(e.to_string());
    j["nodes"] = nodes;
    std::vector<std::vector<int>> edges;
    for (auto [u, l] : diagram.edges) edges.push_back({u, l});
    j["edges"] = edges;
    return j.dump();
}

std::string hull_poset_dot(const HullPosetDiagram& diagram) {
    std::ostringstream os;
    os << "digraph H {\n  rankdir=BT;\n";
    for (size_t i = 0; i < diagram.elements.size(); ++i)
        os << "  h" << i << " [label=\"" << diagram.elements[i].to_string() << "\"];\n";
    for (auto [u, l] : diagram.edges) os << "  h" << l << " -> h" << u << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace nchull
