#include "nchull/check.hpp"

#include "nchull/hullposet.hpp"
#include "nchull/lattice.hpp"
#include "nchull/oracle.hpp"
#include "nchull/scd.hpp"
#include "nchull/trees.hpp"

#include <sstream>

namespace nchull {

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long factorial(int n) {
    long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// All labelled spanning trees via Prüfer sequences.
std::vector<Forest> all_spanning_trees(int n) {
    std::vector<Forest> out;
    if (n == 1) return out;
    if (n == 2) {
        out.emplace_back(2, std::vector<std::pair<int, int>>{{0, 1}});
        return out;
    }
    std::vector<int> prufer(n - 2, 0);
    while (true) {
        std::vector<int> degree(n, 1);
        for (int v : prufer) ++degree[v];
        std::vector<std::pair<int, int>> edges;
        std::vector<int> deg = degree;
        for (int v : prufer) {
            for (int leaf = 0; leaf < n; ++leaf)
                if (deg[leaf] == 1) {
                    edges.emplace_back(leaf, v);
                    deg[leaf] = 0;
                    --deg[v];
                    break;
                }
        }
        std::vector<int> last;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) last.push_back(v);
        edges.emplace_back(last[0], last[1]);
        out.emplace_back(n, std::move(edges));
        int pos = n - 3;
        while (pos >= 0 && prufer[pos] == n - 1) prufer[pos--] = 0;
        if (pos < 0) break;
        ++prufer[pos];
    }
    return out;
}

struct Checker {
    const std::function<void(const std::string&)>& report;
    bool ok = true;

    bool fail(const std::string& msg) {
        report("FAIL: " + msg);
        ok = false;
        return false;
    }
};

bool check_oracle_agreement(Checker& ck, int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        ShapeEnumOptions opt;
        opt.dedupe_cyclic = true;
        for (const HullConfig& config : enumerate_shapes(n, opt)) {
            std::vector<ExactPoint> pts = realize(config);
            std::vector<Partition> comb = noncrossing_by_filter(config);
            std::vector<Partition> orac = nc_lattice_oracle(pts);
            if (comb != orac)
                return ck.fail("noncrossing oracle mismatch on " + config.to_string());
            for (const Forest& t : all_spanning_trees(n)) {
                TreeOracleResult r = tree_oracle(pts, t.edges);
                bool comb_nc = is_noncrossing_tree(config, t);
                if (comb_nc != r.noncrossing)
                    return ck.fail("tree noncrossing mismatch on " + config.to_string() +
                                   " tree " + t.to_string());
                if (comb_nc && has_convex_geodesics(config, t) != r.convex_geodesics)
                    return ck.fail("convex geodesic mismatch on " + config.to_string() +
                                   " tree " + t.to_string());
            }
        }
        std::ostringstream os;
        os << "oracle agreement n=" << n << ": ok";
        ck.report(os.str());
    }
    return true;
}

bool check_scd(Checker& ck, int max_n) {
    for (int n = 3; n <= max_n; ++n) {
        ShapeEnumOptions opt;
        opt.dedupe_cyclic = true;
        opt.blank_only = true;
        for (const HullConfig& config : enumerate_shapes(n, opt)) {
            NCLattice L = build_lattice(config);
            ScdReport rep = verify_scd(L, scd(L));
            if (!rep.all())
                return ck.fail("scd verification on " + config.to_string() + ": " + rep.witness);
        }
        std::ostringstream os;
        os << "symmetric chain decompositions n=" << n << ": ok";
        ck.report(os.str());
    }
    return true;
}

bool check_boolean(Checker& ck, int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        ShapeEnumOptions opt;
        opt.dedupe_cyclic = true;
        for (const HullConfig& config : enumerate_shapes(n, opt)) {
            NCLattice L = build_lattice(config);
            std::vector<Forest> trees = enumerate_cg_trees(config);
            std::vector<std::vector<int>> sets = maximal_boolean_atom_sets(L);
            if (trees.size() != sets.size())
                return ck.fail("Boolean bijection count on " + config.to_string());
            UnionCheck uc = boolean_union_check(L, trees);
            if (!uc.covered)
                return ck.fail("Boolean union on " + config.to_string() + ": element " +
                               L.elements[uc.missing_element].to_string() + " uncovered");
        }
        std::ostringstream os;
        os << "Boolean subposets n=" << n << ": ok";
        ck.report(os.str());
    }
    return true;
}

bool check_hull_counts(Checker& ck, int max_n) {
    for (int n = 3; n <= max_n; ++n) {
        for (int k = 3; k <= n; ++k) {
            long expect = factorial(n - 1) * binom(n, k);
            long got = static_cast<long>(enumerate_hull(n, k).size());
            if (got != expect) {
                std::ostringstream os;
                os << "H(" << n << ") rank " << k << " count " << got << " != " << expect;
                return ck.fail(os.str());
            }
        }
        long minimal = static_cast<long>(enumerate_hull(n, 2).size());
        if (minimal != factorial(n) / 2) {
            std::ostringstream os;
            os << "H(" << n << ") minimal count " << minimal << " != " << factorial(n) / 2;
            return ck.fail(os.str());
        }
        std::ostringstream os;
        os << "hull poset counts n=" << n << ": ok";
        ck.report(os.str());
    }
    return true;
}

} // namespace

bool run_check_suite(int max_n, const std::function<void(const std::string&)>& report) {
    Checker ck{report};
    if (!check_oracle_agreement(ck, std::min(max_n, 6))) return false;
    if (!check_scd(ck, max_n)) return false;
    if (!check_boolean(ck, std::min(max_n, 6))) return false;
    if (!check_hull_counts(ck, std::min(max_n, 6))) return false;
    return ck.ok;
}

} // namespace nchull
