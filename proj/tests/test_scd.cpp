#include "doctest.h"

#include "nchull/oracle.hpp"
#include "nchull/scd.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

using namespace nchull;

namespace {

std::multiset<size_t> chain_sizes(const std::vector<std::vector<uint32_t>>& chains) {
    std::multiset<size_t> s;
    for (const auto& c : chains) s.insert(c.size());
    return s;
}

long max_rank_count(const NCLattice& L) {
    std::vector<long> rp = rank_polynomial(L);
    return *std::max_element(rp.begin(), rp.end());
}

} // namespace

TEST_CASE("bool_scd structure") {
    CHECK(bool_scd(0).size() == 1);
    CHECK(bool_scd(0)[0].size() == 1);

    // Derived by enumerating bracketing classes: 2^3 subsets split 4+2+2.
    auto c3 = bool_scd(3);
    CHECK(chain_sizes(c3) == std::multiset<size_t>{4, 2, 2});

    // Central binomial C(4,2).
    CHECK(bool_scd(4).size() == 6);

    for (int m = 0; m <= 10; ++m) {
        auto chains = bool_scd(m);
        std::set<uint32_t> seen;
        size_t total = 0;
        for (const auto& chain : chains) {
            total += chain.size();
            int lo = std::popcount(chain.front());
            int hi = std::popcount(chain.back());
            CHECK(lo + hi == m); // centered
            for (size_t t = 0; t < chain.size(); ++t) {
                seen.insert(chain[t]);
                CHECK(std::popcount(chain[t]) == lo + static_cast<int>(t));
                if (t + 1 < chain.size())
                    CHECK((chain[t] & chain[t + 1]) == chain[t]); // saturated cover
            }
        }
        CHECK(total == (1u << m));
        CHECK(seen.size() == (1u << m)); // disjoint and covering
    }
}

TEST_CASE("alpha and beta on the running example") {
    HullConfig fig = parse_shape("[0;3;2;1;2]");
    Partition a32 = alpha(fig, 3, 2);
    CHECK(a32.rank() == 1);
    CHECK(a32.block_mask_of(0) == ((1u << 0) | (1u << 7)));

    Partition b32 = beta(fig, 3, 2);
    CHECK(b32 == Partition::parse("0,1,2,3,4,5,6,7|8,9,10,11,12", 13));
    CHECK(a32.refines(b32));

    Partition a20 = alpha(fig, 2, 0);
    CHECK(a20.block_mask_of(0) == ((1u << 0) | (1u << 1)));

    CHECK_THROWS_AS(alpha(fig, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(alpha(fig, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(alpha(parse_shape("[1;1;1]"), 2, 0), std::invalid_argument);
}

TEST_CASE("alpha and beta are noncrossing for every blank-side shape (n <= 7)") {
    for (int n = 3; n <= 7; ++n) {
        ShapeEnumOptions opt;
        opt.blank_only = true;
        opt.include_segment = false;
        for (HullConfig config : enumerate_shapes(n, opt)) {
            if (config.side_count(1) != 0)
                config = rotate_to_side(config, config.blank_sides()[0]).config;
            for (int i = 2; i <= config.k() - 1; ++i)
                for (int j = 0; j <= config.side_count(i); ++j) {
                    Partition a = alpha(config, i, j);
                    Partition b = beta(config, i, j);
                    CHECK(is_noncrossing(config, a));
                    CHECK(is_noncrossing(config, b));
                    CHECK(a.refines(b));
                    CHECK(b.rank() == n - 2);
                }
        }
    }
}

TEST_CASE("decompose on the triangle") {
    NCLattice L = build_lattice(parse_shape("[0;0;0]"));
    Decomposition d = decompose(L);
    CHECK(d.x_part.size() == 4);
    REQUIRE(d.intervals.size() == 1);
    CHECK(d.intervals[0].i == 2);
    CHECK(d.intervals[0].j == 0);
    CHECK(d.intervals[0].elements.size() == 1);
    CHECK(d.x_part.size() + d.intervals[0].elements.size() == L.elements.size());
}

TEST_CASE("decompose parts are disjoint and cover (n <= 8)") {
    for (int n = 3; n <= 8; ++n) {
        ShapeEnumOptions opt;
        opt.blank_only = true;
        opt.include_segment = false;
        for (HullConfig config : enumerate_shapes(n, opt)) {
            if (config.side_count(1) != 0)
                config = rotate_to_side(config, config.blank_sides()[0]).config;
            NCLattice L = build_lattice(config);
            Decomposition d = decompose(L);
            std::vector<int> seen(L.elements.size(), 0);
            for (int e : d.x_part) seen[e]++;
            for (const auto& iv : d.intervals)
                for (int e : iv.elements) seen[e]++;
            for (size_t e = 0; e < seen.size(); ++e) CHECK(seen[e] == 1);
            // Each part is exactly the interval [alpha_ij, beta_ij].
            for (const auto& iv : d.intervals) {
                Partition a = alpha(config, iv.i, iv.j);
                Partition b = beta(config, iv.i, iv.j);
                std::set<int> got(iv.elements.begin(), iv.elements.end());
                std::set<int> expect;
                for (size_t e = 0; e < L.elements.size(); ++e)
                    if (a.refines(L.elements[e]) && L.elements[e].refines(b))
                        expect.insert(static_cast<int>(e));
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("interval_product_iso basics") {
    HullConfig tri = parse_shape("[0;0;0]");
    Partition trivial1(1, {{0}});
    Partition image = interval_product_iso(tri, 2, 0, trivial1, trivial1);
    CHECK(image == alpha(tri, 2, 0));
}

TEST_CASE("interval_product_iso is an order isomorphism (n <= 7)") {
    for (int n = 3; n <= 7; ++n) {
        ShapeEnumOptions opt;
        opt.blank_only = true;
        opt.include_segment = false;
        for (HullConfig config : enumerate_shapes(n, opt)) {
            if (config.side_count(1) != 0)
                config = rotate_to_side(config, config.blank_sides()[0]).config;
            NCLattice L = build_lattice(config);
            for (int i = 2; i <= config.k() - 1; ++i)
                for (int j = 0; j <= config.side_count(i); ++j) {
                    int split = config.point_index(i, j);
                    auto sub_elements = [&](int from, int to) {
                        if (from == to) return std::vector<Partition>{Partition(1, {{0}})};
                        ArcSubconfig arc = arc_subconfig(config, from, to);
                        std::vector<Partition> local = noncrossing_by_filter(arc.config);
                        // Remap to offset order relative to `from`.
                        std::vector<int> remap(arc.config.n());
                        for (int t = 0; t < arc.config.n(); ++t)
                            remap[t] = arc.new_to_old[t] - from;
                        std::vector<Partition> out;
                        for (const Partition& p : local)
                            out.push_back(p.restrict_map(remap, arc.config.n()));
                        return out;
                    };
                    std::vector<Partition> As = sub_elements(1, split);
                    std::vector<Partition> Bs = sub_elements(split + 1, n - 1);

                    Partition a = alpha(config, i, j);
                    Partition b = beta(config, i, j);
                    std::set<Partition> interval;
                    for (const Partition& p : L.elements)
                        if (a.refines(p) && p.refines(b)) interval.insert(p);

                    CHECK(interval.size() == As.size() * Bs.size());
                    std::set<Partition> images;
                    for (const Partition& sa : As)
                        for (const Partition& sb : Bs) {
                            Partition img = interval_product_iso(config, i, j, sa, sb);
                            CHECK(interval.count(img) == 1);
                            images.insert(img);
                            CHECK(img.rank() == sa.rank() + sb.rank() + 1);
                        }
                    CHECK(images.size() == interval.size()); // bijective

                    // Order preserved and reflected.
                    for (const Partition& sa : As)
                        for (const Partition& sb : Bs)
                            for (const Partition& ta : As)
                                for (const Partition& tb : Bs) {
                                    bool prod_le = sa.refines(ta) && sb.refines(tb);
                                    bool img_le =
                                        interval_product_iso(config, i, j, sa, sb)
                                            .refines(interval_product_iso(config, i, j, ta, tb));
                                    CHECK(prod_le == img_le);
                                }
                }
        }
    }
}

TEST_CASE("product_scd hook shapes") {
    std::vector<std::vector<int>> one_chain{{10}};
    std::vector<std::vector<int>> long_chain{{0, 1, 2, 3}};
    auto prod = product_scd(one_chain, 0, long_chain, 3);
    REQUIRE(prod.size() == 1);
    CHECK(prod[0].size() == 4);

    std::vector<std::vector<int>> c3{{0, 1, 2}};
    auto grid = product_scd(c3, 2, c3, 2);
    std::multiset<size_t> sizes;
    for (const auto& c : grid) sizes.insert(c.size());
    CHECK(sizes == std::multiset<size_t>{5, 3, 1});

    // Ranks spread symmetrically: hook t spans [t, 4-t] in the 3x3 grid.
    for (const auto& chain : grid) {
        int lo = chain.front().first + chain.front().second;
        int hi = chain.back().first + chain.back().second;
        CHECK(lo + hi == 4);
    }

    auto b1 = bool_scd(1);
    auto b2 = product_scd(b1, 1, b1, 1);
    sizes.clear();
    for (const auto& c : b2) sizes.insert(c.size());
    std::multiset<size_t> expect;
    for (const auto& c : bool_scd(2)) expect.insert(c.size());
    CHECK(sizes == expect);

    // A 2-chain cannot be centered in a poset of even height.
    std::vector<std::vector<int>> bad{{0, 1}};
    CHECK_THROWS_AS(product_scd(bad, 2, c3, 2), std::invalid_argument);
}

TEST_CASE("scd on segments") {
    for (int n = 2; n <= 10; ++n) {
        NCLattice L = build_lattice(parse_shape("segment:" + std::to_string(n)));
        ChainDecomposition d = scd(L);
        CHECK(verify_scd(L, d).all());
        CHECK(d.chains.size() == static_cast<size_t>(max_rank_count(L)));
    }
    NCLattice seg3 = build_lattice(parse_shape("segment:3"));
    ChainDecomposition d3 = scd(seg3);
    std::multiset<size_t> sizes;
    for (const auto& c : d3.chains) sizes.insert(c.size());
    CHECK(sizes == std::multiset<size_t>{3, 1});
}

TEST_CASE("scd on the blank triangle") {
    NCLattice L = build_lattice(parse_shape("[0;0;0]"));
    ChainDecomposition d = scd(L);
    CHECK(verify_scd(L, d).all());
    std::multiset<size_t> sizes;
    for (const auto& c : d.chains) sizes.insert(c.size());
    CHECK(sizes == std::multiset<size_t>{3, 1, 1});
    for (const auto& c : d.chains)
        if (c.size() == 3) {
            CHECK(L.rank[c[0]] == 0);
            CHECK(L.rank[c[1]] == 1);
            CHECK(L.rank[c[2]] == 2);
        }
}

TEST_CASE("scd on [0;1;1]") {
    NCLattice L = build_lattice(parse_shape("[0;1;1]"));
    // Oracle-derived rank vector (1,8,15,8,1): 33 elements, widest rank 15.
    CHECK(L.elements.size() == 33);
    CHECK(rank_polynomial(L) == std::vector<long>{1, 8, 15, 8, 1});
    ChainDecomposition d = scd(L);
    CHECK(verify_scd(L, d).all());
    CHECK(d.chains.size() == 15);
}

TEST_CASE("scd across all blank-side shapes (n <= 7) with conservation") {
    for (int n = 3; n <= 7; ++n) {
        ShapeEnumOptions opt;
        opt.blank_only = true;
        opt.include_segment = false;
        for (const HullConfig& config : enumerate_shapes(n, opt)) {
            NCLattice L = build_lattice(config);
            ChainDecomposition d = scd(L);
            CHECK(verify_scd(L, d).all());
            size_t total = 0;
            for (const auto& c : d.chains) total += c.size();
            CHECK(total == L.elements.size());
            CHECK(d.chains.size() == static_cast<size_t>(max_rank_count(L)));
        }
    }
}

TEST_CASE("scd respects an explicit blank side and rejects blankless shapes") {
    HullConfig c = parse_shape("[1;0;2;0]");
    NCLattice L = build_lattice(c);
    for (int side : c.blank_sides()) {
        ChainDecomposition d = scd(L, side);
        CHECK(verify_scd(L, d).all());
    }
    CHECK_THROWS_AS(scd(L, 1), std::invalid_argument); // side 1 is not blank

    NCLattice bad = build_lattice(parse_shape("[1;1;1]"));
    CHECK_THROWS_AS(scd(bad), std::invalid_argument);
}

TEST_CASE("verifier catches broken decompositions") {
    NCLattice L = build_lattice(parse_shape("segment:6"));
    ChainDecomposition good = scd(L);
    CHECK(verify_scd(L, good).all());

    ChainDecomposition missing = good;
    missing.chains[0].pop_back();
    ScdReport rep = verify_scd(L, missing);
    CHECK(!rep.covering);
    CHECK(!rep.witness.empty());

    // A chain with a rank jump: bottom straight to rank 2.
    ChainDecomposition jump;
    jump.chains.push_back({L.bottom()});
    for (size_t e = 0; e < L.elements.size(); ++e)
        if (L.rank[e] == 2) {
            jump.chains[0].push_back(static_cast<int>(e));
            break;
        }
    rep = verify_scd(L, jump);
    CHECK(!rep.saturated);

    ChainDecomposition dup = good;
    dup.chains.push_back({good.chains[0][0]});
    CHECK(!verify_scd(L, dup).disjoint);
}

TEST_CASE("rank-symmetry scan: blank-side shapes are symmetric (n <= 7)") {
    for (int n = 3; n <= 7; ++n) {
        ShapeEnumOptions opt;
        opt.blank_only = true;
        opt.include_segment = false;
        for (const HullConfig& config : enumerate_shapes(n, opt))
            CHECK(is_rank_symmetric(build_lattice(config)));
    }
}

TEST_CASE("scd json is stable") {
    NCLattice L = build_lattice(parse_shape("[0;0;0]"));
    ChainDecomposition d = scd(L);
    CHECK(scd_json(L, d) == scd_json(L, d));
    CHECK(scd_json(L, d).find("\"chains\"") != std::string::npos);
}
