#include "doctest.h"

#include "nchull/config.hpp"
#include "nchull/oracle.hpp"

#include <set>

using namespace nchull;

TEST_CASE("parse_shape grammar") {
    HullConfig fig = parse_shape("[0;3;2;1;2]");
    CHECK(fig.k() == 5);
    CHECK(fig.n() == 13);
    HullConfig seg = parse_shape("segment:4");
    CHECK(seg.is_segment());
    CHECK(seg.n() == 4);
    HullConfig tri = parse_shape("[0;0;0]");
    CHECK(tri.k() == 3);
    CHECK(tri.n() == 3);
    CHECK(tri.to_string() == "[0;0;0]");
    CHECK(fig.to_string() == "[0;3;2;1;2]");

    CHECK_THROWS_AS(parse_shape("[0;0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("segment:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("segment:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("[1;-1;0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("[1; 1;1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("nonsense"), std::invalid_argument);
}

TEST_CASE("point indexing on the running example") {
    HullConfig fig = parse_shape("[0;3;2;1;2]");
    CHECK(fig.point_index(1, 0) == 0);
    CHECK(fig.point_index(2, 1) == 2);
    // Offsets accumulate (c_i + 1) per earlier side.
    CHECK(fig.point_index(5, 2) == 12);
    CHECK_THROWS_AS(fig.point_index(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(fig.point_index(6, 0), std::invalid_argument);
}

TEST_CASE("point_ref inverts point_index everywhere") {
    for (const HullConfig& config : enumerate_shapes(7)) {
        for (int i = 0; i < config.n(); ++i) {
            PointRef r = config.point_ref(i);
            CHECK(config.point_index(r) == i);
        }
    }
}

TEST_CASE("strictly_between on [1;1;1] and segments") {
    HullConfig tri = parse_shape("[1;1;1]");
    CHECK(strictly_between(tri, 0, 2, 1));
    CHECK(!strictly_between(tri, 0, 3, 1));
    HullConfig seg = parse_shape("segment:4");
    CHECK(strictly_between(seg, 0, 3, 2));
    CHECK(!strictly_between(seg, 0, 1, 2));
}

TEST_CASE("arc_subconfig on the running example") {
    HullConfig fig = parse_shape("[0;3;2;1;2]");

    ArcSubconfig a32 = arc_subconfig(fig, 1, 7); // A_{3,2}
    CHECK(a32.config.to_string() == "[3;1;0]");
    CHECK(a32.config.n() == 7);
    CHECK(a32.old_to_new[1] == 0);
    CHECK(a32.old_to_new[7] == 6);

    ArcSubconfig seg = arc_subconfig(fig, 2, 4); // inside side 2
    CHECK(seg.config.to_string() == "segment:3");

    ArcSubconfig rest = arc_subconfig(fig, 1, 12); // P minus z_{1,0}
    CHECK(rest.config.to_string() == "[3;2;1;1;0]");
    CHECK(rest.config.n() == 12);
    // z_{5,2} becomes a corner.
    CHECK(rest.config.is_corner(rest.old_to_new[12]));

    CHECK_THROWS_AS(arc_subconfig(fig, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(arc_subconfig(fig, 0, 12), std::invalid_argument);
}

TEST_CASE("arc wrapping across a partially cut side") {
    // [3;0;0]: dropping interior points of side 1 leaves corners {0,4,5}
    // and the former endpoints collinear with them.
    HullConfig c = parse_shape("[3;0;0]");
    ArcSubconfig arc = arc_subconfig(c, 2, 0);
    CHECK(arc.config.to_string() == "[0;0;2]");
    CHECK(arc.config.n() == 5);
}

TEST_CASE("realize produces the declared geometry") {
    std::vector<ExactPoint> seg = realize(parse_shape("segment:3"));
    CHECK(seg[0] == ExactPoint(0, 0));
    CHECK(seg[1] == ExactPoint(1, 0));
    CHECK(seg[2] == ExactPoint(2, 0));

    // Midpoints of [1;1;1] average their side's corners.
    HullConfig tri = parse_shape("[1;1;1]");
    std::vector<ExactPoint> pts = realize(tri);
    CHECK(pts[1].x == (pts[0].x + pts[2].x) / 2);
    CHECK(pts[1].y == (pts[0].y + pts[2].y) / 2);

    std::vector<ExactPoint> t = realize(parse_shape("[0;0;0]"));
    CHECK(orientation(t[0], t[1], t[2]) != Orientation::collinear);
}

TEST_CASE("realize matches the shape for all small configurations") {
    for (int n = 3; n <= 8; ++n) {
        ShapeEnumOptions opt;
        opt.include_segment = false;
        for (const HullConfig& config : enumerate_shapes(n, opt)) {
            for (int variant : {0, 1}) {
                std::vector<ExactPoint> pts = realize(config, variant);
                // Hull corner set equals the labelled corners.
                std::vector<ExactPoint> hull = convex_hull(pts);
                std::set<std::pair<std::string, std::string>> hullset;
                for (const ExactPoint& p : hull)
                    hullset.insert({p.x.get_str(), p.y.get_str()});
                CHECK(hull.size() == static_cast<size_t>(config.k()));
                for (int c : config.corner_indices())
                    CHECK(hullset.count({pts[c].x.get_str(), pts[c].y.get_str()}) == 1);
                // Collinear triples are exactly same-side triples; counterclockwise order.
                for (int a = 0; a < n && variant == 0; ++a)
                    for (int b = a + 1; b < n; ++b)
                        for (int c = b + 1; c < n; ++c) {
                            bool same_side = false;
                            for (int s = 1; s <= config.k() && !same_side; ++s) {
                                std::vector<int> line = config.side_line(s);
                                auto on = [&](int x) {
                                    return std::find(line.begin(), line.end(), x) != line.end();
                                };
                                same_side = on(a) && on(b) && on(c);
                            }
                            bool coll = orientation(pts[a], pts[b], pts[c]) == Orientation::collinear;
                            CHECK(coll == same_side);
                            if (!coll)
                                CHECK(orientation(pts[a], pts[b], pts[c]) ==
                                      Orientation::counterclockwise);
                        }
            }
        }
    }
}

TEST_CASE("arc_subconfig agrees with the geometry of the realized arc") {
    for (int n = 3; n <= 8; ++n) {
        ShapeEnumOptions opt;
        opt.dedupe_cyclic = true;
        for (const HullConfig& config : enumerate_shapes(n, opt)) {
            std::vector<ExactPoint> pts = realize(config);
            for (int start = 0; start < n; ++start) {
                for (int len = 2; len < n; ++len) {
                    if (config.is_segment() && start + len > n) continue;
                    int end = (start + len - 1) % n;
                    ArcSubconfig arc = arc_subconfig(config, start, end);
                    // The realized sub-points must realize the computed shape:
                    // corner sets agree and the map preserves the points.
                    std::vector<ExactPoint> sub;
                    for (int t = 0; t < len; ++t) sub.push_back(pts[arc.new_to_old[t]]);
                    std::vector<ExactPoint> hull = convex_hull(sub);
                    if (arc.config.is_segment()) {
                        CHECK(hull.size() <= 2);
                    } else {
                        CHECK(hull.size() == static_cast<size_t>(arc.config.k()));
                        for (int c : arc.config.corner_indices()) {
                            CHECK(point_in_hull(hull, sub[c]));
                            bool is_vertex = false;
                            for (const ExactPoint& h : hull) is_vertex |= h == sub[c];
                            CHECK(is_vertex);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("shape enumeration") {
    std::vector<HullConfig> n3 = enumerate_shapes(3, {.dedupe_cyclic = true});
    REQUIRE(n3.size() == 2);
    CHECK(n3[0].to_string() == "[0;0;0]");
    CHECK(n3[1].to_string() == "segment:3");

    std::vector<HullConfig> n4 = enumerate_shapes(4, {.dedupe_cyclic = true});
    std::set<std::string> names;
    for (const HullConfig& c : n4) names.insert(c.to_string());
    CHECK(names == std::set<std::string>{"[1;0;0]", "[0;0;0;0]", "segment:4"});

    ShapeEnumOptions k3;
    k3.only_k = 3;
    k3.dedupe_cyclic = true;
    std::vector<HullConfig> n5k3 = enumerate_shapes(5, k3);
    names.clear();
    for (const HullConfig& c : n5k3) names.insert(c.to_string());
    CHECK(names == std::set<std::string>{"[2;0;0]", "[1;1;0]"});

    CHECK_THROWS_AS(enumerate_shapes(1), std::invalid_argument);
}

TEST_CASE("canonical rotation and rotate_to_side") {
    HullConfig c = parse_shape("[1;0;2;0]");
    CHECK(canonical_shape(c).to_string() == "[2;0;1;0]");
    ArcSubconfig rot = rotate_to_side(c, 2);
    CHECK(rot.config.to_string() == "[0;2;0;1]");
    // z_{2,0} of the original becomes point 0.
    CHECK(rot.old_to_new[c.point_index(2, 0)] == 0);
    for (int i = 0; i < c.n(); ++i) CHECK(rot.new_to_old[rot.old_to_new[i]] == i);
}
