#include "doctest.h"

#include "nchull/geometry.hpp"

using namespace nchull;

TEST_CASE("orientation signs") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::counterclockwise);
    CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == Orientation::collinear);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orientation::clockwise);
}

TEST_CASE("orientation is exact on tiny rationals") {
    Rat eps(1, 1000000007);
    ExactPoint a(Rat(0), Rat(0)), b(Rat(1), Rat(0)), c(Rat(2), eps);
    CHECK(orientation(a, b, c) == Orientation::counterclockwise);
    c.y = -eps;
    CHECK(orientation(a, b, c) == Orientation::clockwise);
}

TEST_CASE("segment intersection degenerate cases") {
    ExactPoint a(0, 0), b(2, 0);
    CHECK(segments_intersect(a, b, {1, 0}, {1, 1}));        // touch at interior point
    CHECK(segments_intersect(a, b, {2, 0}, {3, 1}));        // shared endpoint
    CHECK(segments_intersect(a, b, {1, 0}, {3, 0}));        // collinear overlap
    CHECK(!segments_intersect(a, b, {3, 0}, {4, 0}));       // collinear disjoint
    CHECK(!segments_intersect(a, b, {0, 1}, {2, 1}));       // parallel
    CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    // Endpoint on the supporting line but outside the segment.
    CHECK(!segments_intersect(a, b, {3, 0}, {3, 1}));
    CHECK(!segments_intersect(a, b, {3, 0}, {2, 1}));
}

TEST_CASE("convex hull with collinear interior points") {
    std::vector<ExactPoint> pts{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}};
    std::vector<ExactPoint> h = convex_hull(pts);
    CHECK(h.size() == 4);
    CHECK(point_in_hull(h, {1, 0}));
    CHECK(point_in_hull(h, {1, 1}));
    CHECK(!point_in_hull(h, {3, 0}));
}

TEST_CASE("degenerate hulls") {
    CHECK(convex_hull({{1, 1}}).size() == 1);
    std::vector<ExactPoint> collinear{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    std::vector<ExactPoint> h = convex_hull(collinear);
    CHECK(h.size() == 2);
    CHECK(point_in_hull(h, {2, 0}));
    CHECK(!point_in_hull(h, {4, 0}));
}

TEST_CASE("hull disjointness, including boundary contact") {
    CHECK(hulls_disjoint({{0, 0}}, {{1, 0}}));
    CHECK(!hulls_disjoint({{0, 0}, {2, 0}}, {{1, 0}}));     // containment on a segment
    // Triangles sharing one vertex intersect.
    CHECK(!hulls_disjoint({{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {-1, 0}, {0, -1}}));
    // Separated triangles.
    CHECK(hulls_disjoint({{0, 0}, {1, 0}, {0, 1}}, {{5, 5}, {6, 5}, {5, 6}}));
    // Crossing squares (plus shape): no vertex containment either way.
    std::vector<ExactPoint> wide{{-3, -1}, {3, -1}, {3, 1}, {-3, 1}};
    std::vector<ExactPoint> tall{{-1, -3}, {1, -3}, {1, 3}, {-1, 3}};
    CHECK(!hulls_disjoint(wide, tall));
    // Point inside polygon.
    CHECK(!hulls_disjoint(wide, {{0, 0}}));
    // Segment crossing a polygon.
    CHECK(!hulls_disjoint(wide, {{0, -5}, {0, 5}}));
}
