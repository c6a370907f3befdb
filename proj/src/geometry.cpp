#include "nchull/geometry.hpp"

#include <algorithm>

namespace nchull {

Orientation orientation(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r) {
    Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    int s = sgn(cross);
    if (s > 0) return Orientation::counterclockwise;
    if (s < 0) return Orientation::clockwise;
    return Orientation::collinear;
}

bool on_segment(const ExactPoint& a, const ExactPoint& b, const ExactPoint& z) {
    if (orientation(a, b, z) != Orientation::collinear) return false;
    return std::min(a.x, b.x) <= z.x && z.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= z.y && z.y <= std::max(a.y, b.y);
}

bool strictly_inside_segment(const ExactPoint& a, const ExactPoint& b, const ExactPoint& z) {
    return on_segment(a, b, z) && z != a && z != b;
}

bool segments_intersect(const ExactPoint& p1, const ExactPoint& q1,
                        const ExactPoint& p2, const ExactPoint& q2) {
    Orientation o1 = orientation(p1, q1, p2);
    Orientation o2 = orientation(p1, q1, q2);
    Orientation o3 = orientation(p2, q2, p1);
    Orientation o4 = orientation(p2, q2, q1);
    // Mutual straddle. Sound even when one orientation is collinear: the
    // zero endpoint is then the line crossing itself, and the straddle
    // condition places it inside the other segment.
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == Orientation::collinear && on_segment(p1, q1, p2)) return true;
    if (o2 == Orientation::collinear && on_segment(p1, q1, q2)) return true;
    if (o3 == Orientation::collinear && on_segment(p2, q2, p1)) return true;
    if (o4 == Orientation::collinear && on_segment(p2, q2, q1)) return true;
    return false;
}

std::vector<ExactPoint> convex_hull(std::vector<ExactPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const ExactPoint& a, const ExactPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 2) return pts;

    // Monotone chain; strict turns only, so collinear interior points drop out.
    std::vector<ExactPoint> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) != Orientation::counterclockwise)
            --k;
        hull[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) != Orientation::counterclockwise)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
    return hull;
}

bool point_in_hull(const std::vector<ExactPoint>& hull, const ExactPoint& p) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return p == hull[0];
    if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
    for (size_t i = 0; i < hull.size(); ++i) {
        const ExactPoint& a = hull[i];
        const ExactPoint& b = hull[(i + 1) % hull.size()];
        if (orientation(a, b, p) == Orientation::clockwise) return false;
    }
    return true;
}

namespace {

std::vector<std::pair<ExactPoint, ExactPoint>> hull_edges(const std::vector<ExactPoint>& hull) {
    std::vector<std::pair<ExactPoint, ExactPoint>> edges;
    if (hull.size() == 2) {
        edges.emplace_back(hull[0], hull[1]);
    } else if (hull.size() >= 3) {
        for (size_t i = 0; i < hull.size(); ++i)
            edges.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
    }
    return edges;
}

} // namespace

bool hulls_disjoint(const std::vector<ExactPoint>& ptsA, const std::vector<ExactPoint>& ptsB) {
    std::vector<ExactPoint> ha = convex_hull(ptsA);
    std::vector<ExactPoint> hb = convex_hull(ptsB);
    for (const ExactPoint& p : ha)
        if (point_in_hull(hb, p)) return false;
    for (const ExactPoint& p : hb)
        if (point_in_hull(ha, p)) return false;
    // Two convex sets can still cross without either containing a vertex of
    // the other; then some boundary edges must intersect.
    for (const auto& [a1, a2] : hull_edges(ha))
        for (const auto& [b1, b2] : hull_edges(hb))
            if (segments_intersect(a1, a2, b1, b2)) return false;
    return true;
}

} // namespace nchull
