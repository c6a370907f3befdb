#pragma once

#include <gmpxx.h>
#include <vector>

namespace nchull {

using Rat = mpq_class;

/// A point in the plane with exact rational coordinates.
struct ExactPoint {
    Rat x;
    Rat y;

    ExactPoint() = default;
    ExactPoint(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    ExactPoint(long px, long py) : x(px), y(py) {}

    bool operator==(const ExactPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const ExactPoint& o) const { return !(*this == o); }
};

enum class Orientation { clockwise, collinear, counterclockwise };

/// Sign of the cross product (q-p) x (r-p), computed exactly.
Orientation orientation(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r);

/// True iff z lies on the closed segment [a,b].
bool on_segment(const ExactPoint& a, const ExactPoint& b, const ExactPoint& z);

/// True iff z lies on the open segment (a,b), i.e. strictly between a and b.
bool strictly_inside_segment(const ExactPoint& a, const ExactPoint& b, const ExactPoint& z);

/// Closed segments [p1,q1] and [p2,q2] share at least one point.
/// Handles every degenerate case (collinear overlap, endpoint contact,
/// zero-length segments).
bool segments_intersect(const ExactPoint& p1, const ExactPoint& q1,
                        const ExactPoint& p2, const ExactPoint& q2);

/// Vertices of the convex hull in counterclockwise order, collinear points
/// dropped. One point -> that point; all collinear -> the two extremes.
std::vector<ExactPoint> convex_hull(std::vector<ExactPoint> pts);

/// True iff p lies in the closed convex hull given by `hull` (output of
/// convex_hull: point, segment, or ccw polygon).
bool point_in_hull(const std::vector<ExactPoint>& hull, const ExactPoint& p);

/// Exact test that Conv(A) and Conv(B) have empty intersection. Boundary
/// contact counts as intersecting.
bool hulls_disjoint(const std::vector<ExactPoint>& ptsA, const std::vector<ExactPoint>& ptsB);

} // namespace nchull
