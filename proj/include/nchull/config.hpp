#pragma once

#include "nchull/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nchull {

/// Thrown when an enumeration would exceed its configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point reference z_{i,j}: side index i (1-based), offset j in 0..c_i.
/// Offset 0 is the corner starting side i; side i's closing corner is
/// referenced as (i+1, 0).
struct PointRef {
    int side;
    int offset;
    bool operator==(const PointRef&) const = default;
};

/// A hull configuration stored combinatorially: either n collinear points
/// (Segment) or a convex polygon whose shape [c_1;...;c_k] records the number
/// of side-internal points on each side. Points carry an implicit
/// counterclockwise linear index 0..n-1 starting at z_{1,0} (left-to-right
/// for segments). Immutable after construction.
class HullConfig {
public:
    enum class Kind { segment, polygon };

    /// Default is an empty placeholder; use the factories for real configs.
    HullConfig() = default;
    static HullConfig segment(int n);
    static HullConfig polygon(std::vector<int> side_counts);

    Kind kind() const { return kind_; }
    bool is_segment() const { return kind_ == Kind::segment; }
    int n() const { return n_; }
    /// Number of hull corners (polygon only).
    int k() const { return static_cast<int>(side_counts_.size()); }
    /// Side-internal count c_i, side 1-based.
    int side_count(int side) const { return side_counts_.at(side - 1); }
    const std::vector<int>& side_counts() const { return side_counts_; }
    /// rk(P): 2 for segments, k otherwise.
    int rank() const { return is_segment() ? 2 : k(); }
    bool has_blank_side() const;
    /// 1-based indices of blank sides.
    std::vector<int> blank_sides() const;

    int point_index(int side, int offset) const;
    int point_index(PointRef r) const { return point_index(r.side, r.offset); }
    PointRef point_ref(int index) const;
    bool is_corner(int index) const;
    /// Linear indices of z_{1,0}, ..., z_{k,0}.
    std::vector<int> corner_indices() const;
    /// The c_s + 2 points on side s's supporting line, in order along the
    /// side (z_{s,0}, ..., z_{s,c_s}, z_{s+1,0}). Segments: all points.
    std::vector<int> side_line(int side) const;
    /// Sides whose supporting line contains the point (one or two).
    std::vector<int> sides_of(int index) const;

    std::string to_string() const;
    bool operator==(const HullConfig& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && side_counts_ == o.side_counts_;
    }

private:
    Kind kind_ = Kind::segment;
    int n_ = 0;
    std::vector<int> side_counts_;
};

/// Parses `segment:<n>` or `[c1;c2;...;ck]`. The shape is stored exactly as
/// written; use canonical_rotation / rotate_to_side to shift it.
HullConfig parse_shape(const std::string& text);

/// True iff all three distinct points lie on one side line (or on the
/// segment) with z strictly between x and y in the side's linear order.
bool strictly_between(const HullConfig& config, int x, int y, int z);

struct ArcSubconfig {
    HullConfig config;
    /// old_to_new[i] for i on the arc; off-arc entries are -1.
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

/// Hull configuration induced on the counterclockwise arc start..end
/// (inclusive, indices mod n), with the index map. The arc must have at
/// least 2 points and must not be all of P. Segment arcs may not wrap.
ArcSubconfig arc_subconfig(const HullConfig& config, int start, int end);

/// Rotates a polygon's side numbering so that `side` becomes side 1,
/// returning the rotated config and the old->new index map.
ArcSubconfig rotate_to_side(const HullConfig& config, int side);

/// Rotation r such that starting the side list at side r+1 gives the
/// lexicographically greatest tuple (smallest r on ties). Segments: 0.
int canonical_rotation(const HullConfig& config);
/// The cyclic-shift canonical form of the shape.
HullConfig canonical_shape(const HullConfig& config);

/// Canonical exact-coordinate representative of the convexity class:
/// segments on the x-axis at unit spacing, polygon corners on the unit
/// circle via the tangent half-angle map t -> (t^2-1, 2t)/(t^2+1), side
/// points subdividing each side uniformly. `variant` perturbs the circle
/// parameters (any value yields the same convexity class).
std::vector<ExactPoint> realize(const HullConfig& config, int variant = 0);

struct ShapeEnumOptions {
    std::optional<int> only_k;      ///< restrict to polygons with this k
    bool include_segment = true;
    bool blank_only = false;        ///< at least one c_i = 0
    bool no_blank_only = false;     ///< all c_i > 0
    bool dedupe_cyclic = false;     ///< one representative per cyclic class
};

/// All hull shapes on n points subject to the options (segment last).
std::vector<HullConfig> enumerate_shapes(int n, const ShapeEnumOptions& options = {});

} // namespace nchull
