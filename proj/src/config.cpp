#include "nchull/config.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nchull {

HullConfig HullConfig::segment(int n) {
    if (n < 2) throw std::invalid_argument("segment needs at least 2 points");
    HullConfig c;
    c.kind_ = Kind::segment;
    c.n_ = n;
    return c;
}

HullConfig HullConfig::polygon(std::vector<int> side_counts) {
    if (side_counts.size() < 3) throw std::invalid_argument("polygon needs k >= 3 sides");
    for (int ci : side_counts)
        if (ci < 0) throw std::invalid_argument("negative side count");
    HullConfig c;
    c.kind_ = Kind::polygon;
    c.side_counts_ = std::move(side_counts);
    c.n_ = static_cast<int>(c.side_counts_.size()) +
           std::accumulate(c.side_counts_.begin(), c.side_counts_.end(), 0);
    return c;
}

bool HullConfig::has_blank_side() const {
    return is_segment() ? false
                        : std::find(side_counts_.begin(), side_counts_.end(), 0) != side_counts_.end();
}

std::vector<int> HullConfig::blank_sides() const {
    std::vector<int> out;
    for (int i = 0; i < k(); ++i)
        if (side_counts_[i] == 0) out.push_back(i + 1);
    return out;
}

int HullConfig::point_index(int side, int offset) const {
    if (is_segment()) {
        if (side != 1 || offset < 0 || offset >= n_)
            throw std::invalid_argument("point ref out of range");
        return offset;
    }
    if (side < 1 || side > k() || offset < 0 || offset > side_counts_[side - 1])
        throw std::invalid_argument("point ref out of range");
    int idx = side - 1 + offset;
    for (int s = 0; s < side - 1; ++s) idx += side_counts_[s];
    return idx;
}

PointRef HullConfig::point_ref(int index) const {
    if (index < 0 || index >= n_) throw std::invalid_argument("point index out of range");
    if (is_segment()) return {1, index};
    int rest = index;
    for (int s = 1; s <= k(); ++s) {
        int span = side_counts_[s - 1] + 1; // corner plus internals
        if (rest < span) return {s, rest};
        rest -= span;
    }
    throw std::logic_error("point_ref: unreachable");
}

bool HullConfig::is_corner(int index) const {
    if (is_segment()) return index == 0 || index == n_ - 1;
    return point_ref(index).offset == 0;
}

std::vector<int> HullConfig::corner_indices() const {
    std::vector<int> out;
    if (is_segment()) return out;
    for (int s = 1; s <= k(); ++s) out.push_back(point_index(s, 0));
    return out;
}

std::vector<int> HullConfig::side_line(int side) const {
    std::vector<int> pts;
    if (is_segment()) {
        pts.resize(n_);
        std::iota(pts.begin(), pts.end(), 0);
        return pts;
    }
    if (side < 1 || side > k()) throw std::invalid_argument("side out of range");
    for (int j = 0; j <= side_counts_[side - 1]; ++j) pts.push_back(point_index(side, j));
    pts.push_back(point_index(side % k() + 1, 0));
    return pts;
}

std::vector<int> HullConfig::sides_of(int index) const {
    if (is_segment()) return {1};
    PointRef r = point_ref(index);
    if (r.offset > 0) return {r.side};
    int prev = (r.side + k() - 2) % k() + 1;
    return {prev, r.side};
}

std::string HullConfig::to_string() const {
    std::ostringstream os;
    if (is_segment()) {
        os << "segment:" << n_;
    } else {
        os << '[';
        for (int i = 0; i < k(); ++i) {
            if (i) os << ';';
            os << side_counts_[i];
        }
        os << ']';
    }
    return os.str();
}

HullConfig parse_shape(const std::string& text) {
    if (text.rfind("segment:", 0) == 0) {
        const std::string num = text.substr(8);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed shape: " + text);
        return HullConfig::segment(std::stoi(num));
    }
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("malformed shape: " + text);
    std::vector<int> counts;
    std::string body = text.substr(1, text.size() - 2);
    size_t pos = 0;
    while (true) {
        size_t sep = body.find(';', pos);
        std::string tok = body.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed shape: " + text);
        counts.push_back(std::stoi(tok));
        if (sep == std::string::npos) break;
        pos = sep + 1;
    }
    return HullConfig::polygon(std::move(counts));
}

bool strictly_between(const HullConfig& config, int x, int y, int z) {
    if (x == y || x == z || y == z) throw std::invalid_argument("strictly_between: points not distinct");
    if (config.is_segment())
        return (x < z && z < y) || (y < z && z < x);
    for (int s : config.sides_of(z)) {
        std::vector<int> line = config.side_line(s);
        auto pos = [&line](int p) {
            auto it = std::find(line.begin(), line.end(), p);
            return it == line.end() ? -1 : static_cast<int>(it - line.begin());
        };
        int px = pos(x), py = pos(y), pz = pos(z);
        if (px < 0 || py < 0 || pz < 0) continue;
        if ((px < pz && pz < py) || (py < pz && pz < px)) return true;
    }
    return false;
}

ArcSubconfig arc_subconfig(const HullConfig& config, int start, int end) {
    const int n = config.n();
    if (start < 0 || start >= n || end < 0 || end >= n)
        throw std::invalid_argument("arc endpoints out of range");
    std::vector<int> arc;
    if (config.is_segment()) {
        if (start > end) throw std::invalid_argument("segment arcs may not wrap");
        for (int i = start; i <= end; ++i) arc.push_back(i);
    } else {
        for (int i = start;; i = (i + 1) % n) {
            arc.push_back(i);
            if (i == end) break;
        }
    }
    const int m = static_cast<int>(arc.size());
    if (m < 2) throw std::invalid_argument("arc too short");
    if (m == n) throw std::invalid_argument("arc equals the whole configuration");

    ArcSubconfig out;
    out.old_to_new.assign(n, -1);

    auto finish_segment = [&]() {
        out.config = HullConfig::segment(m);
        out.new_to_old = arc;
        for (int t = 0; t < m; ++t) out.old_to_new[arc[t]] = t;
        return out;
    };

    if (config.is_segment() || m == 2) return finish_segment();

    // Collinear iff all arc points sit on one side's supporting line (hull
    // configurations have no cross-side collinearities).
    for (int s = 1; s <= config.k(); ++s) {
        std::vector<int> line = config.side_line(s);
        if (std::all_of(arc.begin(), arc.end(), [&](int p) {
                return std::find(line.begin(), line.end(), p) != line.end();
            }))
            return finish_segment();
    }

    // A point of the arc set is internal on a line iff the set has points
    // strictly before and after it in the line's order.
    std::vector<char> in_arc(n, 0);
    for (int p : arc) in_arc[p] = 1;
    auto line_internal = [&](int p) {
        for (int s : config.sides_of(p)) {
            std::vector<int> line = config.side_line(s);
            auto it = std::find(line.begin(), line.end(), p);
            bool before = false, after = false;
            for (auto j = line.begin(); j != it; ++j) before |= in_arc[*j];
            for (auto j = it + 1; j != line.end(); ++j) after |= in_arc[*j];
            if (before && after) return true;
        }
        return false;
    };

    // New corners: original corners in the arc, plus either endpoint unless
    // it lands strictly inside a collinear run of the arc set.
    std::vector<int> corner_positions;
    for (int t = 0; t < m; ++t) {
        int p = arc[t];
        bool corner = config.is_corner(p);
        if (!corner && (t == 0 || t == m - 1)) corner = !line_internal(p);
        if (corner) corner_positions.push_back(t);
    }
    if (corner_positions.size() < 3)
        throw std::logic_error("arc_subconfig: fewer than 3 corners in a 2D arc");

    // Boundary order of the sub-hull equals the arc order rotated to start
    // at the first corner; the closing chord becomes the final side.
    int first = corner_positions.front();
    std::vector<int> rotated(m);
    for (int t = 0; t < m; ++t) rotated[t] = arc[(first + t) % m];
    std::vector<int> rotated_corner_pos;
    for (int c : corner_positions) rotated_corner_pos.push_back((c - first + m) % m);
    std::sort(rotated_corner_pos.begin(), rotated_corner_pos.end());

    const int kk = static_cast<int>(rotated_corner_pos.size());
    std::vector<int> counts(kk);
    for (int t = 0; t < kk; ++t) {
        int cur = rotated_corner_pos[t];
        int next = (t + 1 < kk) ? rotated_corner_pos[t + 1] : m;
        counts[t] = next - cur - 1;
    }
    out.config = HullConfig::polygon(counts);
    out.new_to_old = rotated;
    for (int t = 0; t < m; ++t) out.old_to_new[rotated[t]] = t;
    return out;
}

ArcSubconfig rotate_to_side(const HullConfig& config, int side) {
    if (config.is_segment()) throw std::invalid_argument("rotate_to_side: segment has no sides");
    if (side < 1 || side > config.k()) throw std::invalid_argument("side out of range");
    const int n = config.n();
    std::vector<int> counts;
    for (int t = 0; t < config.k(); ++t)
        counts.push_back(config.side_count((side - 1 + t) % config.k() + 1));
    ArcSubconfig out;
    out.config = HullConfig::polygon(std::move(counts));
    int base = config.point_index(side, 0);
    out.old_to_new.resize(n);
    out.new_to_old.resize(n);
    for (int i = 0; i < n; ++i) {
        int ni = (i - base + n) % n;
        out.old_to_new[i] = ni;
        out.new_to_old[ni] = i;
    }
    return out;
}

int canonical_rotation(const HullConfig& config) {
    if (config.is_segment()) return 0;
    const auto& c = config.side_counts();
    const int k = config.k();
    int best = 0;
    for (int r = 1; r < k; ++r) {
        for (int t = 0; t < k; ++t) {
            int a = c[(r + t) % k], b = c[(best + t) % k];
            if (a != b) {
                if (a > b) best = r;
                break;
            }
        }
    }
    return best;
}

HullConfig canonical_shape(const HullConfig& config) {
    if (config.is_segment()) return config;
    return rotate_to_side(config, canonical_rotation(config) + 1).config;
}

std::vector<ExactPoint> realize(const HullConfig& config, int variant) {
    std::vector<ExactPoint> pts;
    pts.reserve(config.n());
    if (config.is_segment()) {
        for (int i = 0; i < config.n(); ++i) pts.emplace_back(Rat(i), Rat(0));
        return pts;
    }
    const int k = config.k();
    // Strictly decreasing positive t gives strictly increasing angle, so the
    // corners sit on the unit circle in counterclockwise order.
    std::vector<ExactPoint> corner(k);
    for (int s = 0; s < k; ++s) {
        Rat t(k - s);
        if (variant != 0) t += Rat(1, 2 + ((s + variant) % 3));
        Rat t2 = t * t;
        corner[s] = ExactPoint((t2 - 1) / (t2 + 1), (2 * t) / (t2 + 1));
    }
    for (int s = 1; s <= k; ++s) {
        const ExactPoint& a = corner[s - 1];
        const ExactPoint& b = corner[s % k];
        pts.push_back(a);
        int c = config.side_count(s);
        for (int j = 1; j <= c; ++j) {
            Rat w(j, c + 1);
            pts.emplace_back(a.x + w * (b.x - a.x), a.y + w * (b.y - a.y));
        }
    }
    return pts;
}

std::vector<HullConfig> enumerate_shapes(int n, const ShapeEnumOptions& options) {
    if (n < 2) throw std::invalid_argument("enumerate_shapes: n must be at least 2");
    std::vector<HullConfig> out;
    std::vector<std::string> seen;
    for (int k = 3; k <= n; ++k) {
        if (options.only_k && *options.only_k != k) continue;
        std::vector<int> counts(k, 0);
        int total = n - k;
        // All compositions of n-k into k non-negative parts, lexicographic.
        auto emit = [&](auto&& self, int pos, int rest) -> void {
            if (pos == k - 1) {
                counts[pos] = rest;
                bool blank = std::find(counts.begin(), counts.end(), 0) != counts.end();
                if (options.blank_only && !blank) return;
                if (options.no_blank_only && blank) return;
                HullConfig cfg = HullConfig::polygon(counts);
                if (options.dedupe_cyclic) {
                    cfg = canonical_shape(cfg);
                    std::string key = cfg.to_string();
                    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
                    seen.push_back(key);
                }
                out.push_back(std::move(cfg));
                return;
            }
            for (int v = 0; v <= rest; ++v) {
                counts[pos] = v;
                self(self, pos + 1, rest - v);
            }
        };
        emit(emit, 0, total);
    }
    if (options.include_segment && !options.only_k && !options.no_blank_only)
        out.push_back(HullConfig::segment(n));
    return out;
}

} // namespace nchull
