#include "nchull/render.hpp"

#include "nchull/geometry.hpp"

#include <iomanip>
#include <sstream>

namespace nchull {

namespace {

struct Canvas {
    double min_x, max_x, min_y, max_y;
    static constexpr double size = 600.0;
    static constexpr double margin = 40.0;

    double sx(double x) const {
        double span = std::max(max_x - min_x, 1e-9);
        return margin + (x - min_x) / span * (size - 2 * margin);
    }
    double sy(double y) const {
        double span = std::max(max_y - min_y, 1e-9);
        return size - margin - (y - min_y) / span * (size - 2 * margin);
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

} // namespace

std::string render_svg(const HullConfig& config,
                       const std::optional<Partition>& partition,
                       const std::optional<Forest>& forest) {
    std::vector<ExactPoint> pts = realize(config);
    std::vector<std::pair<double, double>> xy;
    for (const ExactPoint& p : pts) xy.emplace_back(p.x.get_d(), p.y.get_d());

    Canvas c{xy[0].first, xy[0].first, xy[0].second, xy[0].second};
    for (auto [x, y] : xy) {
        c.min_x = std::min(c.min_x, x);
        c.max_x = std::max(c.max_x, x);
        c.min_y = std::min(c.min_y, y);
        c.max_y = std::max(c.max_y, y);
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
          "viewBox=\"0 0 600 600\">\n";

    if (partition) {
        static const char* fills[] = {"#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc",
                                      "#fc9272", "#c7e9c0", "#fdd0a2", "#dadaeb"};
        int bi = 0;
        for (const auto& block : partition->blocks()) {
            std::vector<ExactPoint> bp;
            for (int p : block) bp.push_back(pts[p]);
            std::vector<ExactPoint> hull = convex_hull(bp);
            const char* fill = fills[bi++ % 8];
            if (hull.size() >= 3) {
                os << "  <polygon points=\"";
                for (size_t i = 0; i < hull.size(); ++i) {
                    if (i) os << ' ';
                    os << fmt(c.sx(hull[i].x.get_d())) << ',' << fmt(c.sy(hull[i].y.get_d()));
                }
                os << "\" fill=\"" << fill << "\" stroke=\"#555555\" fill-opacity=\"0.6\"/>\n";
            } else if (hull.size() == 2) {
                os << "  <line x1=\"" << fmt(c.sx(hull[0].x.get_d())) << "\" y1=\""
                   << fmt(c.sy(hull[0].y.get_d())) << "\" x2=\"" << fmt(c.sx(hull[1].x.get_d()))
                   << "\" y2=\"" << fmt(c.sy(hull[1].y.get_d())) << "\" stroke=\"" << fill
                   << "\" stroke-width=\"5\"/>\n";
            }
        }
    }

    if (forest) {
        for (auto [a, b] : forest->edges)
            os << "  <line x1=\"" << fmt(c.sx(xy[a].first)) << "\" y1=\"" << fmt(c.sy(xy[a].second))
               << "\" x2=\"" << fmt(c.sx(xy[b].first)) << "\" y2=\"" << fmt(c.sy(xy[b].second))
               << "\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
    }

    for (size_t i = 0; i < xy.size(); ++i) {
        os << "  <circle cx=\"" << fmt(c.sx(xy[i].first)) << "\" cy=\"" << fmt(c.sy(xy[i].second))
           << "\" r=\"4\" fill=\"#000000\"/>\n";
        os << "  <text x=\"" << fmt(c.sx(xy[i].first) + 7) << "\" y=\""
           << fmt(c.sy(xy[i].second) - 7) << "\" font-size=\"13\">" << i << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace nchull
