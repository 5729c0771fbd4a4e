#include "ramsey/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ramsey {

namespace {

constexpr int kCanvas = 800;
constexpr int kMargin = 40;

}  // namespace

std::string render_svg(const ColoredKP& kp, const std::optional<Embedding>& witness) {
    const auto& pts = kp.points().points();
    Coord min_x = pts.front().x, max_x = pts.front().x;
    Coord min_y = pts.front().y, max_y = pts.front().y;
    for (const Point& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const long long span_x = std::max<long long>(max_x - min_x, 1);
    const long long span_y = std::max<long long>(max_y - min_y, 1);
    const long long inner = kCanvas - 2 * kMargin;
    auto sx = [&](Coord x) {
        return kMargin + (x - min_x) * inner / span_x;
    };
    auto sy = [&](Coord y) {  // flip: SVG y grows downward
        return kMargin + (max_y - y) * inner / span_y;
    };

    std::set<std::pair<int, int>> thick;
    if (witness)
        for (auto [u, v] : witness->pattern.edges())
            thick.insert(std::minmax(witness->map[u], witness->map[v]));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas
        << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " "
        << kCanvas << "\">\n";
    for (int j = 0; j < kp.size(); ++j)
        for (int i = 0; i < j; ++i) {
            bool red = kp.is_red(i, j);
            bool wit = thick.count({i, j}) > 0;
            out << "<line x1=\"" << sx(pts[i].x) << "\" y1=\"" << sy(pts[i].y)
                << "\" x2=\"" << sx(pts[j].x) << "\" y2=\"" << sy(pts[j].y)
                << "\" stroke=\"" << (red ? "#c0392b" : "#2c5aa0") << "\" stroke-width=\""
                << (wit ? 4 : 1) << "\"";
            if (!red) out << " stroke-dasharray=\"6 4\"";
            if (!wit) out << " opacity=\"0.45\"";
            out << "/>\n";
        }
    for (int i = 0; i < kp.size(); ++i) {
        out << "<circle cx=\"" << sx(pts[i].x) << "\" cy=\"" << sy(pts[i].y)
            << "\" r=\"6\" fill=\"#222\"/>\n";
        out << "<text x=\"" << sx(pts[i].x) + 8 << "\" y=\"" << sy(pts[i].y) - 8
            << "\" font-size=\"14\" font-family=\"monospace\">" << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ramsey
