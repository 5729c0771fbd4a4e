#include "ramsey/coloring.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace ramsey {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

ColoredKP::ColoredKP(PointSet points)
    : points_(std::move(points)),
      red_(static_cast<size_t>(points_.size()) * (points_.size() - 1) / 2, 0) {}

int ColoredKP::pair_index(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= size() || j >= size())
        throw GeomError("edge index out of range");
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

EdgeColor ColoredKP::color(int i, int j) const {
    return red_[pair_index(i, j)] ? EdgeColor::Red : EdgeColor::Blue;
}

void ColoredKP::set_color(int i, int j, EdgeColor c) {
    red_[pair_index(i, j)] = (c == EdgeColor::Red) ? 1 : 0;
}

int ColoredKP::red_degree(int v) const {
    int d = 0;
    for (int u = 0; u < size(); ++u)
        if (u != v && is_red(u, v)) ++d;
    return d;
}

std::vector<std::pair<int, int>> ColoredKP::red_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < size(); ++j)
        for (int i = 0; i < j; ++i)
            if (is_red(i, j)) out.emplace_back(i, j);
    return out;
}

ColoredKP ColoredKP::swapped() const {
    ColoredKP k(points_);
    for (size_t t = 0; t < red_.size(); ++t) k.red_[t] = red_[t] ? 0 : 1;
    return k;
}

std::uint64_t ColoredKP::coloring_hash() const {
    std::uint64_t h = 0;
    for (int j = 0; j < size(); ++j)
        for (int i = 0; i < j; ++i)
            h += splitmix64((std::uint64_t(i) << 34) ^ (std::uint64_t(j) << 2) ^
                            (is_red(i, j) ? 1 : 0));
    return h;
}

ColoredKP ColoredKP::random(PointSet points, double red_bias, std::uint64_t seed) {
    if (red_bias < 0.0 || red_bias > 1.0) throw GeomError("bias must be in [0,1]");
    ColoredKP k(std::move(points));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int j = 0; j < k.size(); ++j)
        for (int i = 0; i < j; ++i)
            k.set_color(i, j, dist(rng) < red_bias ? EdgeColor::Red : EdgeColor::Blue);
    return k;
}

ColoredKP ColoredKP::lower_bound(int tree_n, int host_m, PointSet convex_points) {
    if (tree_n < 2 || host_m < 2) throw GeomError("lower_bound: need n,m >= 2");
    const int expected = (tree_n - 1) * (host_m - 1);
    if (convex_points.position_class() != PositionClass::Convex)
        throw GeomError("lower_bound: points must be convex");
    if (convex_points.size() != expected)
        throw GeomError("lower_bound: need exactly (n-1)(m-1) points");
    // Clockwise labelling seen from the lexicographically smallest hull point.
    auto hull = convex_points.convex_hull();  // CCW
    int start = 0;
    for (size_t i = 1; i < hull.size(); ++i) {
        const Point& a = convex_points[hull[i]];
        const Point& b = convex_points[hull[start]];
        if (a.x < b.x || (a.x == b.x && a.y < b.y)) start = static_cast<int>(i);
    }
    std::vector<int> label;  // label[t] = point id of v_{t+1}
    for (int t = 0; t < expected; ++t)
        label.push_back(hull[(start - t % expected + expected) % expected]);
    std::vector<int> part(expected, 0);
    for (int t = 0; t < expected; ++t) part[label[t]] = t / (tree_n - 1);
    ColoredKP k(std::move(convex_points));
    for (int j = 0; j < k.size(); ++j)
        for (int i = 0; i < j; ++i)
            k.set_color(i, j, part[i] == part[j] ? EdgeColor::Red : EdgeColor::Blue);
    return k;
}

ValidationReport validate(const ColoredKP& kp, const Embedding& e) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const auto& g = e.pattern;
    if (static_cast<int>(e.map.size()) != g.n()) {
        fail("map size differs from pattern order");
        return rep;
    }
    std::vector<char> used(kp.size(), 0);
    for (int v = 0; v < g.n(); ++v) {
        int p = e.map[v];
        if (p < 0 || p >= kp.size()) {
            fail("vertex " + std::to_string(v) + " maps outside the point set");
            return rep;
        }
        if (used[p]) fail("point " + std::to_string(p) + " used twice");
        used[p] = 1;
    }
    for (auto [u, v] : g.edges())
        if (kp.color(e.map[u], e.map[v]) != e.color)
            fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                 ") has the wrong color");
    const auto& edges = g.edges();
    for (size_t a = 0; a < edges.size(); ++a)
        for (size_t b = a + 1; b < edges.size(); ++b) {
            const Point& p1 = kp.points()[e.map[edges[a].first]];
            const Point& p2 = kp.points()[e.map[edges[a].second]];
            const Point& q1 = kp.points()[e.map[edges[b].first]];
            const Point& q2 = kp.points()[e.map[edges[b].second]];
            if (segments_cross(p1, p2, q1, q2))
                fail("edges (" + std::to_string(edges[a].first) + "," +
                     std::to_string(edges[a].second) + ") and (" +
                     std::to_string(edges[b].first) + "," +
                     std::to_string(edges[b].second) + ") cross");
        }
    if (e.extremal) {
        const Point& r = kp.points()[e.map[e.extremal->root]];
        for (int v = 0; v < g.n(); ++v) {
            const Point& p = kp.points()[e.map[v]];
            bool bad = e.extremal->axis == ExtremalAxis::MaxX ? p.x > r.x : p.y > r.y;
            if (bad) fail("root is not extremal against vertex " + std::to_string(v));
        }
    }
    return rep;
}

namespace {

struct EmbedSearch {
    const ColoredKP& kp;
    const PatternGraph& g;
    EdgeColor color;
    const OracleOptions& opts;
    std::vector<int> order;          // pattern vertices in placement order
    std::vector<int> image;          // pattern vertex -> point id or -1
    std::vector<char> point_used;
    std::vector<int> candidates;
    std::vector<std::pair<int, int>> drawn;  // point-id segments placed so far
    const std::function<void(const std::vector<int>&)>* sink = nullptr;
    bool found = false;

    EmbedSearch(const ColoredKP& kp, const PatternGraph& g, EdgeColor c,
                const OracleOptions& o)
        : kp(kp), g(g), color(c), opts(o), image(g.n(), -1), point_used(kp.size(), 0) {
        if (opts.allowed_points) {
            candidates = *opts.allowed_points;
        } else {
            candidates.resize(kp.size());
            for (int i = 0; i < kp.size(); ++i) candidates[i] = i;
        }
        // BFS placement order from the highest-degree vertex (or the extremal
        // root / first pinned vertex, placed first), covering all components.
        std::vector<char> seen(g.n(), 0);
        int first = 0;
        for (int v = 1; v < g.n(); ++v)
            if (g.degree(v) > g.degree(first)) first = v;
        if (opts.extremal) first = opts.extremal->root;
        if (!opts.pins.empty()) first = opts.pins.front().first;
        std::vector<int> queue{first};
        seen[first] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            order.push_back(v);
            std::uint64_t nb = g.neighbors(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            }
            if (qi + 1 == queue.size())
                for (int u = 0; u < g.n(); ++u)
                    if (!seen[u]) {
                        seen[u] = 1;
                        queue.push_back(u);
                        break;
                    }
        }
    }

    bool extremal_ok(int vertex, int point) const {
        if (!opts.extremal) return true;
        const auto& ex = *opts.extremal;
        const Point& p = kp.points()[point];
        if (vertex == ex.root) {
            // Extreme copy: the root beats the points of its own copy, not
            // of the whole set.
            for (int v : order) {
                if (image[v] < 0 || v == vertex) continue;
                const Point& q = kp.points()[image[v]];
                if (ex.axis == ExtremalAxis::MaxX ? q.x > p.x : q.y > p.y) return false;
            }
            return true;
        }
        if (image[ex.root] < 0) return true;
        const Point& r = kp.points()[image[ex.root]];
        return ex.axis == ExtremalAxis::MaxX ? p.x < r.x : p.y < r.y;
    }

    bool place(size_t k) {
        if (k == order.size()) {
            if (sink) {
                (*sink)(image);
                return false;  // keep enumerating
            }
            found = true;
            return true;
        }
        int v = order[k];
        int pinned = -1;
        for (auto [pv, pp] : opts.pins)
            if (pv == v) pinned = pp;
        for (int p : candidates) {
            if (pinned >= 0 && p != pinned) continue;
            if (point_used[p]) continue;
            if (!extremal_ok(v, p)) continue;
            bool ok = true;
            int added = 0;
            std::uint64_t nb = g.neighbors(v);
            while (ok && nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (image[u] < 0) continue;
                if (!opts.ignore_colors && kp.color(p, image[u]) != color) {
                    ok = false;
                    break;
                }
                const Point& a = kp.points()[p];
                const Point& b = kp.points()[image[u]];
                for (const auto& seg : drawn)
                    if (segments_cross(a, b, kp.points()[seg.first], kp.points()[seg.second])) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    drawn.emplace_back(p, image[u]);
                    ++added;
                }
            }
            if (ok) {
                image[v] = p;
                point_used[p] = 1;
                if (place(k + 1)) return true;
                image[v] = -1;
                point_used[p] = 0;
            }
            drawn.resize(drawn.size() - added);
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_mono_noncrossing(const ColoredKP& kp,
                                               const PatternGraph& pattern,
                                               EdgeColor c, const OracleOptions& opts) {
    if (pattern.n() > kp.size()) return std::nullopt;
    EmbedSearch s(kp, pattern, c, opts);
    if (!s.place(0)) return std::nullopt;
    return Embedding{pattern, s.image, c, opts.extremal};
}

void for_each_noncrossing(const PointSet& ps, const PatternGraph& pattern,
                          const std::function<void(const std::vector<int>&)>& fn) {
    ColoredKP kp(ps);  // colors irrelevant
    OracleOptions opts;
    opts.ignore_colors = true;
    EmbedSearch s(kp, pattern, EdgeColor::Red, opts);
    s.sink = &fn;
    s.place(0);
}

}  // namespace ramsey
