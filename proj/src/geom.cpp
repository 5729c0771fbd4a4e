#include "ramsey/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

namespace ramsey {

namespace {

Coord cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

bool on_open_segment(const Point& a, const Point& b, const Point& p) {
    if (orientation(a, b, p) != Orient::Collinear) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y) &&
           !(p.x == a.x && p.y == a.y) && !(p.x == b.x && p.y == b.y);
}

bool same_coords(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

}  // namespace

Orient orientation(const Point& p, const Point& q, const Point& r) {
    Coord c = cross(p, q, r);
    if (c > 0) return Orient::CCW;
    if (c < 0) return Orient::CW;
    return Orient::Collinear;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (same_coords(a, c) || same_coords(a, d) || same_coords(b, c) || same_coords(b, d))
        return false;
    Orient o1 = orientation(a, b, c);
    Orient o2 = orientation(a, b, d);
    Orient o3 = orientation(c, d, a);
    Orient o4 = orientation(c, d, b);
    if (o1 != Orient::Collinear && o2 != Orient::Collinear &&
        o3 != Orient::Collinear && o4 != Orient::Collinear)
        return o1 != o2 && o3 != o4;
    // Collinear cases cannot occur for points of a general-position set, but
    // the predicate stays exact for arbitrary input.
    return on_open_segment(a, b, c) || on_open_segment(a, b, d) ||
           on_open_segment(c, d, a) || on_open_segment(c, d, b);
}

PointSet::PointSet(std::vector<Point> points, PositionClass cls)
    : points_(std::move(points)), class_(cls) {
    const int n = static_cast<int>(points_.size());
    if (n < 1) throw GeomError("PointSet needs at least one point");
    std::unordered_set<Coord> xs, ys;
    for (int i = 0; i < n; ++i) {
        points_[i].id = i;
        const auto& p = points_[i];
        if (std::llabs(p.x) >= kCoordLimit || std::llabs(p.y) >= kCoordLimit)
            throw GeomError("coordinate exceeds exactness budget");
        if (!xs.insert(p.x).second) throw GeomError("duplicate x coordinate");
        if (!ys.insert(p.y).second) throw GeomError("duplicate y coordinate");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation(points_[i], points_[j], points_[k]) == Orient::Collinear)
                    throw GeomError("collinear triple in point set");
    if (class_ == PositionClass::Convex && !is_convex_position())
        throw GeomError("points are not in convex position");
}

PointSet PointSet::generate(int n, PositionClass cls, std::uint64_t seed) {
    if (n < 1) throw GeomError("generate_points: n must be positive");
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    if (cls == PositionClass::Convex) {
        // Integer points on the parabola y = t^2: strictly convex, distinct
        // x and y, never three collinear.
        const Coord tmax = 5000;
        if (n > tmax) throw GeomError("convex generation exceeds coordinate budget");
        std::unordered_set<Coord> used;
        std::uniform_int_distribution<Coord> dist(1, tmax);
        std::vector<Coord> ts;
        while (static_cast<int>(ts.size()) < n) {
            Coord t = dist(rng);
            if (used.insert(t).second) ts.push_back(t);
        }
        std::sort(ts.begin(), ts.end());
        for (Coord t : ts) pts.push_back(Point{t, t * t, -1});
    } else {
        const Coord lim = (Coord{1} << 24) - 1;
        std::uniform_int_distribution<Coord> dist(-lim, lim);
        std::unordered_set<Coord> xs, ys;
        while (static_cast<int>(pts.size()) < n) {
            Point cand{dist(rng), dist(rng), -1};
            if (xs.count(cand.x) || ys.count(cand.y)) continue;
            bool ok = true;
            for (size_t i = 0; i < pts.size() && ok; ++i)
                for (size_t j = i + 1; j < pts.size() && ok; ++j)
                    if (orientation(pts[i], pts[j], cand) == Orient::Collinear) ok = false;
            if (!ok) continue;
            xs.insert(cand.x);
            ys.insert(cand.y);
            pts.push_back(cand);
        }
    }
    return PointSet(std::move(pts), cls);
}

std::vector<int> PointSet::convex_hull() const {
    const int n = size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return points_[a].x < points_[b].x;
    });
    if (n <= 2) return idx;
    auto build = [&](const std::vector<int>& order) {
        std::vector<int> chain;
        for (int id : order) {
            while (chain.size() >= 2 &&
                   orientation(points_[chain[chain.size() - 2]], points_[chain.back()],
                               points_[id]) != Orient::CCW)
                chain.pop_back();
            chain.push_back(id);
        }
        return chain;
    };
    std::vector<int> lower = build(idx);
    std::reverse(idx.begin(), idx.end());
    std::vector<int> upper = build(idx);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

bool PointSet::is_convex_position() const {
    return static_cast<int>(convex_hull().size()) == size();
}

std::vector<int> order_by_x(const PointSet& ps) {
    std::vector<int> idx(ps.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ps[a].x < ps[b].x; });
    return idx;
}

std::vector<int> order_by_y(const PointSet& ps) {
    std::vector<int> idx(ps.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ps[a].y < ps[b].y; });
    return idx;
}

std::vector<int> angular_order(const PointSet& ps, int pivot) {
    const int n = ps.size();
    if (pivot < 0 || pivot >= n) throw GeomError("angular_order: pivot out of range");
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != pivot) others.push_back(i);
    if (others.empty()) return others;
    // The pivot must see everything within an open halfplane; find a
    // supporting direction by checking hull membership of the pivot.
    auto hull = ps.convex_hull();
    if (std::find(hull.begin(), hull.end(), pivot) == hull.end())
        throw GeomError("angular_order: interior pivot is ambiguous");
    // Start the clockwise sweep at the hull predecessor direction: every
    // other point is weakly clockwise from it.
    int h = static_cast<int>(std::find(hull.begin(), hull.end(), pivot) - hull.begin());
    const Point& ref = ps[hull[(h + hull.size() - 1) % hull.size()]];
    const Point& pp = ps[pivot];
    std::sort(others.begin(), others.end(), [&](int a, int b) {
        if (a == b) return false;
        Orient ra = orientation(pp, ref, ps[a]);
        Orient rb = orientation(pp, ref, ps[b]);
        if (ra != rb) {
            // Points on the reference ray side come first in a CW sweep.
            if (ra == Orient::Collinear) return true;
            if (rb == Orient::Collinear) return false;
            return ra == Orient::CW;
        }
        return orientation(pp, ps[a], ps[b]) == Orient::CW;
    });
    return others;
}

PointSet subset_points(const PointSet& ps, const std::vector<int>& ids) {
    std::vector<Point> pts;
    for (int id : ids) {
        if (id < 0 || id >= ps.size()) throw GeomError("subset_points: id out of range");
        pts.push_back(ps[id]);
    }
    PointSet sub(std::move(pts), PositionClass::General);
    if (sub.is_convex_position())
        sub = PointSet(std::vector<Point>(sub.points()), PositionClass::Convex);
    return sub;
}

std::vector<std::vector<int>> strip_partition(const PointSet& ps,
                                              const std::vector<int>& sizes) {
    long long total = 0;
    for (int s : sizes) {
        if (s < 0) throw GeomError("strip_partition: negative size");
        total += s;
    }
    if (total > ps.size()) throw GeomError("strip_partition: sizes exceed point count");
    std::vector<int> byx = order_by_x(ps);
    std::vector<std::vector<int>> parts;
    int at = 0;
    for (int s : sizes) {
        parts.emplace_back(byx.begin() + at, byx.begin() + at + s);
        at += s;
    }
    return parts;
}

}  // namespace ramsey
