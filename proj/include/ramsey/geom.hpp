#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

using Coord = std::int64_t;

// Coordinate budget: with |x|,|y| < 2^25 every 3x3 orientation determinant
// fits in a signed 64-bit integer, so all predicates are exact.
inline constexpr Coord kCoordLimit = Coord{1} << 25;

enum class Orient { CCW, CW, Collinear };

struct Point {
    Coord x = 0;
    Coord y = 0;
    int id = -1;
};

inline bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y && a.id == b.id;
}

// Sign of the exact cross product (q-p) x (r-p).
Orient orientation(const Point& p, const Point& q, const Point& r);

// True iff the open segments ab and cd intersect. Segments sharing an
// endpoint never cross.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

enum class PositionClass { Convex, General };

// Planar point set in general position: no three collinear, all x
// coordinates pairwise distinct and all y coordinates pairwise distinct.
// Convex sets additionally have every point on the convex hull.
class PointSet {
public:
    PointSet(std::vector<Point> points, PositionClass cls);

    // Deterministic generation for a fixed seed. Convex points are placed
    // on an integer parabola arc so convexity is exact.
    static PointSet generate(int n, PositionClass cls, std::uint64_t seed);

    int size() const { return static_cast<int>(points_.size()); }
    const Point& operator[](int i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    PositionClass position_class() const { return class_; }

    // Hull vertex ids in counterclockwise order.
    std::vector<int> convex_hull() const;
    bool is_convex_position() const;

private:
    std::vector<Point> points_;
    PositionClass class_;
};

std::vector<int> order_by_x(const PointSet& ps);
std::vector<int> order_by_y(const PointSet& ps);

// Angular order around points_[pivot]. Requires the pivot to see all other
// points within an open halfplane (always true for a hull point); an
// ambiguous interior pivot is rejected. The sweep is clockwise starting at
// the supporting direction.
std::vector<int> angular_order(const PointSet& ps, int pivot);

// Sub point set on the listed ids; new id i corresponds to ids[i]. The
// position class is recomputed (a subset of a general set may be convex).
PointSet subset_points(const PointSet& ps, const std::vector<int>& ids);

// x-separated parts: part i holds exactly sizes[i] ids and every point of
// part i has smaller x than every point of part j for i < j. Rightmost
// leftover points are discarded.
std::vector<std::vector<int>> strip_partition(const PointSet& ps,
                                              const std::vector<int>& sizes);

struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ramsey
