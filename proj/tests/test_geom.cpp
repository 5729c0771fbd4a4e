#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ramsey/geom.hpp"

using namespace ramsey;

namespace {
Point pt(Coord x, Coord y) { return Point{x, y, -1}; }
}  // namespace

TEST_CASE("orientation basic cases") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orient::CCW);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == Orient::Collinear);
    CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 1)) == Orient::CW);
}

TEST_CASE("orientation antisymmetry over random triples") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<Coord> d(-1000, 1000);
    auto flip = [](Orient o) {
        if (o == Orient::CCW) return Orient::CW;
        if (o == Orient::CW) return Orient::CCW;
        return Orient::Collinear;
    };
    for (int t = 0; t < 500; ++t) {
        Point a = pt(d(rng), d(rng)), b = pt(d(rng), d(rng)), c = pt(d(rng), d(rng));
        Orient o = orientation(a, b, c);
        CHECK(orientation(b, a, c) == flip(o));
        CHECK(orientation(a, c, b) == flip(o));
        CHECK(orientation(b, c, a) == o);
        CHECK(orientation(c, a, b) == o);
    }
}

TEST_CASE("segments_cross basic cases") {
    CHECK(segments_cross(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
    CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 0), pt(0, 0), pt(0, 1)));
    CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 0), pt(5, 5), pt(6, 5)));
}

TEST_CASE("segments_cross symmetry") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Coord> d(-50, 50);
    for (int t = 0; t < 500; ++t) {
        Point a = pt(d(rng), d(rng)), b = pt(d(rng), d(rng));
        Point c = pt(d(rng), d(rng)), e = pt(d(rng), d(rng));
        bool r = segments_cross(a, b, c, e);
        CHECK(segments_cross(c, e, a, b) == r);
        CHECK(segments_cross(b, a, c, e) == r);
        CHECK(segments_cross(a, b, e, c) == r);
    }
}

TEST_CASE("convex hull of square corners") {
    PointSet ps({pt(0, 0), pt(4, 1), pt(5, 5), pt(1, 4)}, PositionClass::Convex);
    auto hull = ps.convex_hull();
    REQUIRE(hull.size() == 4);
    // CCW order as a cyclic sequence starting anywhere.
    int at0 = static_cast<int>(std::find(hull.begin(), hull.end(), 0) - hull.begin());
    std::vector<int> rot;
    for (int i = 0; i < 4; ++i) rot.push_back(hull[(at0 + i) % 4]);
    CHECK(rot == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("interior point excluded from hull") {
    PointSet ps({pt(0, 0), pt(7, 1), pt(8, 6), pt(1, 5), pt(3, 2)},
                PositionClass::General);
    auto hull = ps.convex_hull();
    CHECK(hull.size() == 4);
    CHECK(std::find(hull.begin(), hull.end(), 4) == hull.end());
    CHECK_FALSE(ps.is_convex_position());
}

TEST_CASE("hull verified by side-of-line check on random points") {
    for (std::uint64_t seed : {3u, 9u, 27u}) {
        PointSet ps = PointSet::generate(7, PositionClass::General, seed);
        auto hull = ps.convex_hull();
        const int h = static_cast<int>(hull.size());
        for (int i = 0; i < h; ++i) {
            const Point& a = ps[hull[i]];
            const Point& b = ps[hull[(i + 1) % h]];
            for (int j = 0; j < ps.size(); ++j) {
                if (j == hull[i] || j == hull[(i + 1) % h]) continue;
                CHECK(orientation(a, b, ps[j]) == Orient::CCW);
            }
        }
    }
}

TEST_CASE("hull invariant under input permutation") {
    PointSet ps = PointSet::generate(9, PositionClass::General, 11);
    std::vector<Point> shuffled = ps.points();
    std::mt19937_64 rng(5);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<int> back(ps.size());
    for (size_t i = 0; i < shuffled.size(); ++i) back[i] = shuffled[i].id;
    PointSet ps2(shuffled, PositionClass::General);
    auto h1 = ps.convex_hull();
    auto h2 = ps2.convex_hull();
    // Map h2 ids back to original ids and compare as cyclic sequences.
    std::vector<int> mapped;
    for (int id : h2) mapped.push_back(back[id]);
    REQUIRE(h1.size() == mapped.size());
    auto at = std::find(mapped.begin(), mapped.end(), h1[0]);
    REQUIRE(at != mapped.end());
    std::rotate(mapped.begin(), at, mapped.end());
    CHECK(h1 == mapped);
}

TEST_CASE("generate: convex contract") {
    PointSet ps = PointSet::generate(5, PositionClass::Convex, 1);
    CHECK(ps.size() == 5);
    CHECK(ps.is_convex_position());
}

TEST_CASE("generate: general position, all triples checked at construction") {
    PointSet ps = PointSet::generate(20, PositionClass::General, 7);
    CHECK(ps.size() == 20);
    for (int i = 0; i < 20; ++i)
        for (int j = i + 1; j < 20; ++j)
            for (int k = j + 1; k < 20; ++k)
                CHECK(orientation(ps[i], ps[j], ps[k]) != Orient::Collinear);
}

TEST_CASE("generate: single point and reproducibility") {
    CHECK(PointSet::generate(1, PositionClass::Convex, 0).size() == 1);
    PointSet a = PointSet::generate(12, PositionClass::General, 99);
    PointSet b = PointSet::generate(12, PositionClass::General, 99);
    for (int i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].y == b[i].y);
    }
}

TEST_CASE("point set invariants are enforced") {
    CHECK_THROWS_AS(PointSet({pt(0, 0), pt(0, 5)}, PositionClass::General), GeomError);
    CHECK_THROWS_AS(PointSet({pt(0, 0), pt(5, 0)}, PositionClass::General), GeomError);
    CHECK_THROWS_AS(PointSet({pt(0, 0), pt(1, 1), pt(2, 2)}, PositionClass::General),
                    GeomError);
    CHECK_THROWS_AS(PointSet({pt(0, 0), pt(7, 1), pt(8, 6), pt(1, 5), pt(3, 2)},
                             PositionClass::Convex),
                    GeomError);
    CHECK_THROWS_AS(PointSet({pt(Coord{1} << 25, 0), pt(0, 1)}, PositionClass::General),
                    GeomError);
}

TEST_CASE("order by x and y") {
    PointSet ps({pt(3, 1), pt(1, 2), pt(2, 0)}, PositionClass::General);
    CHECK(order_by_x(ps) == std::vector<int>{1, 2, 0});
    CHECK(order_by_y(ps) == std::vector<int>{2, 0, 1});
}

TEST_CASE("angular order around a hull point is a clockwise sweep") {
    PointSet ps = PointSet::generate(6, PositionClass::Convex, 4);
    auto hull = ps.convex_hull();
    for (int pivot : hull) {
        auto ord = angular_order(ps, pivot);
        REQUIRE(ord.size() == 5);
        const Point& pp = ps[pivot];
        for (size_t i = 0; i + 1 < ord.size(); ++i)
            CHECK(orientation(pp, ps[ord[i]], ps[ord[i + 1]]) == Orient::CW);
    }
}

TEST_CASE("angular order rejects interior pivots") {
    PointSet ps({pt(0, 0), pt(7, 1), pt(8, 6), pt(1, 5), pt(3, 2)},
                PositionClass::General);
    CHECK_THROWS_AS(angular_order(ps, 4), GeomError);
}

TEST_CASE("strip partition separates by x") {
    PointSet ps = PointSet::generate(10, PositionClass::General, 13);
    auto parts = strip_partition(ps, {3, 3});
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 3);
    CHECK(parts[1].size() == 3);
    for (int a : parts[0])
        for (int b : parts[1]) CHECK(ps[a].x < ps[b].x);
    CHECK_THROWS_AS(strip_partition(ps, {6, 5}), GeomError);

    PointSet ps6 = PointSet::generate(6, PositionClass::General, 14);
    auto three = strip_partition(ps6, {2, 2, 2});
    REQUIRE(three.size() == 3);
    for (int s = 0; s + 1 < 3; ++s)
        for (int a : three[s])
            for (int b : three[s + 1]) CHECK(ps6[a].x < ps6[b].x);
}
