#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "ramsey/coloring.hpp"

using namespace ramsey;

TEST_CASE("edge colors: storage, degree, swap, hash") {
    ColoredKP kp(PointSet::generate(5, PositionClass::General, 3));
    CHECK(kp.color(0, 1) == EdgeColor::Blue);
    kp.set_color(0, 1, EdgeColor::Red);
    kp.set_color(3, 2, EdgeColor::Red);
    CHECK(kp.is_red(1, 0));
    CHECK(kp.is_red(2, 3));
    CHECK(kp.red_degree(0) == 1);
    CHECK(kp.red_degree(4) == 0);
    CHECK(kp.red_edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    ColoredKP sw = kp.swapped();
    CHECK_FALSE(sw.is_red(0, 1));
    CHECK(sw.is_red(0, 4));
    CHECK(sw.swapped().coloring_hash() == kp.coloring_hash());
    CHECK(sw.coloring_hash() != kp.coloring_hash());

    CHECK_THROWS_AS(kp.color(0, 0), GeomError);
    CHECK_THROWS_AS(kp.color(0, 5), GeomError);
}

TEST_CASE("random colorings are reproducible and respect the bias extremes") {
    PointSet ps = PointSet::generate(6, PositionClass::General, 8);
    ColoredKP a = ColoredKP::random(ps, 0.5, 17);
    ColoredKP b = ColoredKP::random(ps, 0.5, 17);
    CHECK(a.coloring_hash() == b.coloring_hash());
    ColoredKP all_red = ColoredKP::random(ps, 1.0, 1);
    ColoredKP all_blue = ColoredKP::random(ps, 0.0, 1);
    CHECK(all_red.red_edges().size() == 15);
    CHECK(all_blue.red_edges().empty());
}

TEST_CASE("validate accepts a correct embedding and names violations") {
    // Four convex points; a Red path 0-1-2 along the hull.
    PointSet ps = PointSet::generate(4, PositionClass::Convex, 5);
    ColoredKP kp(ps);
    auto hull = ps.convex_hull();
    kp.set_color(hull[0], hull[1], EdgeColor::Red);
    kp.set_color(hull[1], hull[2], EdgeColor::Red);

    Embedding e{PatternGraph::path(3), {hull[0], hull[1], hull[2]}, EdgeColor::Red, {}};
    CHECK(validate(kp, e).ok);

    Embedding wrong_color = e;
    wrong_color.color = EdgeColor::Blue;
    auto rep = validate(kp, wrong_color);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violations.size() == 2);

    Embedding dup = e;
    dup.map = {hull[0], hull[1], hull[0]};
    CHECK_FALSE(validate(kp, dup).ok);

    // Crossing: the two diagonals of the convex quadrilateral.
    ColoredKP kp2(ps);
    kp2.set_color(hull[0], hull[2], EdgeColor::Red);
    kp2.set_color(hull[1], hull[3], EdgeColor::Red);
    PatternGraph two_edges(4, {{0, 1}, {2, 3}});
    Embedding x{two_edges, {hull[0], hull[2], hull[1], hull[3]}, EdgeColor::Red, {}};
    auto repx = validate(kp2, x);
    CHECK_FALSE(repx.ok);
    REQUIRE(repx.violations.size() == 1);
    CHECK(repx.violations[0].find("cross") != std::string::npos);
}

TEST_CASE("validate enforces the extremal root constraint") {
    PointSet ps = PointSet::generate(5, PositionClass::General, 21);
    ColoredKP kp = ColoredKP::random(ps, 1.0, 0);  // everything Red
    auto byy = order_by_y(ps);
    int top = byy.back(), low = byy.front();
    PatternGraph p2 = PatternGraph::path(2);
    Embedding good{p2, {top, low}, EdgeColor::Red,
                   ExtremalConstraint{ExtremalAxis::MaxY, 0}};
    CHECK(validate(kp, good).ok);
    Embedding bad{p2, {low, top}, EdgeColor::Red,
                  ExtremalConstraint{ExtremalAxis::MaxY, 0}};
    CHECK_FALSE(validate(kp, bad).ok);
}

TEST_CASE("oracle finds witnesses and proves non-existence") {
    PointSet ps = PointSet::generate(6, PositionClass::General, 30);
    ColoredKP blue(ps);  // all Blue
    for (const auto& t : enumerate_trees(6)) {
        auto e = find_mono_noncrossing(blue, t, EdgeColor::Blue);
        REQUIRE(e.has_value());
        CHECK(validate(blue, *e).ok);
        CHECK_FALSE(find_mono_noncrossing(blue, t, EdgeColor::Red).has_value());
    }
}

TEST_CASE("oracle honours extremal and allowed-point restrictions") {
    PointSet ps = PointSet::generate(7, PositionClass::General, 31);
    ColoredKP kp = ColoredKP::random(ps, 1.0, 0);
    OracleOptions opts;
    opts.extremal = ExtremalConstraint{ExtremalAxis::MaxX, 0};
    auto e = find_mono_noncrossing(kp, PatternGraph::star(4), EdgeColor::Red, opts);
    REQUIRE(e.has_value());
    CHECK(validate(kp, *e).ok);
    for (int p : e->map) CHECK(ps[e->map[0]].x >= ps[p].x);

    OracleOptions restr;
    restr.allowed_points = std::vector<int>{1, 3, 5};
    auto f = find_mono_noncrossing(kp, PatternGraph::path(3), EdgeColor::Red, restr);
    REQUIRE(f.has_value());
    for (int p : f->map) CHECK((p == 1 || p == 3 || p == 5));
    restr.allowed_points = std::vector<int>{1, 3};
    CHECK_FALSE(find_mono_noncrossing(kp, PatternGraph::path(3), EdgeColor::Red, restr)
                    .has_value());
}

TEST_CASE("non-crossing placement enumeration on convex quadrilateral") {
    PointSet ps = PointSet::generate(4, PositionClass::Convex, 2);
    int triangles = 0;
    for_each_noncrossing(ps, PatternGraph::cycle(3),
                         [&](const std::vector<int>&) { ++triangles; });
    // every 3-subset spans a triangle; 4 subsets x 3! vertex maps
    CHECK(triangles == 24);

    int cross_free_c4 = 0;
    std::set<std::vector<int>> maps;
    for_each_noncrossing(ps, PatternGraph::cycle(4), [&](const std::vector<int>& m) {
        ++cross_free_c4;
        maps.insert(m);
    });
    // C_4 embeds without crossing only along the hull order: 8 maps (4
    // rotations x 2 reflections), all distinct.
    CHECK(cross_free_c4 == 8);
    CHECK(maps.size() == 8);
}

TEST_CASE("lower-bound coloring blocks the small Ramsey instance") {
    // n=3, m=3: 4 convex points, two Red blocks of two.
    PointSet ps = PointSet::generate(4, PositionClass::Convex, 9);
    ColoredKP kp = ColoredKP::lower_bound(3, 3, ps);
    CHECK(kp.red_edges().size() == 2);
    CHECK_FALSE(find_mono_noncrossing(kp, PatternGraph::path(3), EdgeColor::Red)
                    .has_value());
    CHECK_FALSE(find_mono_noncrossing(kp, PatternGraph::cycle(3), EdgeColor::Blue)
                    .has_value());
}

TEST_CASE("lower-bound coloring is a union of m-1 red cliques of size n-1") {
    PointSet ps = PointSet::generate(12, PositionClass::Convex, 10);
    ColoredKP kp = ColoredKP::lower_bound(4, 5, ps);  // 4 blocks of 3
    // red components: each vertex has red degree n-2 = 2 and red
    // neighbourhoods are cliques
    for (int v = 0; v < kp.size(); ++v) CHECK(kp.red_degree(v) == 2);
    for (auto [i, j] : kp.red_edges())
        for (int k = 0; k < kp.size(); ++k)
            if (k != i && k != j && kp.is_red(i, k)) CHECK(kp.is_red(j, k));
    CHECK_THROWS_AS(ColoredKP::lower_bound(4, 4, ps), GeomError);
}
