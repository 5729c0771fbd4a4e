#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ramsey/verifier.hpp"

using namespace ramsey;

TEST_CASE("red_mask round trips individual edges") {
    ColoredKP kp(PointSet::generate(5, PositionClass::Convex, 1));
    CHECK(red_mask(kp) == 0);
    kp.set_color(0, 1, EdgeColor::Red);
    kp.set_color(2, 4, EdgeColor::Red);
    std::uint64_t m = red_mask(kp);
    CHECK(m == ((1ull << 0) | (1ull << (4 * 3 / 2 + 2))));
    kp.set_color(0, 1, EdgeColor::Blue);
    CHECK(red_mask(kp) == (1ull << (4 * 3 / 2 + 2)));
}

TEST_CASE("canonical_convex_mask is idempotent and orbit-constant") {
    const int N = 5;
    const int E = N * (N - 1) / 2;
    auto pidx = [](int i, int j) {
        if (i > j) std::swap(i, j);
        return j * (j - 1) / 2 + i;
    };
    // orbit of a single edge {0,1} under rotation: all hull-adjacent pairs
    std::uint64_t canon = canonical_convex_mask(1ull << pidx(0, 1), N);
    for (int k = 0; k < N; ++k)
        CHECK(canonical_convex_mask(1ull << pidx(k, (k + 1) % N), N) == canon);
    // a short diagonal is a different orbit
    CHECK(canonical_convex_mask(1ull << pidx(0, 2), N) != canon);
    for (std::uint64_t m : {0ull, 5ull, (1ull << E) - 1}) {
        std::uint64_t c = canonical_convex_mask(m, N);
        CHECK(c <= m);
        CHECK(canonical_convex_mask(c, N) == c);
    }
}

TEST_CASE("exact value for path3 vs triangle is 5") {
    auto rep = exact_convex_ramsey(PatternGraph::path(3), PatternGraph::complete(3));
    CHECK(rep.value == 5);
    CHECK(rep.colorings_scanned == (1ll << 10));
    CHECK(!rep.counterexamples.empty());
    // the block construction at 4 points must appear among the bad orbits
    auto kp = ColoredKP::lower_bound(3, 3, PointSet::generate(4, PositionClass::Convex, 7));
    std::uint64_t canon = canonical_convex_mask(red_mask(kp), 4);
    CHECK(std::count(rep.counterexamples.begin(), rep.counterexamples.end(), canon) == 1);
}

TEST_CASE("exact value for path3 vs triangle cycle has two bad orbits at 4") {
    auto rep = exact_convex_ramsey(PatternGraph::path(3), PatternGraph::cycle(3));
    CHECK(rep.value == 5);
    CHECK(rep.counterexamples.size() == 2);
}

TEST_CASE("single edge vs single edge needs two points") {
    auto rep = exact_convex_ramsey(PatternGraph::path(2), PatternGraph::path(2));
    CHECK(rep.value == 2);
    CHECK(rep.counterexamples == std::vector<std::uint64_t>{0});
}

TEST_CASE("triangles never cross so the classic value 6 comes back") {
    auto rep = exact_convex_ramsey(PatternGraph::complete(3), PatternGraph::complete(3));
    CHECK(rep.value == 6);
    CHECK(!rep.counterexamples.empty());
}

TEST_CASE("shards partition the scan") {
    auto red = PatternGraph::path(3);
    auto blue = PatternGraph::cycle(3);
    auto full = convex_counterexamples(red, blue, 4);
    std::set<std::uint64_t> merged;
    for (int s = 0; s < 3; ++s) {
        auto part = convex_counterexamples(red, blue, 4, 3, s);
        merged.insert(part.begin(), part.end());
    }
    CHECK(std::vector<std::uint64_t>(merged.begin(), merged.end()) == full);
    CHECK_THROWS_AS(convex_counterexamples(red, blue, 4, 2, 2), PipelineError);
}

TEST_CASE("oversized scans are refused") {
    CHECK_THROWS_AS(convex_counterexamples(PatternGraph::path(3),
                                           PatternGraph::complete(3), 9),
                    PipelineError);
    CHECK_THROWS_AS(exact_convex_ramsey(PatternGraph::complete(3),
                                        PatternGraph::complete(3), 4),
                    PipelineError);
}

TEST_CASE("pipeline registry rejects unknown names") {
    auto names = pipeline_names();
    CHECK(names.size() == 8);
    auto o = sweep_theorem("no_such_pipeline", PatternGraph::path(3),
                           PatternGraph::path(3), 2, 1);
    CHECK(o.failures.size() == 2);
}

TEST_CASE("sweep of the convex caterpillar pipeline is clean") {
    auto o = sweep_theorem("convex_caterpillar_vs_ham", PatternGraph::path(4),
                           PatternGraph::fan(4), 8, 99);
    CHECK(o.runs == 8);
    CHECK(o.failures.empty());
    CHECK(o.pipeline_errors == 0);
    CHECK(o.red_wins + o.blue_wins == 8);
}

TEST_CASE("sweep of the two-star pipeline is clean") {
    auto o = sweep_theorem("general_twostar_vs_ham", PatternGraph::path(4),
                           PatternGraph::fan(4), 8, 5);
    CHECK(o.failures.empty());
    CHECK(o.pipeline_errors == 0);
    CHECK(o.red_wins + o.blue_wins == 8);
}

TEST_CASE("sweeps of both self-host pipelines are clean") {
    auto a = sweep_theorem("selframsey_caterpillar", PatternGraph::star(4),
                           PatternGraph::star(4), 4, 11);
    CHECK(a.failures.empty());
    CHECK(a.red_wins + a.blue_wins == 4);
    auto b = sweep_theorem("selframsey_tree_diameter", PatternGraph::path(3),
                           PatternGraph::path(3), 4, 12);
    CHECK(b.failures.empty());
    CHECK(b.red_wins + b.blue_wins == 4);
}

TEST_CASE("tree vs caterpillar sweep produces no invalid witnesses") {
    auto o = sweep_theorem("tree_vs_caterpillar", PatternGraph::path(4),
                           PatternGraph::star(3), 6, 21, 2);
    CHECK(o.runs == 6);
    CHECK(o.failures.empty());  // extraction shortfalls land in pipeline_errors
    CHECK(o.red_wins + o.blue_wins + o.pipeline_errors == 6);
}

TEST_CASE("convex tree vs two-path host sweep is clean") {
    auto o = sweep_theorem("tree_vs_pw2_convex", PatternGraph::path(3),
                           PatternGraph::fan(4), 6, 31, 1);
    CHECK(o.failures.empty());
    CHECK(o.pipeline_errors == 0);
    CHECK(o.red_wins + o.blue_wins == 6);
}

TEST_CASE("calibration finds a working constant for the convex host recursion") {
    int c = calibrate_constant("tree_vs_pw2_convex", PatternGraph::path(3),
                               PatternGraph::fan(4), 3, 77, 3);
    CHECK(c == 1);  // the convex bound has no slack constant
}
