#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "ramsey/graphs.hpp"

using namespace ramsey;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Pair -> bit index for an edge mask on up to 8 vertices.
int ebit(int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

std::uint64_t edge_mask(int n, const EdgeList& edges) {
    (void)n;
    std::uint64_t m = 0;
    for (auto [u, v] : edges) m |= std::uint64_t{1} << ebit(u, v);
    return m;
}

// Canonical form by minimising the edge mask over all vertex permutations.
// Independent of the library's centre-rooted canonical form.
std::uint64_t perm_canonical(int n, std::uint64_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if ((mask >> ebit(u, v)) & 1) m |= std::uint64_t{1} << ebit(perm[u], perm[v]);
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Tree from a Prüfer sequence (labels 0..n-1).
EdgeList from_pruefer(int n, const std::vector<int>& seq) {
    std::vector<int> deg(n, 1);
    for (int v : seq) ++deg[v];
    EdgeList edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return edges;
}

// Non-isomorphic tree count via Prüfer enumeration + permutation canonical
// forms; independent of enumerate_trees.
int pruefer_tree_count(int n) {
    if (n <= 2) return 1;
    std::set<std::uint64_t> canon;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        canon.insert(perm_canonical(n, edge_mask(n, from_pruefer(n, seq))));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return static_cast<int>(canon.size());
}

bool is_subgraph(const PatternGraph& sub, const PatternGraph& host) {
    for (auto [u, v] : sub.edges())
        if (!host.has_edge(u, v)) return false;
    return true;
}

// All triangulations of the convex polygon lo..hi (base edge lo-hi),
// returned as chord lists.
std::vector<EdgeList> triangulate_range(int lo, int hi) {
    std::vector<EdgeList> out;
    if (hi - lo < 2) {
        out.push_back({});
        return out;
    }
    for (int k = lo + 1; k < hi; ++k) {
        auto left = triangulate_range(lo, k);
        auto right = triangulate_range(k, hi);
        for (const auto& l : left)
            for (const auto& r : right) {
                EdgeList e = l;
                e.insert(e.end(), r.begin(), r.end());
                if (k - lo > 1) e.emplace_back(lo, k);
                if (hi - k > 1) e.emplace_back(k, hi);
                out.push_back(std::move(e));
            }
    }
    return out;
}

bool mask_induces_path(const PatternGraph& g, std::uint64_t mask) {
    int cnt = std::popcount(mask);
    if (cnt == 0) return false;
    int edges = 0, start = std::countr_zero(mask);
    for (int v = 0; v < g.n(); ++v) {
        if (!((mask >> v) & 1)) continue;
        int d = std::popcount(g.neighbors(v) & mask);
        if (d > 2) return false;
        edges += d;
    }
    if (edges / 2 != cnt - 1) return false;
    std::uint64_t seen = std::uint64_t{1} << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        std::uint64_t nb = g.neighbors(v) & mask & ~seen;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            seen |= std::uint64_t{1} << u;
            stack.push_back(u);
        }
    }
    return seen == mask;
}

// Brute-force two-induced-path split test, independent of pw2_decompose.
bool brute_two_path_split(const PatternGraph& g) {
    std::uint64_t all = (std::uint64_t{1} << g.n()) - 1;
    for (std::uint64_t u = 1; u < all; ++u)
        if (mask_induces_path(g, u) && mask_induces_path(g, all & ~u)) return true;
    return false;
}

}  // namespace

TEST_CASE("recognize: paths, stars, complete graphs") {
    auto p4 = PatternGraph::path(4).recognize();
    CHECK(p4.count(GraphClass::Tree));
    CHECK(p4.count(GraphClass::Caterpillar));
    CHECK(p4.count(GraphClass::Path));
    CHECK(p4.count(GraphClass::Outerplanar));
    CHECK_FALSE(p4.count(GraphClass::Star));

    auto k4 = PatternGraph::complete(4).recognize();
    CHECK_FALSE(k4.count(GraphClass::Outerplanar));

    // K_{2,3}, the other forbidden configuration.
    PatternGraph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK_FALSE(k23.recognize().count(GraphClass::Outerplanar));

    auto s5 = PatternGraph::star(5).recognize();
    CHECK(s5.count(GraphClass::Star));
    CHECK(s5.count(GraphClass::Caterpillar));
    CHECK_FALSE(s5.count(GraphClass::Path));
}

TEST_CASE("recognize: triangulated fan") {
    auto tags = PatternGraph::fan(6).recognize();
    CHECK(tags.count(GraphClass::Outerplanar));
    CHECK(tags.count(GraphClass::HamiltonianOuterplanar));
    CHECK(tags.count(GraphClass::OuterplanarTriangulation));
    CHECK(tags.count(GraphClass::PW2Triangulation));
    CHECK_FALSE(tags.count(GraphClass::Tree));
}

TEST_CASE("hamiltonian outer cycle is a valid witness") {
    for (const auto& g : {PatternGraph::fan(7), PatternGraph::cycle(5)}) {
        auto cyc = g.hamiltonian_outer_cycle();
        REQUIRE(cyc.has_value());
        REQUIRE(static_cast<int>(cyc->size()) == g.n());
        for (int i = 0; i < g.n(); ++i)
            CHECK(g.has_edge((*cyc)[i], (*cyc)[(i + 1) % g.n()]));
    }
    CHECK_FALSE(PatternGraph::path(4).hamiltonian_outer_cycle().has_value());
    CHECK_FALSE(PatternGraph::complete(4).hamiltonian_outer_cycle().has_value());
}

TEST_CASE("caterpillar structure: star, path, two-star") {
    auto s = caterpillar_structure(PatternGraph::star(5));
    CHECK(s.spine_length == 1);
    CHECK(s.max_degree == 4);
    CHECK(((s.m1 == 1 && s.m2 == 4) || (s.m1 == 4 && s.m2 == 1)));

    auto p = caterpillar_structure(PatternGraph::path(5));
    CHECK(p.spine_length == 3);
    CHECK(p.spine == std::vector<int>{1, 2, 3});
    CHECK(p.max_degree == 2);
    CHECK(((p.m1 == 3 && p.m2 == 2) || (p.m1 == 2 && p.m2 == 3)));

    // Two adjacent centres of degrees 3 and 4, n = 7.
    PatternGraph two_star(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}});
    auto t = caterpillar_structure(two_star);
    CHECK(t.spine_length == 2);
    CHECK(t.n() == 7);
    CHECK(t.max_degree == 4);
    // Both classes are independent sets.
    for (const auto& cls : {t.class1, t.class2})
        for (size_t i = 0; i < cls.size(); ++i)
            for (size_t j = i + 1; j < cls.size(); ++j)
                CHECK_FALSE(two_star.has_edge(cls[i], cls[j]));
    CHECK(t.m1 + t.m2 == 7);

    // A tree that is not a caterpillar: spider with three legs of length 2.
    PatternGraph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(spider.recognize().count(GraphClass::Tree));
    CHECK_FALSE(spider.recognize().count(GraphClass::Caterpillar));
    CHECK_THROWS_AS(caterpillar_structure(spider), GraphError);
}

TEST_CASE("pw2 decomposition of small triangulations") {
    auto k3 = pw2_decompose(PatternGraph::complete(3));
    REQUIRE(k3.has_value());
    CHECK(k3->m1 == 1);
    CHECK(k3->m2 == 2);

    auto f5 = pw2_decompose(PatternGraph::fan(5));
    REQUIRE(f5.has_value());
    CHECK(f5->m1 + f5->m2 == 5);
    CHECK(f5->m1 == 1);  // the apex alone leaves an induced path

    CHECK_THROWS_AS(pw2_decompose(PatternGraph::path(4)), GraphError);
}

TEST_CASE("pw2 decomposition agrees with brute subset search on all 9-gon triangulations") {
    const int m = 9;
    auto chords = triangulate_range(0, m - 1);
    // close the polygon: range triangulation covers the fan over edge (0, m-1)
    int without = 0;
    for (const auto& ch : chords) {
        EdgeList e;
        for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
        e.insert(e.end(), ch.begin(), ch.end());
        PatternGraph g(m, e);
        REQUIRE(g.edge_count() == 2 * m - 3);
        REQUIRE(g.recognize().count(GraphClass::OuterplanarTriangulation));
        auto d = pw2_decompose(g);
        bool brute = brute_two_path_split(g);
        CHECK(d.has_value() == brute);
        if (d) {
            // re-validate the returned split
            std::uint64_t umask = 0;
            for (int v : d->path_u) umask |= std::uint64_t{1} << v;
            std::uint64_t all = (std::uint64_t{1} << m) - 1;
            CHECK(mask_induces_path(g, umask));
            CHECK(mask_induces_path(g, all & ~umask));
            CHECK(d->m1 + d->m2 == m);
        } else {
            ++without;
        }
    }
    // Some 9-gon triangulation needs three paths (higher pathwidth).
    CHECK(without > 0);
}

TEST_CASE("caterpillar augmentation produces a containing pw2 triangulation") {
    auto check_aug = [](const PatternGraph& cat_graph) {
        auto cs = caterpillar_structure(cat_graph);
        PatternGraph aug = augment_caterpillar_to_pw2(cs);
        CHECK(aug.n() == cat_graph.n());
        CHECK(aug.edge_count() == 2 * aug.n() - 3);
        CHECK(is_subgraph(cat_graph, aug));
        auto tags = aug.recognize();
        CHECK(tags.count(GraphClass::OuterplanarTriangulation));
        CHECK(tags.count(GraphClass::PW2Triangulation));
    };
    check_aug(PatternGraph::path(3));   // becomes a triangle
    check_aug(PatternGraph::star(4));   // becomes a 4-fan
    check_aug(PatternGraph::path(5));   // zig-zag triangulated 5-cycle
    check_aug(PatternGraph::star(7));
    check_aug(PatternGraph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}}));
    check_aug(PatternGraph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}}));
    CHECK(augment_caterpillar_to_pw2(caterpillar_structure(PatternGraph::path(3))).edge_count() == 3);
    CHECK_THROWS_AS(augment_caterpillar_to_pw2(caterpillar_structure(PatternGraph::path(2))),
                    GraphError);
}

TEST_CASE("tree enumeration counts match the Pruefer oracle") {
    const int expected[] = {0, 1, 1, 1, 2, 3, 6, 11};
    for (int n = 1; n <= 7; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(static_cast<int>(trees.size()) == expected[n]);
        if (n >= 3) CHECK(pruefer_tree_count(n) == expected[n]);
        std::set<std::uint64_t> canon;
        for (const auto& t : trees) {
            CHECK(t.n() == n);
            CHECK(t.edge_count() == n - 1);
            CHECK(t.connected());
            if (n <= 7) canon.insert(perm_canonical(n, edge_mask(n, t.edges())));
        }
        // pairwise non-isomorphic
        if (n <= 7) CHECK(static_cast<int>(canon.size()) == static_cast<int>(trees.size()));
    }
    CHECK(enumerate_trees(10).size() == 106);
}

TEST_CASE("rooted trees report heights and subtrees") {
    auto p5 = PatternGraph::path(5);
    auto r = RootedTree::rooted_at(p5, 0);
    CHECK(r.height == 4);
    CHECK(r.parent[0] == -1);
    CHECK(r.subtree_size(2) == 3);
    CHECK(r.subtree_height(2) == 2);

    auto c = RootedTree::rooted_at_center(p5);
    CHECK(c.root == 2);
    CHECK(c.height == 2);

    auto star = RootedTree::rooted_at_center(PatternGraph::star(6));
    CHECK(star.root == 0);
    CHECK(star.height == 1);
    CHECK(star.kids[0].size() == 5);
    CHECK(star.subtree_size(0) == 6);
}
