#include "ramsey/graphs.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>

namespace ramsey {

namespace {

// Chords (a,b) and (c,d) on a circle of `n` positions interleave iff exactly
// one of c,d lies strictly inside the arc from a to b.
bool interleave(int a, int b, int c, int d, int n) {
    auto inside = [&](int x) {
        int xa = ((x - a) % n + n) % n;
        int ba = ((b - a) % n + n) % n;
        return 0 < xa && xa < ba;
    };
    return inside(c) != inside(d);
}

}  // namespace

PatternGraph::PatternGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), adj_(static_cast<size_t>(std::max(n, 0)), 0) {
    if (n < 1 || n > 64) throw GraphError("PatternGraph: need 1 <= n <= 64");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("loops are not allowed");
        if (has_edge(u, v)) throw GraphError("parallel edge");
        if (u > v) std::swap(u, v);
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

PatternGraph PatternGraph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return PatternGraph(n, std::move(e));
}

PatternGraph PatternGraph::cycle(int n) {
    if (n < 3) throw GraphError("cycle needs n >= 3");
    auto g = path(n).edges();
    g.emplace_back(0, n - 1);
    return PatternGraph(n, std::move(g));
}

PatternGraph PatternGraph::star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return PatternGraph(n, std::move(e));
}

PatternGraph PatternGraph::fan(int n) {
    if (n < 3) throw GraphError("fan needs n >= 3");
    auto e = cycle(n).edges();
    for (int i = 2; i + 1 < n; ++i) e.emplace_back(0, i);
    return PatternGraph(n, std::move(e));
}

PatternGraph PatternGraph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return PatternGraph(n, std::move(e));
}

int PatternGraph::degree(int v) const { return std::popcount(adj_[v]); }

bool PatternGraph::connected() const {
    std::uint64_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        std::uint64_t nb = adj_[v] & ~seen;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            seen |= std::uint64_t{1} << u;
            stack.push_back(u);
        }
    }
    return std::popcount(seen) == n_;
}

namespace {

struct LayoutSearch {
    const PatternGraph& g;
    int n;
    bool need_hamilton;
    std::vector<int> pos_of;   // vertex -> position, -1 if unplaced
    std::vector<int> vertex_at;

    LayoutSearch(const PatternGraph& g, bool ham)
        : g(g), n(g.n()), need_hamilton(ham), pos_of(g.n(), -1), vertex_at(g.n(), -1) {}

    bool chords_ok(int v, int k) const {
        // Check every edge from v to an already placed vertex against every
        // fully placed edge for circular interleaving.
        for (int u = 0; u < n; ++u) {
            if (pos_of[u] < 0 || !g.has_edge(v, u)) continue;
            for (auto [a, b] : g.edges()) {
                if (a == v || b == v || a == u || b == u) continue;
                if (pos_of[a] < 0 || pos_of[b] < 0) continue;
                if (interleave(pos_of[a], pos_of[b], pos_of[u], k, n)) return false;
            }
        }
        return true;
    }

    bool extend(int k) {
        if (k == n) {
            if (need_hamilton && !g.has_edge(vertex_at[n - 1], vertex_at[0])) return false;
            return true;
        }
        for (int v = (k == 0 ? 0 : 1); v < n; ++v) {
            if (pos_of[v] >= 0) continue;
            if (k == 0 && v != 0) break;  // fix vertex 0 first: rotation symmetry
            if (need_hamilton && k > 0 && !g.has_edge(vertex_at[k - 1], v)) continue;
            if (!chords_ok(v, k)) continue;
            pos_of[v] = k;
            vertex_at[k] = v;
            if (extend(k + 1)) return true;
            pos_of[v] = -1;
            vertex_at[k] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> PatternGraph::hamiltonian_outer_cycle() const {
    if (n_ < 3 || !connected()) return std::nullopt;
    if (edge_count() > 2 * n_ - 3) return std::nullopt;
    LayoutSearch s(*this, true);
    if (!s.extend(0)) return std::nullopt;
    return s.vertex_at;
}

std::optional<std::vector<int>> PatternGraph::outerplanar_layout() const {
    if (edge_count() > std::max(2 * n_ - 3, 0)) return std::nullopt;
    LayoutSearch s(*this, false);
    if (!s.extend(0)) return std::nullopt;
    return s.vertex_at;
}

std::set<GraphClass> PatternGraph::recognize() const {
    std::set<GraphClass> tags;
    const bool tree = connected() && edge_count() == n_ - 1;
    if (tree) {
        tags.insert(GraphClass::Tree);
        int big = 0, maxdeg = 0;
        for (int v = 0; v < n_; ++v) {
            maxdeg = std::max(maxdeg, degree(v));
            if (degree(v) > 1) ++big;
        }
        if (maxdeg <= 2) tags.insert(GraphClass::Path);
        if (big <= 1) tags.insert(GraphClass::Star);
        // Caterpillar: the non-leaf vertices induce a path.
        std::vector<int> spine;
        for (int v = 0; v < n_; ++v)
            if (degree(v) >= 2) spine.push_back(v);
        bool cat = true;
        for (int v : spine) {
            int d = 0;
            for (int u : spine)
                if (u != v && has_edge(u, v)) ++d;
            if (d > 2) cat = false;
        }
        if (cat && !spine.empty()) {
            // connectivity of the spine follows from being a subtree of a tree
            // once degrees are <= 2, except when the spine is disconnected.
            int spine_edges = 0;
            for (size_t i = 0; i < spine.size(); ++i)
                for (size_t j = i + 1; j < spine.size(); ++j)
                    if (has_edge(spine[i], spine[j])) ++spine_edges;
            cat = spine_edges == static_cast<int>(spine.size()) - 1;
        }
        if (cat) tags.insert(GraphClass::Caterpillar);
    }
    if (outerplanar_layout()) tags.insert(GraphClass::Outerplanar);
    if (tags.count(GraphClass::Outerplanar) && hamiltonian_outer_cycle()) {
        tags.insert(GraphClass::HamiltonianOuterplanar);
        if (edge_count() == 2 * n_ - 3) {
            tags.insert(GraphClass::OuterplanarTriangulation);
            if (pw2_decompose(*this)) tags.insert(GraphClass::PW2Triangulation);
        }
    }
    return tags;
}

namespace {

std::vector<int> bfs_component(const PatternGraph& g, std::uint64_t mask, int start) {
    std::vector<int> order{start};
    std::uint64_t seen = std::uint64_t{1} << start;
    for (size_t i = 0; i < order.size(); ++i) {
        std::uint64_t nb = g.neighbors(order[i]) & mask & ~seen;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            seen |= std::uint64_t{1} << u;
            order.push_back(u);
        }
    }
    return order;
}

// Order of an induced path on the vertices of `mask`, or nullopt.
std::optional<std::vector<int>> induced_path_order(const PatternGraph& g, std::uint64_t mask) {
    if (mask == 0) return std::nullopt;
    std::vector<int> verts;
    for (int v = 0; v < g.n(); ++v)
        if ((mask >> v) & 1) verts.push_back(v);
    int edges = 0;
    int end = -1;
    for (int v : verts) {
        int d = std::popcount(g.neighbors(v) & mask);
        if (d > 2) return std::nullopt;
        if (d <= 1 && end < 0) end = v;
        edges += d;
    }
    edges /= 2;
    if (edges != static_cast<int>(verts.size()) - 1) return std::nullopt;
    if (bfs_component(g, mask, verts[0]).size() != verts.size()) return std::nullopt;
    std::vector<int> order;
    std::uint64_t used = 0;
    int cur = end;
    while (cur >= 0) {
        order.push_back(cur);
        used |= std::uint64_t{1} << cur;
        std::uint64_t nb = g.neighbors(cur) & mask & ~used;
        cur = nb ? std::countr_zero(nb) : -1;
    }
    if (order.size() != verts.size()) return std::nullopt;
    return order;
}

}  // namespace

CaterpillarStructure caterpillar_structure(const PatternGraph& g) {
    auto tags = g.recognize();
    if (!tags.count(GraphClass::Caterpillar)) throw GraphError("not a caterpillar");
    CaterpillarStructure cs{g, {}, {}, 0, 0, {}, {}, 0, 0};
    std::vector<int> spine;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 2) spine.push_back(v);
    if (spine.empty()) spine.push_back(0);  // K_1, K_2: pick a one-vertex spine
    // Walk the spine from an end.
    std::uint64_t smask = 0;
    for (int v : spine) smask |= std::uint64_t{1} << v;
    auto order = induced_path_order(g, smask);
    if (!order) throw GraphError("spine is not a path");
    cs.spine = *order;
    cs.spine_length = static_cast<int>(cs.spine.size());
    for (int v : cs.spine) {
        cs.leaf_map[v] = {};
        std::uint64_t nb = g.neighbors(v) & ~smask;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            cs.leaf_map[v].push_back(u);
        }
    }
    for (int v = 0; v < g.n(); ++v) cs.max_degree = std::max(cs.max_degree, g.degree(v));
    // Unique bipartition by BFS parity; class1 holds vertex 0.
    std::vector<int> color(g.n(), -1);
    color[0] = 0;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        std::uint64_t nb = g.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[u] < 0) {
                color[u] = 1 - color[v];
                q.push(u);
            }
        }
    }
    for (int v = 0; v < g.n(); ++v)
        (color[v] == 0 ? cs.class1 : cs.class2).push_back(v);
    cs.m1 = static_cast<int>(cs.class1.size());
    cs.m2 = static_cast<int>(cs.class2.size());
    return cs;
}

std::optional<PW2Decomposition> pw2_decompose(const PatternGraph& g) {
    // Checked directly (not via recognize, which itself calls this).
    if (g.edge_count() != 2 * g.n() - 3 || !g.hamiltonian_outer_cycle())
        throw GraphError("pw2_decompose expects an outerplanar triangulation");
    if (g.n() > 32) throw GraphError("pw2_decompose: desk scale is n <= 32");
    const std::uint64_t all = (g.n() == 64) ? ~std::uint64_t{0}
                                            : ((std::uint64_t{1} << g.n()) - 1);
    // Enumerate induced paths by DFS extension; candidates for U.
    std::set<std::uint64_t> seen;
    std::vector<std::pair<int, std::uint64_t>> candidates;  // (|U|, mask)
    std::vector<int> seq;
    auto consider = [&](std::uint64_t mask) {
        if (mask == all) return;
        if (!seen.insert(mask).second) return;
        candidates.emplace_back(std::popcount(mask), mask);
    };
    std::function<void(std::uint64_t)> grow = [&](std::uint64_t mask) {
        consider(mask);
        int last = seq.back();
        std::uint64_t nb = g.neighbors(last) & ~mask;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            // extension must stay induced: u adjacent only to the last vertex
            if (g.neighbors(u) & mask & ~(std::uint64_t{1} << last)) continue;
            seq.push_back(u);
            grow(mask | (std::uint64_t{1} << u));
            seq.pop_back();
        }
    };
    for (int v = 0; v < g.n(); ++v) {
        seq = {v};
        grow(std::uint64_t{1} << v);
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto [sz, mask] : candidates) {
        auto rest = induced_path_order(g, all & ~mask);
        if (!rest) continue;
        auto u_path = induced_path_order(g, mask);
        PW2Decomposition d{g, *u_path, *rest, sz, g.n() - sz};
        return d;
    }
    return std::nullopt;
}

PatternGraph augment_caterpillar_to_pw2(const CaterpillarStructure& cat) {
    const int n = cat.n();
    if (n < 3) throw GraphError("augmentation needs at least 3 vertices");
    // Traversal order: each spine vertex followed by its leaves. Projecting
    // onto the two bipartition classes gives two paths whose staircase of
    // caterpillar edges triangulates the strip between them.
    std::vector<int> time_order;
    for (int v : cat.spine) {
        time_order.push_back(v);
        auto it = cat.leaf_map.find(v);
        for (int leaf : it->second) time_order.push_back(leaf);
    }
    std::vector<char> cls(n, 0);
    for (int v : cat.class2) cls[v] = 1;
    std::vector<int> top, bottom;
    for (int v : time_order) (cls[v] == cls[time_order[0]] ? top : bottom).push_back(v);
    std::vector<std::pair<int, int>> edges = cat.graph.edges();
    for (size_t i = 0; i + 1 < top.size(); ++i)
        if (!cat.graph.has_edge(top[i], top[i + 1])) edges.emplace_back(top[i], top[i + 1]);
    for (size_t i = 0; i + 1 < bottom.size(); ++i)
        if (!cat.graph.has_edge(bottom[i], bottom[i + 1]))
            edges.emplace_back(bottom[i], bottom[i + 1]);
    return PatternGraph(n, std::move(edges));
}

namespace {

std::vector<int> tree_centers(const PatternGraph& g) {
    int n = g.n();
    std::vector<int> deg(n), alive;
    std::vector<char> removed(n, 0);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) frontier.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            removed[v] = 1;
            --remaining;
            std::uint64_t nb = g.neighbors(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (!removed[u] && --deg[u] == 1) next.push_back(u);
            }
        }
        frontier = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

std::string ahu_string(const PatternGraph& g, int v, int parent) {
    std::vector<std::string> kids;
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (u != parent) kids.push_back(ahu_string(g, u, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    return s;
}

std::string tree_canonical(const PatternGraph& g) {
    auto centers = tree_centers(g);
    std::string best;
    for (int c : centers) {
        std::string s = ahu_string(g, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

std::vector<PatternGraph> enumerate_trees(int n) {
    if (n < 1 || n > 12) throw GraphError("enumerate_trees: 1 <= n <= 12");
    std::vector<PatternGraph> cur{PatternGraph(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, PatternGraph> next;
        for (const auto& t : cur) {
            for (int v = 0; v < t.n(); ++v) {
                auto e = t.edges();
                e.emplace_back(v, k - 1);
                PatternGraph bigger(k, std::move(e));
                next.emplace(tree_canonical(bigger), bigger);
            }
        }
        cur.clear();
        for (auto& [key, t] : next) cur.push_back(std::move(t));
    }
    return cur;
}

RootedTree RootedTree::rooted_at(const PatternGraph& tree, int root) {
    RootedTree rt{tree, root, 0, std::vector<int>(tree.n(), -1),
                  std::vector<std::vector<int>>(tree.n())};
    std::vector<int> depth(tree.n(), -1);
    depth[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        rt.height = std::max(rt.height, depth[v]);
        std::uint64_t nb = tree.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (depth[u] < 0) {
                depth[u] = depth[v] + 1;
                rt.parent[u] = v;
                rt.kids[v].push_back(u);
                q.push(u);
            }
        }
    }
    return rt;
}

RootedTree RootedTree::rooted_at_center(const PatternGraph& tree) {
    auto centers = tree_centers(tree);
    RootedTree best = rooted_at(tree, centers[0]);
    for (size_t i = 1; i < centers.size(); ++i) {
        RootedTree cand = rooted_at(tree, centers[i]);
        if (cand.height < best.height) best = std::move(cand);
    }
    return best;
}

std::vector<int> RootedTree::subtree_vertices(int v) const {
    std::vector<int> out{v};
    for (size_t i = 0; i < out.size(); ++i)
        for (int k : kids[out[i]]) out.push_back(k);
    return out;
}

int RootedTree::subtree_size(int v) const {
    return static_cast<int>(subtree_vertices(v).size());
}

int RootedTree::subtree_height(int v) const {
    int h = 0;
    for (int k : kids[v]) h = std::max(h, 1 + subtree_height(k));
    return h;
}

}  // namespace ramsey
