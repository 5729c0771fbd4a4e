#include "ramsey/embedders.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace ramsey {

namespace {

std::vector<int> sorted_by_y_desc(const ColoredKP& kp, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return kp.points()[a].y > kp.points()[b].y;
    });
    return ids;
}

std::vector<int> sorted_by_x_asc(const ColoredKP& kp, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return kp.points()[a].x < kp.points()[b].x;
    });
    return ids;
}

int max_y_point(const ColoredKP& kp, const std::vector<int>& ids) {
    int best = ids.front();
    for (int id : ids)
        if (kp.points()[id].y > kp.points()[best].y) best = id;
    return best;
}

std::vector<int> all_points(const ColoredKP& kp) {
    std::vector<int> ids(kp.size());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

void validate_or_throw(const ColoredKP& kp, const Embedding& e, const std::string& what) {
    auto rep = validate(kp, e);
    if (!rep.ok)
        throw InternalError(what + ": assembled embedding failed validation: " +
                            rep.violations.front());
}

Certificate wrap(const ColoredKP& kp, Embedding e, std::string params) {
    return Certificate{std::move(e), Fingerprint{kp.coloring_hash(), 0, std::move(params)}};
}

// Pattern subgraph induced on `verts` with vertices relabelled 0..k-1;
// orig[i] is the source vertex of new vertex i.
struct SubPattern {
    PatternGraph g;
    std::vector<int> orig;
    int root;  // relabelled root
};

SubPattern induced_subpattern(const PatternGraph& t, const std::vector<int>& verts,
                              int root) {
    std::vector<int> index(t.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return SubPattern{PatternGraph(static_cast<int>(verts.size()), std::move(edges)),
                      verts, index[root]};
}

using Segment = std::pair<int, int>;  // point ids

bool crosses_any(const ColoredKP& kp, const Segment& s, const std::vector<Segment>& drawn) {
    const Point& a = kp.points()[s.first];
    const Point& b = kp.points()[s.second];
    for (const auto& d : drawn)
        if (segments_cross(a, b, kp.points()[d.first], kp.points()[d.second])) return true;
    return false;
}

std::vector<Segment> embedding_segments(const Embedding& e) {
    std::vector<Segment> out;
    for (auto [u, v] : e.pattern.edges()) out.emplace_back(e.map[u], e.map[v]);
    return out;
}

// Ids sorted by the angle around a pivot point outside their hull. Falls
// back to the input order when the pivot is ambiguous; every caller
// validates the assembled embedding anyway.
std::vector<int> angular_from(const ColoredKP& kp, int pivot, const std::vector<int>& ids) {
    if (ids.size() <= 1) return ids;
    std::vector<int> group = ids;
    group.push_back(pivot);
    try {
        PointSet sub = subset_points(kp.points(), group);
        auto order = angular_order(sub, static_cast<int>(group.size()) - 1);
        std::vector<int> out;
        for (int local : order) out.push_back(group[local]);
        return out;
    } catch (const GeomError&) {
        return ids;
    }
}

// Maximal outerplanar supergraph sharing an outerplanar layout with g.
PatternGraph maximal_outerplanar_supergraph(const PatternGraph& g,
                                            const std::vector<int>& layout) {
    const int n = g.n();
    if (n < 3) return g;
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[layout[k]] = k;
    auto arc_inside = [&](int x, int a, int b) {
        int xa = ((x - a) % n + n) % n;
        int ba = ((b - a) % n + n) % n;
        return 0 < xa && xa < ba;
    };
    std::vector<std::pair<int, int>> chords;  // position pairs
    std::vector<std::pair<int, int>> edges = g.edges();
    auto circ_dist = [&](int a, int b) {
        int d = std::abs(a - b);
        return std::min(d, n - d);
    };
    for (auto [u, v] : edges)
        if (circ_dist(pos[u], pos[v]) > 1) chords.emplace_back(pos[u], pos[v]);
    auto has = [&](int u, int v) {
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };
    // Close the outer cycle, then add non-interleaving chords until the
    // graph is a triangulated polygon (2n-3 edges).
    for (int k = 0; k < n; ++k) {
        int u = layout[k], v = layout[(k + 1) % n];
        if (!has(u, v)) edges.emplace_back(u, v);
    }
    for (int a = 0; a < n && static_cast<int>(edges.size()) < 2 * n - 3; ++a)
        for (int b = a + 2; b < n && static_cast<int>(edges.size()) < 2 * n - 3; ++b) {
            if (a == 0 && b == n - 1) continue;
            int u = layout[a], v = layout[b];
            if (has(u, v)) continue;
            bool ok = true;
            for (auto [c, d] : chords)
                if (arc_inside(c, a, b) != arc_inside(d, a, b)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            edges.emplace_back(u, v);
            chords.emplace_back(a, b);
        }
    return PatternGraph(n, std::move(edges));
}

// Blue witness: non-crossing copy of the host graph on m pairwise-Blue points.
Embedding embed_blue_host(const ColoredKP& kp, const PatternGraph& h,
                          const std::vector<int>& pts) {
    PointSet sub = subset_points(kp.points(), pts);
    Embedding local = embed_outerplanar(h, sub, std::nullopt);
    Embedding e{h, {}, EdgeColor::Blue, {}};
    for (int v = 0; v < h.n(); ++v) e.map.push_back(pts[local.map[v]]);
    validate_or_throw(kp, e, "host embedding on a Blue clique");
    return e;
}

// Red witness on pairwise-Red points, rooted at the max-y point (y-extreme).
Embedding embed_red_tree_extreme(const ColoredKP& kp, const PatternGraph& tree, int root,
                                 const std::vector<int>& pts) {
    PointSet sub = subset_points(kp.points(), pts);
    int top_local = 0;
    for (int i = 1; i < sub.size(); ++i)
        if (sub[i].y > sub[top_local].y) top_local = i;
    Embedding local = embed_outerplanar(tree, sub, Anchor{root, top_local});
    Embedding e{tree, {}, EdgeColor::Red, ExtremalConstraint{ExtremalAxis::MaxY, root}};
    for (int v = 0; v < tree.n(); ++v) e.map.push_back(pts[local.map[v]]);
    validate_or_throw(kp, e, "tree embedding on a Red clique");
    return e;
}

void check_host(const PatternGraph& h) {
    if (h.n() >= 3 && !h.recognize().count(GraphClass::HamiltonianOuterplanar))
        throw GraphError("host graph must be Hamiltonian outerplanar");
    if (h.n() == 2 && h.edge_count() != 1)
        throw GraphError("host graph on two vertices must be a single edge");
}

}  // namespace

bool mutually_avoiding(const PointSet& ps, const std::vector<int>& a,
                       const std::vector<int>& b) {
    auto one_sided = [&](const std::vector<int>& pairs_of, const std::vector<int>& hull_of) {
        for (size_t i = 0; i < pairs_of.size(); ++i)
            for (size_t j = i + 1; j < pairs_of.size(); ++j) {
                const Point& p = ps[pairs_of[i]];
                const Point& q = ps[pairs_of[j]];
                Orient want = Orient::Collinear;
                for (int id : hull_of) {
                    Orient o = orientation(p, q, ps[id]);
                    if (o == Orient::Collinear) return false;
                    if (want == Orient::Collinear) want = o;
                    if (o != want) return false;
                }
            }
        return true;
    };
    return one_sided(a, b) && one_sided(b, a);
}

Embedding embed_outerplanar(const PatternGraph& g, const PointSet& ps,
                            std::optional<Anchor> anchor) {
    if (ps.size() != g.n())
        throw PipelineError("embed_outerplanar: point count must equal the vertex count");
    auto layout = g.outerplanar_layout();
    if (!layout) throw GraphError("embed_outerplanar: graph is not outerplanar");
    if (anchor) {
        if (anchor->vertex < 0 || anchor->vertex >= g.n() || anchor->point < 0 ||
            anchor->point >= ps.size())
            throw PipelineError("embed_outerplanar: anchor out of range");
        auto hull = ps.convex_hull();
        if (std::find(hull.begin(), hull.end(), anchor->point) == hull.end())
            throw PipelineError("embed_outerplanar: anchor point must lie on the hull");
    }
    PatternGraph m = maximal_outerplanar_supergraph(g, *layout);
    ColoredKP kp(ps);
    OracleOptions opts;
    opts.ignore_colors = true;
    if (anchor) opts.pins = {{anchor->vertex, anchor->point}};
    auto e = find_mono_noncrossing(kp, m, EdgeColor::Blue, opts);
    if (!e)
        throw InternalError("embed_outerplanar: no placement found for an outerplanar graph");
    return Embedding{g, e->map, EdgeColor::Blue, {}};
}

EitherStructure min_degree_or_clique(const ColoredKP& kp, const std::vector<int>& points,
                                     int n, int m) {
    if (n < 1 || m < 1) throw PipelineError("min_degree_or_clique: need n,m >= 1");
    const int N = static_cast<int>(points.size());
    if (N < (m - 1) * (n - 1) + 1)
        throw PipelineError("min_degree_or_clique: undersized instance");
    std::vector<int> deg(N, 0);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (kp.is_red(points[i], points[j])) {
                ++deg[i];
                ++deg[j];
            }
    std::vector<char> removed(N, 0);
    std::vector<int> removal;  // peel order
    for (bool progress = true; progress;) {
        progress = false;
        for (int i = 0; i < N; ++i) {
            if (removed[i] || deg[i] >= n - 1) continue;
            removed[i] = 1;
            removal.push_back(i);
            progress = true;
            for (int j = 0; j < N; ++j)
                if (!removed[j] && kp.is_red(points[i], points[j])) --deg[j];
        }
    }
    std::vector<int> alive;
    for (int i = 0; i < N; ++i)
        if (!removed[i]) alive.push_back(points[i]);
    if (!alive.empty()) return MinDegSubgraph{alive, n - 1};
    // The Red graph is (n-2)-degenerate: greedy coloring in reverse peel
    // order needs at most n-1 colors; the largest class is pairwise Blue.
    std::vector<int> color(N, -1);
    for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
        int i = *it;
        std::vector<char> used(n, 0);
        for (int j = 0; j < N; ++j)
            if (color[j] >= 0 && kp.is_red(points[i], points[j])) used[color[j]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[i] = c;
    }
    std::vector<std::vector<int>> classes(n);
    for (int i = 0; i < N; ++i) classes[color[i]].push_back(points[i]);
    auto& best = *std::max_element(classes.begin(), classes.end(),
                                   [](const auto& a, const auto& b) {
                                       return a.size() < b.size();
                                   });
    if (static_cast<int>(best.size()) < m)
        throw InternalError("min_degree_or_clique: pigeonhole failed");
    best.resize(m);
    return BlueClique{best};
}

EitherStructure monotone_path_or_clique(const std::vector<int>& ordered,
                                        const ColoredKP& kp, int n, int m) {
    if (n < 1 || m < 1) throw PipelineError("monotone_path_or_clique: need n,m >= 1");
    const int N = static_cast<int>(ordered.size());
    if (N < (n - 1) * (m - 1) + 1)
        throw PipelineError("monotone_path_or_clique: undersized instance");
    if (n == 1) return RedMonotonePath{{ordered.front()}};
    // label[i]: length of the longest Red order-increasing path ending at i
    std::vector<int> label(N, 1), pred(N, -1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < i; ++j)
            if (kp.is_red(ordered[j], ordered[i]) && label[j] + 1 > label[i]) {
                label[i] = label[j] + 1;
                pred[i] = j;
            }
    for (int i = 0; i < N; ++i)
        if (label[i] >= n) {
            std::vector<int> path;
            int at = i;
            while (static_cast<int>(path.size()) < n) {
                path.push_back(ordered[at]);
                at = pred[at];
            }
            std::reverse(path.begin(), path.end());
            return RedMonotonePath{path};
        }
    // Equal labels are pairwise Blue; some label in 1..n-1 holds m points.
    std::vector<std::vector<int>> classes(n);
    for (int i = 0; i < N; ++i) classes[label[i]].push_back(ordered[i]);
    for (auto& cls : classes)
        if (static_cast<int>(cls.size()) >= m) {
            cls.resize(m);
            return BlueClique{cls};
        }
    throw InternalError("monotone_path_or_clique: pigeonhole failed");
}

Embedding dense_convex_caterpillar(const ColoredKP& kp, const std::vector<int>& subset,
                                   const CaterpillarStructure& t) {
    if (kp.points().position_class() != PositionClass::Convex)
        throw PipelineError("dense_convex_caterpillar: points must be in convex position");
    const int n = t.n();
    long long red = 0;
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (kp.is_red(subset[i], subset[j])) ++red;
    long long threshold = (static_cast<long long>(n - 2) * subset.size()) / 2;
    if (red <= threshold)
        throw PipelineError("dense_convex_caterpillar: Red edge count is not above the "
                            "guaranteed threshold");
    OracleOptions opts;
    opts.allowed_points = subset;
    auto e = find_mono_noncrossing(kp, t.graph, EdgeColor::Red, opts);
    if (!e)
        throw InternalError("dense_convex_caterpillar: no copy despite the edge bound");
    return *e;
}

Certificate convex_caterpillar_vs_ham(const ColoredKP& kp, const CaterpillarStructure& t,
                                      const PatternGraph& h) {
    const int n = t.n(), m = h.n();
    check_host(h);
    if (kp.points().position_class() != PositionClass::Convex)
        throw PipelineError("convex pipeline requires convex position");
    if (kp.size() < (n - 1) * (m - 1) + 1)
        throw PipelineError("undersized: need (n-1)(m-1)+1 points");
    std::string params = "pipeline=convex_caterpillar_vs_ham n=" + std::to_string(n) +
                         " m=" + std::to_string(m);
    if (n == 1) return wrap(kp, Embedding{t.graph, {0}, EdgeColor::Red, {}}, params);
    if (m == 1) return wrap(kp, Embedding{h, {0}, EdgeColor::Blue, {}}, params);
    auto either = min_degree_or_clique(kp, all_points(kp), n, m);
    if (auto* s = std::get_if<MinDegSubgraph>(&either))
        return wrap(kp, dense_convex_caterpillar(kp, s->points, t), params);
    auto& clique = std::get<BlueClique>(either);
    return wrap(kp, embed_blue_host(kp, h, clique.points), params);
}

Certificate general_twostar_vs_ham(const ColoredKP& kp, const CaterpillarStructure& t,
                                   const PatternGraph& h) {
    const int n = t.n(), m = h.n();
    check_host(h);
    if (t.spine_length != 2)
        throw GraphError("general_twostar_vs_ham: tree must have exactly two non-leaf "
                         "vertices");
    if (kp.size() < (n - 1) * (m - 1) + 1)
        throw PipelineError("undersized: need (n-1)(m-1)+1 points");
    std::string params = "pipeline=general_twostar_vs_ham n=" + std::to_string(n) +
                         " m=" + std::to_string(m);
    if (m == 1) return wrap(kp, Embedding{h, {0}, EdgeColor::Blue, {}}, params);
    auto either = min_degree_or_clique(kp, all_points(kp), n, m);
    if (auto* clique = std::get_if<BlueClique>(&either))
        return wrap(kp, embed_blue_host(kp, h, clique->points), params);
    auto& sub = std::get<MinDegSubgraph>(either);
    const std::vector<int>& S = sub.points;
    const int a = t.graph.degree(t.spine[0]);
    const int b = t.graph.degree(t.spine[1]);
    PointSet subset = subset_points(kp.points(), S);
    int u_local = subset.convex_hull().front();
    int u = S[u_local];
    // u's Red neighbours inside S, swept clockwise.
    std::vector<int> red_nbrs;
    for (int local : angular_order(subset, u_local))
        if (kp.is_red(u, S[local])) red_nbrs.push_back(S[local]);
    if (static_cast<int>(red_nbrs.size()) < n - 1)
        throw InternalError("two-star pipeline: min-degree subset lost degrees");
    int v = red_nbrs[a - 1];  // the a-th Red neighbour splits the sweep
    const Point& up = kp.points()[u];
    const Point& vp = kp.points()[v];
    auto side = [&](int id) { return orientation(up, vp, kp.points()[id]); };
    // Points swept before v sit counterclockwise of the line through u,v.
    std::vector<int> u_ccw(red_nbrs.begin(), red_nbrs.begin() + (a - 1));
    std::vector<int> v_red_cw, v_red_ccw;
    for (int w : S) {
        if (w == u || w == v || !kp.is_red(v, w)) continue;
        (side(w) == Orient::CW ? v_red_cw : v_red_ccw).push_back(w);
    }
    std::vector<int> map(t.graph.n(), -1);
    auto assign = [&](int spine_first, int p_first, const std::vector<int>& leaves_first,
                      int spine_second, int p_second,
                      const std::vector<int>& leaves_second) {
        map[spine_first] = p_first;
        map[spine_second] = p_second;
        auto place_leaves = [&](int sv, const std::vector<int>& pool) {
            size_t at = 0;
            std::uint64_t nb = t.graph.neighbors(sv);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (w == t.spine[0] || w == t.spine[1]) continue;
                map[w] = pool[at++];
            }
        };
        place_leaves(spine_first, leaves_first);
        place_leaves(spine_second, leaves_second);
    };
    if (static_cast<int>(v_red_cw.size()) >= b - 1) {
        // fans on opposite sides of the line through u,v cannot cross
        v_red_cw.resize(b - 1);
        assign(t.spine[0], u, u_ccw, t.spine[1], v, v_red_cw);
    } else {
        // then v has at least a-1 Red neighbours counterclockwise; u keeps
        // b-1 clockwise ones, swept after v
        std::vector<int> u_cw(red_nbrs.begin() + a, red_nbrs.begin() + a + (b - 1));
        v_red_ccw.resize(a - 1);
        assign(t.spine[0], v, v_red_ccw, t.spine[1], u, u_cw);
    }
    Embedding e{t.graph, map, EdgeColor::Red, {}};
    validate_or_throw(kp, e, "two-star assembly");
    return wrap(kp, e, params);
}

namespace {

struct StripStar {
    int center = -1;
    std::vector<int> pool;  // Red neighbours of the centre inside the strip
};

// Caterpillar from a Red monotone path of strip centres plus per-centre
// fans. Star edges stay inside their strip and spine edges only touch strip
// centres, so x-separation of the strips rules out crossings.
Embedding assemble_caterpillar(const CaterpillarStructure& t, const std::vector<int>& path,
                               const std::map<int, StripStar>& stars, EdgeColor color) {
    std::vector<int> map(t.n(), -1);
    for (size_t j = 0; j < t.spine.size(); ++j) {
        int center = path[j];
        map[t.spine[j]] = center;
        const auto& pool = stars.at(center).pool;
        const auto& leaves = t.leaf_map.at(t.spine[j]);
        if (leaves.size() > pool.size())
            throw InternalError("caterpillar assembly: fan pool too small");
        for (size_t q = 0; q < leaves.size(); ++q) map[leaves[q]] = pool[q];
    }
    return Embedding{t.graph, map, color, {}};
}

}  // namespace

Certificate general_caterpillar_vs_ham(const ColoredKP& kp, const CaterpillarStructure& t,
                                       const PatternGraph& h) {
    const int n = t.n(), m = h.n();
    const int delta = t.max_degree, gamma = t.spine_length;
    check_host(h);
    std::string params = "pipeline=general_caterpillar_vs_ham n=" + std::to_string(n) +
                         " m=" + std::to_string(m);
    if (n == 1) return wrap(kp, Embedding{t.graph, {0}, EdgeColor::Red, {}}, params);
    if (m == 1) return wrap(kp, Embedding{h, {0}, EdgeColor::Blue, {}}, params);
    if (kp.size() < delta * gamma * m * m)
        throw PipelineError("undersized: need Delta*gamma*m^2 points");
    if (m == 2) {
        for (int j = 0; j < kp.size(); ++j)
            for (int i = 0; i < j; ++i)
                if (!kp.is_red(i, j))
                    return wrap(kp, Embedding{h, {i, j}, EdgeColor::Blue, {}}, params);
        // everything Red: the caterpillar embeds directly
        std::vector<int> pts(n);
        std::iota(pts.begin(), pts.end(), 0);
        Embedding e = embed_red_tree_extreme(kp, t.graph, t.spine[0], pts);
        e.extremal.reset();
        return wrap(kp, e, params);
    }
    auto strips = strip_partition(kp.points(), std::vector<int>(gamma * m, delta * m));
    std::vector<int> centers;
    std::map<int, StripStar> stars;
    for (const auto& strip : strips) {
        // Delta+1 (not Delta): a surviving centre then has Delta usable
        // leaves in its pool, enough for the widest fan.
        auto either = min_degree_or_clique(kp, strip, delta + 1, m);
        if (auto* clique = std::get_if<BlueClique>(&either))
            return wrap(kp, embed_blue_host(kp, h, clique->points), params);
        auto& sub = std::get<MinDegSubgraph>(either);
        StripStar star;
        star.center = sub.points.front();
        for (int w : sub.points)
            if (w != star.center && kp.is_red(star.center, w)) star.pool.push_back(w);
        centers.push_back(star.center);
        stars[star.center] = std::move(star);
    }
    auto either = monotone_path_or_clique(centers, kp, gamma, m);
    if (auto* clique = std::get_if<BlueClique>(&either))
        return wrap(kp, embed_blue_host(kp, h, clique->points), params);
    auto& path = std::get<RedMonotonePath>(either);
    Embedding e = assemble_caterpillar(t, path.points, stars, EdgeColor::Red);
    validate_or_throw(kp, e, "strip caterpillar assembly");
    return wrap(kp, e, params);
}

Embedding selframsey_caterpillar(const ColoredKP& kp, const CaterpillarStructure& t) {
    const int n = t.n();
    const int delta = t.max_degree, gamma = t.spine_length;
    if (n == 1) return Embedding{t.graph, {0}, EdgeColor::Red, {}};
    if (kp.size() < 4 * delta * gamma * n)
        throw PipelineError("undersized: need 4*Delta*gamma*n points");

    // One colour's view: a strip carries a star centre when some point has
    // Delta Red in-strip edges; a majority of such strips yields a Red spine
    // through the centres or a Blue clique hosting the caterpillar.
    auto attempt = [&](const ColoredKP& k) -> std::optional<Embedding> {
        auto strips = strip_partition(k.points(), std::vector<int>(2 * gamma * n, 2 * delta));
        std::vector<int> centers;
        std::map<int, StripStar> stars;
        for (const auto& strip : strips) {
            StripStar star;
            for (int cand : strip) {
                std::vector<int> pool;
                for (int w : strip)
                    if (w != cand && k.is_red(cand, w)) pool.push_back(w);
                if (static_cast<int>(pool.size()) >= delta) {
                    star.center = cand;
                    star.pool = std::move(pool);
                    break;
                }
            }
            if (star.center < 0) continue;
            centers.push_back(star.center);
            stars[star.center] = std::move(star);
        }
        if (static_cast<int>(centers.size()) < gamma * n) return std::nullopt;
        centers.resize(gamma * n);
        auto either = monotone_path_or_clique(centers, k, gamma, n);
        if (auto* clique = std::get_if<BlueClique>(&either)) {
            PointSet sub = subset_points(k.points(), clique->points);
            Embedding local = embed_outerplanar(t.graph, sub, std::nullopt);
            Embedding e{t.graph, {}, EdgeColor::Blue, {}};
            for (int v = 0; v < t.n(); ++v) e.map.push_back(clique->points[local.map[v]]);
            return e;
        }
        auto& path = std::get<RedMonotonePath>(either);
        return assemble_caterpillar(t, path.points, stars, EdgeColor::Red);
    };

    std::optional<Embedding> e = attempt(kp);
    if (!e) {
        // fewer than gamma*n Red-dense strips means every point of every
        // other strip has Delta Blue in-strip edges, so the swapped coloring
        // reaches the majority
        e = attempt(kp.swapped());
        if (!e)
            throw InternalError("selframsey_caterpillar: neither colour reached a "
                                "majority of strips");
        e->color = other(e->color);
    }
    validate_or_throw(kp, *e, "selframsey caterpillar");
    return *e;
}

AvoidingPair extract_avoiding(const PointSet& ps, const std::vector<int>& a,
                              const std::vector<int>& b, int target_a, int target_b) {
    if (a.size() < 2 || b.size() < 2)
        throw PipelineError("extract_avoiding: both sides need at least two points");
    auto minmax_on = [&](const std::vector<int>& ids, bool on_x) {
        Coord lo = on_x ? ps[ids[0]].x : ps[ids[0]].y, hi = lo;
        for (int id : ids) {
            Coord v = on_x ? ps[id].x : ps[id].y;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::pair<Coord, Coord>{lo, hi};
    };
    bool separated = false;
    for (bool on_x : {true, false}) {
        auto [alo, ahi] = minmax_on(a, on_x);
        auto [blo, bhi] = minmax_on(b, on_x);
        if (ahi < blo || bhi < alo) separated = true;
    }
    if (!separated)
        throw PipelineError("extract_avoiding: sets are not separated by an "
                            "axis-parallel line");
    target_a = std::max(target_a, 2);
    target_b = std::max(target_b, 2);

    AvoidingPair best;
    auto score = [&](const AvoidingPair& p) {
        return std::min<int>(p.a.size(), target_a) + std::min<int>(p.b.size(), target_b);
    };
    auto grow = [&](AvoidingPair cur) {
        for (bool progress = true; progress;) {
            progress = false;
            bool a_turn = (static_cast<int>(cur.a.size()) - target_a) <=
                          (static_cast<int>(cur.b.size()) - target_b);
            for (bool turn : {a_turn, !a_turn}) {
                auto& side = turn ? cur.a : cur.b;
                const auto& from = turn ? a : b;
                if (static_cast<int>(side.size()) >= (turn ? target_a : target_b)) continue;
                for (int cand : from) {
                    if (std::find(side.begin(), side.end(), cand) != side.end()) continue;
                    side.push_back(cand);
                    if (mutually_avoiding(ps, cur.a, cur.b)) {
                        progress = true;
                        break;
                    }
                    side.pop_back();
                }
                if (progress) break;
            }
        }
        if (score(cur) > score(best) ||
            (score(cur) == score(best) &&
             cur.a.size() + cur.b.size() > best.a.size() + best.b.size()))
            best = std::move(cur);
    };

    int extended = 0;
    for (size_t i = 0; i < a.size() && extended < 500; ++i)
        for (size_t j = i + 1; j < a.size() && extended < 500; ++j)
            for (size_t k = 0; k < b.size() && extended < 500; ++k)
                for (size_t l = k + 1; l < b.size() && extended < 500; ++l) {
                    AvoidingPair seed{{a[i], a[j]}, {b[k], b[l]}};
                    if (!mutually_avoiding(ps, seed.a, seed.b)) continue;
                    ++extended;
                    grow(std::move(seed));
                    if (static_cast<int>(best.a.size()) >= target_a &&
                        static_cast<int>(best.b.size()) >= target_b)
                        return best;
                }
    return best;
}

Embedding embed_in_avoiding(const ColoredKP& kp, const CaterpillarStructure& t,
                            const AvoidingPair& pair, EdgeColor color) {
    // Traversal order (each spine vertex followed by its leaves) projected
    // onto the two bipartition classes gives a monotone staircase of edges.
    std::vector<char> in_class2(t.n(), 0);
    for (int v : t.class2) in_class2[v] = 1;
    std::vector<int> seq1, seq2;
    for (int v : t.spine) {
        (in_class2[v] ? seq2 : seq1).push_back(v);
        for (int leaf : t.leaf_map.at(v)) (in_class2[leaf] ? seq2 : seq1).push_back(leaf);
    }
    auto orderA = pair.a.size() > 1 ? angular_from(kp, pair.b.front(), pair.a) : pair.a;
    auto orderB = pair.b.size() > 1 ? angular_from(kp, pair.a.front(), pair.b) : pair.b;
    for (int swap_sides = 0; swap_sides < 2; ++swap_sides) {
        const auto& sa = swap_sides ? seq2 : seq1;
        const auto& sb = swap_sides ? seq1 : seq2;
        if (sa.size() != orderA.size() || sb.size() != orderB.size()) continue;
        for (int ra = 0; ra < 2; ++ra)
            for (int rb = 0; rb < 2; ++rb) {
                std::vector<int> oa = orderA, ob = orderB;
                if (ra) std::reverse(oa.begin(), oa.end());
                if (rb) std::reverse(ob.begin(), ob.end());
                std::vector<int> map(t.n(), -1);
                for (size_t i = 0; i < sa.size(); ++i) map[sa[i]] = oa[i];
                for (size_t i = 0; i < sb.size(); ++i) map[sb[i]] = ob[i];
                Embedding e{t.graph, map, color, {}};
                if (validate(kp, e).ok) return e;
            }
    }
    throw InternalError("embed_in_avoiding: no orientation produced a valid embedding");
}

std::variant<Embedding, std::vector<int>> avoiding_pw2_step(
    const ColoredKP& kp, const std::vector<int>& a, const std::vector<int>& b,
    const PW2Decomposition& h, int n) {
    const int m1 = h.m1, m2 = h.m2;
    if (static_cast<int>(a.size()) < (m1 - 1) * (n - 1) + 1 ||
        static_cast<int>(b.size()) < (m2 - 1) * (n - 1) + 1)
        throw PipelineError("avoiding_pw2_step: sides are undersized");
    for (int x : a)
        for (int y : b)
            if (kp.is_red(x, y))
                throw PipelineError("avoiding_pw2_step: cross edges must all be Blue");
    if (!mutually_avoiding(kp.points(), a, b))
        throw PipelineError("avoiding_pw2_step: sides are not mutually avoiding");
    // Paths taken in the radial order seen from the other side stay
    // non-crossing; the Blue paths are Red ones of the swapped coloring.
    auto orderA = angular_from(kp, b.front(), a);
    auto orderB = angular_from(kp, a.front(), b);
    ColoredKP swapped = kp.swapped();
    auto resA = monotone_path_or_clique(orderA, swapped, m1, n);
    if (auto* clique = std::get_if<BlueClique>(&resA)) return clique->points;
    auto resB = monotone_path_or_clique(orderB, swapped, m2, n);
    if (auto* clique = std::get_if<BlueClique>(&resB)) return clique->points;
    const auto& pa = std::get<RedMonotonePath>(resA).points;  // Blue in kp
    const auto& pb = std::get<RedMonotonePath>(resB).points;
    for (int ra = 0; ra < 2; ++ra)
        for (int rb = 0; rb < 2; ++rb) {
            std::vector<int> oa = pa, ob = pb;
            if (ra) std::reverse(oa.begin(), oa.end());
            if (rb) std::reverse(ob.begin(), ob.end());
            std::vector<int> map(h.graph.n(), -1);
            for (size_t i = 0; i < h.path_u.size(); ++i) map[h.path_u[i]] = oa[i];
            for (size_t i = 0; i < h.path_rest.size(); ++i) map[h.path_rest[i]] = ob[i];
            Embedding e{h.graph, map, EdgeColor::Blue, {}};
            if (validate(kp, e).ok) return e;
        }
    throw InternalError("avoiding_pw2_step: no orientation produced a valid embedding");
}

namespace {

// Shared engine for the strip recursions: either the Blue target graph, or
// a Red y-extreme copy of the rooted tree.
struct TreeRecursion {
    struct Out {
        std::optional<Embedding> red;   // extreme copy of the current tree
        std::optional<Embedding> blue;  // target graph, a final answer
    };

    const ColoredKP& kp;
    // sizes, as functions of the current subtree order n
    std::function<long long(int l, int n)> s0_size;
    std::function<long long(int child_n, int n)> strip_size;
    std::function<long long(int n)> conn_count;
    std::function<long long(int n)> required;
    std::function<long long(int n)> blue_block_a;  // |S'_0|
    // Terminal step on an all-Blue block between the top set and one strip's
    // connectors; may still come back Red (a Red n-clique hosts the tree).
    std::function<Out(const std::vector<int>& sa, const std::vector<int>& sb,
                      const PatternGraph& tree, int root, int n)>
        terminal;

    Out run(std::vector<int> subset, const PatternGraph& tree, int root) {
        const int n = tree.n();
        if (static_cast<long long>(subset.size()) < required(n))
            throw PipelineError("tree recursion: undersized point set");
        if (n == 1) {
            Embedding e{tree, {max_y_point(kp, subset)}, EdgeColor::Red,
                        ExtremalConstraint{ExtremalAxis::MaxY, 0}};
            return Out{e, std::nullopt};
        }
        RootedTree rt = RootedTree::rooted_at(tree, root);
        const auto& child_roots = rt.kids[root];
        const int l = static_cast<int>(child_roots.size());
        std::vector<SubPattern> subtrees;
        for (int c : child_roots)
            subtrees.push_back(induced_subpattern(tree, rt.subtree_vertices(c), c));

        std::vector<int> by_y = sorted_by_y_desc(kp, subset);
        const long long a_sz = s0_size(l, n);
        if (a_sz > static_cast<long long>(by_y.size()))
            throw PipelineError("tree recursion: undersized point set");
        std::vector<int> s0(by_y.begin(), by_y.begin() + a_sz);
        std::vector<int> rest =
            sorted_by_x_asc(kp, std::vector<int>(by_y.begin() + a_sz, by_y.end()));
        std::vector<long long> sizes;
        long long total = 0;
        for (const auto& st : subtrees) {
            sizes.push_back(strip_size(st.g.n(), n));
            total += sizes.back();
        }
        if (total > static_cast<long long>(rest.size()))
            throw PipelineError("tree recursion: undersized point set");
        std::vector<std::vector<int>> strips;
        long long at = 0;
        for (long long sz : sizes) {
            strips.emplace_back(rest.begin() + at, rest.begin() + at + sz);
            at += sz;
        }

        // Harvest connectors: roots of y-extreme Red sub-copies per strip.
        const long long conns_needed = conn_count(n);
        std::vector<std::vector<int>> conns(l);
        std::vector<std::map<int, Embedding>> copies(l);
        for (int i = 0; i < l; ++i) {
            std::vector<int> remaining = strips[i];
            while (static_cast<long long>(conns[i].size()) < conns_needed) {
                Out sub = run(remaining, subtrees[i].g, subtrees[i].root);
                if (!sub.red) return sub;  // a Blue answer bubbles up
                int q = sub.red->map[subtrees[i].root];
                conns[i].push_back(q);
                copies[i].emplace(q, *sub.red);
                remaining.erase(std::find(remaining.begin(), remaining.end(), q));
            }
        }

        // Red case: a top point with a Red edge into every strip's connectors.
        std::vector<int> blocked_strip(s0.size(), -1);  // an all-Blue strip per p
        for (size_t pi = 0; pi < s0.size(); ++pi) {
            int p = s0[pi];
            std::vector<std::vector<int>> linked(l);
            bool all = true;
            for (int i = 0; i < l; ++i) {
                for (int q : conns[i])
                    if (kp.is_red(p, q)) linked[i].push_back(q);
                if (linked[i].empty()) {
                    blocked_strip[pi] = i;
                    all = false;
                    break;
                }
            }
            if (!all) continue;
            // assemble, backtracking over the connector choice per strip
            std::vector<int> chosen(l, -1);
            std::vector<Segment> drawn;
            std::function<bool(int)> pick = [&](int i) -> bool {
                if (i == l) return true;
                for (int q : linked[i]) {
                    Segment spine{p, q};
                    if (crosses_any(kp, spine, drawn)) continue;
                    auto segs = embedding_segments(copies[i].at(q));
                    size_t mark = drawn.size();
                    drawn.push_back(spine);
                    bool ok = true;
                    for (const auto& s : segs) {
                        if (crosses_any(kp, s, drawn)) {
                            ok = false;
                            break;
                        }
                        drawn.push_back(s);
                    }
                    if (ok) {
                        chosen[i] = q;
                        if (pick(i + 1)) return true;
                    }
                    drawn.resize(mark);
                }
                return false;
            };
            if (!pick(0)) continue;
            std::vector<int> map(tree.n(), -1);
            map[root] = p;
            for (int i = 0; i < l; ++i) {
                const Embedding& copy = copies[i].at(chosen[i]);
                for (size_t v = 0; v < subtrees[i].orig.size(); ++v)
                    map[subtrees[i].orig[v]] = copy.map[v];
            }
            Embedding e{tree, map, EdgeColor::Red,
                        ExtremalConstraint{ExtremalAxis::MaxY, root}};
            if (!validate(kp, e).ok) continue;
            return Out{e, std::nullopt};
        }

        // Blue case: pigeonhole an all-Blue block between S_0 and one strip.
        std::vector<std::vector<int>> groups(l);
        for (size_t pi = 0; pi < s0.size(); ++pi) {
            if (blocked_strip[pi] < 0)
                throw InternalError("tree recursion: a top point is Red-linked to every "
                                    "strip but no assembly validates");
            groups[blocked_strip[pi]].push_back(s0[pi]);
        }
        int big = 0;
        for (int i = 1; i < l; ++i)
            if (groups[i].size() > groups[big].size()) big = i;
        const long long a_need = blue_block_a(n);
        if (static_cast<long long>(groups[big].size()) < a_need)
            throw InternalError("tree recursion: pigeonhole block too small");
        groups[big].resize(a_need);
        return terminal(groups[big], conns[big], tree, root, n);
    }
};

}  // namespace

Certificate tree_vs_caterpillar(const ColoredKP& kp, const RootedTree& t,
                                const CaterpillarStructure& cat, int size_constant) {
    const int n = t.tree.n(), m = cat.n();
    const long long c = size_constant;
    if (c < 1) throw PipelineError("size constant must be positive");
    std::string params = "pipeline=tree_vs_caterpillar n=" + std::to_string(n) +
                         " m=" + std::to_string(m) + " c=" + std::to_string(c);
    if (kp.size() < c * (n - 1) * m * m + 1)
        throw PipelineError("undersized: need c(n-1)m^2+1 points");
    if (n == 1)
        return wrap(kp,
                    Embedding{t.tree, {max_y_point(kp, all_points(kp))}, EdgeColor::Red,
                              ExtremalConstraint{ExtremalAxis::MaxY, 0}},
                    params);
    if (m == 1) return wrap(kp, Embedding{cat.graph, {0}, EdgeColor::Blue, {}}, params);
    if (m == 2) {
        for (int j = 0; j < kp.size(); ++j)
            for (int i = 0; i < j; ++i)
                if (!kp.is_red(i, j))
                    return wrap(kp, Embedding{cat.graph, {i, j}, EdgeColor::Blue, {}},
                                params);
        std::vector<int> top = sorted_by_y_desc(kp, all_points(kp));
        top.resize(n);
        return wrap(kp, embed_red_tree_extreme(kp, t.tree, t.root, top), params);
    }
    const int m1 = cat.m1, m2 = cat.m2;
    TreeRecursion rec{
        kp,
        [&](int l, int) { return c * m1 * m1 * l; },
        [&](int child_n, int) { return c * (child_n - 1) * m * m + c * m2 * m2; },
        [&](int) { return c * m2 * m2; },
        [&](int nn) { return c * (nn - 1) * m * m + 1; },
        [&](int) { return c * m1 * m1; },
        [&](const std::vector<int>& sa, const std::vector<int>& sb, const PatternGraph&,
            int, int) -> TreeRecursion::Out {
            AvoidingPair pair;
            if (m1 == 1 || m2 == 1) {
                // a star hangs off its single centre without any avoidance
                pair.a = std::vector<int>(sa.begin(), sa.begin() + m1);
                pair.b = std::vector<int>(sb.begin(), sb.begin() + m2);
            } else {
                pair = extract_avoiding(kp.points(), sa, sb, m1, m2);
                if (static_cast<int>(pair.a.size()) >= m1 &&
                    static_cast<int>(pair.b.size()) >= m2) {
                    pair.a.resize(m1);
                    pair.b.resize(m2);
                } else {
                    // the class sizes may fit the two sides the other way
                    pair = extract_avoiding(kp.points(), sa, sb, m2, m1);
                    if (static_cast<int>(pair.a.size()) < m2 ||
                        static_cast<int>(pair.b.size()) < m1)
                        throw PipelineError("avoiding extraction fell short; increase "
                                            "the size constant");
                    pair.a.resize(m2);
                    pair.b.resize(m1);
                }
            }
            return TreeRecursion::Out{
                std::nullopt, embed_in_avoiding(kp, cat, pair, EdgeColor::Blue)};
        }};
    auto out = rec.run(all_points(kp), t.tree, t.root);
    Embedding e = out.red ? *out.red : *out.blue;
    validate_or_throw(kp, e, "tree_vs_caterpillar");
    return wrap(kp, e, params);
}

Certificate tree_vs_pw2(const ColoredKP& kp, const RootedTree& t,
                        const PW2Decomposition& h, PipelineMode mode, int size_constant) {
    const int n = t.tree.n(), m = h.graph.n();
    const int m1 = h.m1, m2 = h.m2;
    const long long c = size_constant;
    if (c < 1) throw PipelineError("size constant must be positive");
    const bool convex = mode == PipelineMode::Convex;
    if (convex && kp.points().position_class() != PositionClass::Convex)
        throw PipelineError("convex mode requires convex position");
    std::string params = std::string("pipeline=tree_vs_pw2 mode=") +
                         (convex ? "convex" : "general") + " n=" + std::to_string(n) +
                         " m=" + std::to_string(m) +
                         (convex ? "" : " c=" + std::to_string(c));
    const long long need = convex
                               ? static_cast<long long>(n - 1) * (n - 1) * (m - 1) + 1
                               : c * m * m * (n - 1) * (n - 1) * (n - 1) + 1;
    if (kp.size() < need) throw PipelineError("undersized point set");
    if (n == 1)
        return wrap(kp,
                    Embedding{t.tree, {max_y_point(kp, all_points(kp))}, EdgeColor::Red,
                              ExtremalConstraint{ExtremalAxis::MaxY, 0}},
                    params);

    TreeRecursion rec{
        kp,
        // General-mode avoiding blocks scale with (nn-1)^2, which keeps the
        // whole recursion inside the c*m^2(n-1)^3+1 budget for every branch
        // count while the extracted sides m1(nn-1) >= (m1-1)(nn-1)+1 stay
        // large enough for the two-paths step.
        [&](int l, int nn) {
            return convex ? static_cast<long long>(m1 - 1) * (nn - 1) * l + 1
                          : c * m1 * m1 * (nn - 1) * (nn - 1) * l;
        },
        [&](int child_n, int nn) {
            return convex ? static_cast<long long>(child_n - 1) * (child_n - 1) * (m - 1) +
                                static_cast<long long>(nn - 1) * (m2 - 1) + 1
                          : c * m * m * (child_n - 1) * (child_n - 1) * (child_n - 1) +
                                c * m2 * m2 * (nn - 1) * (nn - 1);
        },
        [&](int nn) {
            return convex ? static_cast<long long>(m2 - 1) * (nn - 1) + 1
                          : c * m2 * m2 * (nn - 1) * (nn - 1);
        },
        [&](int nn) {
            return convex ? static_cast<long long>(nn - 1) * (nn - 1) * (m - 1) + 1
                          : c * m * m * (nn - 1) * (nn - 1) * (nn - 1) + 1;
        },
        [&](int nn) {
            return convex ? static_cast<long long>(m1 - 1) * (nn - 1) + 1
                          : c * m1 * m1 * (nn - 1) * (nn - 1);
        },
        [&](const std::vector<int>& sa, const std::vector<int>& sb,
            const PatternGraph& tree, int root, int nn) -> TreeRecursion::Out {
            std::vector<int> A = sa, B = sb;
            if (!convex) {
                // convex blocks are avoiding as-is (two arcs of one convex
                // polygon split by a horizontal line); general ones are not
                AvoidingPair pair = extract_avoiding(kp.points(), sa, sb,
                                                     m1 * (nn - 1), m2 * (nn - 1));
                if (static_cast<int>(pair.a.size()) < m1 * (nn - 1) ||
                    static_cast<int>(pair.b.size()) < m2 * (nn - 1))
                    throw PipelineError("avoiding extraction fell short; increase the "
                                        "size constant");
                A = pair.a;
                B = pair.b;
            }
            auto res = avoiding_pw2_step(kp, A, B, h, nn);
            if (auto* blue = std::get_if<Embedding>(&res))
                return TreeRecursion::Out{std::nullopt, *blue};
            // a Red nn-clique hosts the current subtree, root on top, and
            // continues upward as a Red extreme copy
            auto& clique = std::get<std::vector<int>>(res);
            return TreeRecursion::Out{embed_red_tree_extreme(kp, tree, root, clique),
                                      std::nullopt};
        }};
    auto out = rec.run(all_points(kp), t.tree, t.root);
    Embedding e = out.red ? *out.red : *out.blue;
    validate_or_throw(kp, e, "tree_vs_pw2");
    return wrap(kp, e, params);
}

Embedding selframsey_tree_diameter(const ColoredKP& kp, const RootedTree& t) {
    const int n = t.tree.n();
    const int h = t.height;
    long long need = 1;
    for (int i = 0; i < 2 * h; ++i) need *= n;
    if (kp.size() < need) throw PipelineError("undersized: need n^(2h) points");
    if (n == 1) return Embedding{t.tree, {0}, EdgeColor::Red, {}};

    struct BlueCliqueFound {
        std::vector<int> points;
    };

    // (T', u): the root's child subtrees with their roots merged into one
    // vertex 0; maps[j] sends child subtree j's vertices into T'.
    struct Merged {
        PatternGraph g;
        std::vector<std::vector<int>> maps;
    };
    auto merge_children = [](const std::vector<SubPattern>& subs) -> Merged {
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<int>> maps;
        int next = 1;
        for (const auto& s : subs) {
            std::vector<int> mp(s.g.n(), -1);
            mp[s.root] = 0;
            for (int v = 0; v < s.g.n(); ++v)
                if (v != s.root) mp[v] = next++;
            for (auto [u, v] : s.g.edges()) edges.emplace_back(mp[u], mp[v]);
            maps.push_back(std::move(mp));
        }
        return Merged{PatternGraph(std::max(next, 1), std::move(edges)), std::move(maps)};
    };

    std::function<Embedding(const std::vector<int>&, const PatternGraph&, int, int)>
        inner = [&](const std::vector<int>& subset, const PatternGraph& tree, int root,
                    int height) -> Embedding {
        if (tree.n() == 1)
            return Embedding{tree, {max_y_point(kp, subset)}, EdgeColor::Red,
                             ExtremalConstraint{ExtremalAxis::MaxY, 0}};
        RootedTree rt = RootedTree::rooted_at(tree, root);
        std::vector<SubPattern> subs;
        for (int cr : rt.kids[root])
            subs.push_back(induced_subpattern(tree, rt.subtree_vertices(cr), cr));
        Merged merged = merge_children(subs);

        long long strip_sz = 1;
        for (int i = 0; i < 2 * (height - 1); ++i) strip_sz *= n;
        std::vector<int> byx = sorted_by_x_asc(kp, subset);
        if (static_cast<long long>(byx.size()) < static_cast<long long>(n) * n * strip_sz)
            throw PipelineError("diameter recursion: undersized point set");
        std::vector<int> roots;
        std::map<int, Embedding> copies;
        for (int s = 0; s < n * n; ++s) {
            std::vector<int> strip(byx.begin() + s * strip_sz,
                                   byx.begin() + (s + 1) * strip_sz);
            Embedding copy = inner(strip, merged.g, 0, height - 1);
            int r = copy.map[0];
            roots.push_back(r);
            copies.emplace(r, std::move(copy));
        }
        auto either = min_degree_or_clique(kp, roots, n, n);
        if (auto* clique = std::get_if<BlueClique>(&either))
            throw BlueCliqueFound{clique->points};
        auto& sub = std::get<MinDegSubgraph>(either);
        int center = max_y_point(kp, sub.points);
        std::vector<int> nbrs;
        for (int w : sub.points)
            if (w != center && kp.is_red(center, w)) nbrs.push_back(w);
        const int k = static_cast<int>(subs.size());
        // star centre plus one merged copy per child; each copy only draws
        // the edges its own child subtree uses, with backtracking over the
        // assignment of children to star leaves
        std::vector<int> picked(k, -1);
        std::vector<char> used(nbrs.size(), 0);
        std::vector<Segment> drawn;
        std::function<bool(int)> pick = [&](int j) -> bool {
            if (j == k) return true;
            for (size_t qi = 0; qi < nbrs.size(); ++qi) {
                if (used[qi]) continue;
                int q = nbrs[qi];
                Segment spine{center, q};
                if (crosses_any(kp, spine, drawn)) continue;
                const Embedding& copy = copies.at(q);
                bool ok = true;
                size_t mark = drawn.size();
                drawn.push_back(spine);
                for (auto [u, v] : subs[j].g.edges()) {
                    Segment seg{copy.map[merged.maps[j][u]], copy.map[merged.maps[j][v]]};
                    if (crosses_any(kp, seg, drawn)) {
                        ok = false;
                        break;
                    }
                    drawn.push_back(seg);
                }
                if (ok) {
                    used[qi] = 1;
                    picked[j] = q;
                    if (pick(j + 1)) return true;
                    used[qi] = 0;
                }
                drawn.resize(mark);
            }
            return false;
        };
        if (!pick(0))
            throw InternalError("diameter recursion: star assembly found no "
                                "crossing-free assignment");
        std::vector<int> map(tree.n(), -1);
        map[root] = center;
        for (int j = 0; j < k; ++j) {
            const Embedding& copy = copies.at(picked[j]);
            for (size_t v = 0; v < subs[j].orig.size(); ++v)
                map[subs[j].orig[v]] = copy.map[merged.maps[j][v]];
        }
        Embedding e{tree, map, EdgeColor::Red,
                    ExtremalConstraint{ExtremalAxis::MaxY, root}};
        validate_or_throw(kp, e, "diameter recursion assembly");
        return e;
    };

    try {
        Embedding e = inner(all_points(kp), t.tree, t.root, h);
        validate_or_throw(kp, e, "selframsey_tree_diameter");
        return e;
    } catch (const BlueCliqueFound& bc) {
        PointSet sub = subset_points(kp.points(), bc.points);
        Embedding local = embed_outerplanar(t.tree, sub, std::nullopt);
        Embedding e{t.tree, {}, EdgeColor::Blue, {}};
        for (int v = 0; v < n; ++v) e.map.push_back(bc.points[local.map[v]]);
        validate_or_throw(kp, e, "selframsey_tree_diameter blue");
        return e;
    }
}

}  // namespace ramsey
