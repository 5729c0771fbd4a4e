#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GraphClass {
    Tree,
    Caterpillar,
    Star,
    Path,
    Outerplanar,
    HamiltonianOuterplanar,
    OuterplanarTriangulation,
    PW2Triangulation,
};

// Simple undirected graph on vertices 0..n-1, n <= 64.
class PatternGraph {
public:
    PatternGraph(int n, std::vector<std::pair<int, int>> edges);

    static PatternGraph path(int n);
    static PatternGraph cycle(int n);
    static PatternGraph star(int n);       // K_{1,n-1}
    static PatternGraph fan(int n);        // cycle + chords from one apex
    static PatternGraph complete(int n);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool connected() const;

    // Hamilton cycle order whose chord set is non-crossing on a circle, if
    // one exists. This is the outer face of an outerplanar embedding.
    std::optional<std::vector<int>> hamiltonian_outer_cycle() const;

    // Circular vertex order with no two interleaving edges (exists iff the
    // graph is outerplanar).
    std::optional<std::vector<int>> outerplanar_layout() const;

    std::set<GraphClass> recognize() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

struct CaterpillarStructure {
    PatternGraph graph;
    std::vector<int> spine;                   // ordered non-leaf vertices
    std::map<int, std::vector<int>> leaf_map; // spine vertex -> leaves
    int m1 = 0, m2 = 0;                       // bipartition class sizes
    std::vector<int> class1, class2;          // the classes themselves
    int max_degree = 0;                       // Delta
    int spine_length = 0;                     // gamma
    int n() const { return graph.n(); }
};

// Spine/leaf decomposition of a caterpillar; errors on non-caterpillars.
CaterpillarStructure caterpillar_structure(const PatternGraph& g);

struct PW2Decomposition {
    PatternGraph graph;
    std::vector<int> path_u;    // induced path order on U
    std::vector<int> path_rest; // induced path order on V \ U
    int m1 = 0, m2 = 0;
};

// Exhaustive split of an outerplanar triangulation into two induced paths,
// or nullopt if none exists (then the graph has pathwidth > 2).
std::optional<PW2Decomposition> pw2_decompose(const PatternGraph& g);

// Completes a caterpillar on >= 3 vertices into a pathwidth-2 outerplanar
// triangulation containing it as a spanning subgraph.
PatternGraph augment_caterpillar_to_pw2(const CaterpillarStructure& cat);

// All non-isomorphic trees on n vertices (n <= 12), deduplicated by a
// centre-rooted canonical form.
std::vector<PatternGraph> enumerate_trees(int n);

struct RootedTree {
    PatternGraph tree;
    int root = 0;
    int height = 0;
    std::vector<int> parent;             // parent[root] == -1
    std::vector<std::vector<int>> kids;  // children lists

    static RootedTree rooted_at(const PatternGraph& tree, int root);
    // Root choice minimising the height: h = ceil(diameter / 2).
    static RootedTree rooted_at_center(const PatternGraph& tree);

    // Vertices of the subtree hanging at v (including v).
    std::vector<int> subtree_vertices(int v) const;
    int subtree_size(int v) const;
    int subtree_height(int v) const;
};

}  // namespace ramsey
