#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/geom.hpp"
#include "ramsey/graphs.hpp"

namespace ramsey {

// Contract violation by the caller (undersized instance, wrong class, ...).
struct PipelineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pipeline step that is guaranteed by the underlying theorem failed; this
// must never happen on in-contract inputs.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point subset whose induced Red degrees are all >= the stated bound.
struct MinDegSubgraph {
    std::vector<int> points;
    int min_red_degree = 0;
};

// Pairwise-Blue point set.
struct BlueClique {
    std::vector<int> points;
};

// Red path increasing in the order it was searched under.
struct RedMonotonePath {
    std::vector<int> points;
};

using EitherStructure = std::variant<MinDegSubgraph, BlueClique, RedMonotonePath>;

// Two point-id sets such that no line through two points of one side meets
// the convex hull of the other.
struct AvoidingPair {
    std::vector<int> a;
    std::vector<int> b;
};

// Exact predicate scan over every pair-line against the opposite set.
bool mutually_avoiding(const PointSet& ps, const std::vector<int>& a,
                       const std::vector<int>& b);

struct Anchor {
    int vertex = 0;  // pattern vertex
    int point = 0;   // point id, must lie on the hull
};

// Non-crossing (color-free) embedding of an outerplanar graph onto exactly
// |G| points in general position, optionally pinning one vertex to a hull
// point. The returned Embedding has color Blue by convention; callers using
// it inside a monochromatic clique overwrite the color.
Embedding embed_outerplanar(const PatternGraph& g, const PointSet& ps,
                            std::optional<Anchor> anchor = {});

// Degeneracy dichotomy: a subset of min Red degree >= n-1, or m pairwise
// Blue points. Requires |points| >= (m-1)(n-1)+1.
EitherStructure min_degree_or_clique(const ColoredKP& kp,
                                     const std::vector<int>& points, int n, int m);

// Chain/antichain dichotomy over a supplied total order: a Red path of n
// points increasing in the order, or m pairwise Blue points. Requires
// |ordered| >= (n-1)(m-1)+1.
EitherStructure monotone_path_or_clique(const std::vector<int>& ordered,
                                        const ColoredKP& kp, int n, int m);

// Red non-crossing caterpillar inside a convex subset whose Red edge count
// strictly exceeds floor((n-2)|S|/2); exhaustive search behind the
// edge-count contract.
Embedding dense_convex_caterpillar(const ColoredKP& kp, const std::vector<int>& subset,
                                   const CaterpillarStructure& t);

Certificate convex_caterpillar_vs_ham(const ColoredKP& kp, const CaterpillarStructure& t,
                                      const PatternGraph& h);

Certificate general_twostar_vs_ham(const ColoredKP& kp, const CaterpillarStructure& t,
                                   const PatternGraph& h);

Certificate general_caterpillar_vs_ham(const ColoredKP& kp,
                                       const CaterpillarStructure& t,
                                       const PatternGraph& h);

// Monochromatic non-crossing copy of the caterpillar at N >= 4*Delta*gamma*n.
Embedding selframsey_caterpillar(const ColoredKP& kp, const CaterpillarStructure& t);

// Mutually avoiding subsets of two sets separated by an axis-parallel line;
// grows greedily from exhaustively scanned 2+2 seeds and reports what it
// achieved (possibly short of the targets).
AvoidingPair extract_avoiding(const PointSet& ps, const std::vector<int>& a,
                              const std::vector<int>& b, int target_a, int target_b);

// Non-crossing caterpillar using only A'-B' edges of an avoiding pair whose
// side sizes match the bipartition classes.
Embedding embed_in_avoiding(const ColoredKP& kp, const CaterpillarStructure& t,
                            const AvoidingPair& pair, EdgeColor color);

// Blue non-crossing H (two induced paths + cross edges), or a Red n-clique
// surfaced from one side. Requires all A-B edges Blue and sizes
// |A| >= (m1-1)(n-1)+1, |B| >= (m2-1)(n-1)+1.
std::variant<Embedding, std::vector<int>> avoiding_pw2_step(
    const ColoredKP& kp, const std::vector<int>& a, const std::vector<int>& b,
    const PW2Decomposition& h, int n);

// Recursive strip pipeline: Blue non-crossing caterpillar, or a Red
// y-extreme copy of the rooted tree. Needs |K| >= c(n-1)m^2+1.
Certificate tree_vs_caterpillar(const ColoredKP& kp, const RootedTree& t,
                                const CaterpillarStructure& c, int size_constant);

enum class PipelineMode { Convex, General };

// Same recursion against a pathwidth-2 triangulation. Convex mode needs
// (n-1)^2(m-1)+1 points; general mode c*m^2(n-1)^3+1.
Certificate tree_vs_pw2(const ColoredKP& kp, const RootedTree& t,
                        const PW2Decomposition& h, PipelineMode mode,
                        int size_constant);

// Monochromatic non-crossing copy of a tree rooted at a height-h vertex,
// at N >= n^(2h) points.
Embedding selframsey_tree_diameter(const ColoredKP& kp, const RootedTree& t);

}  // namespace ramsey
