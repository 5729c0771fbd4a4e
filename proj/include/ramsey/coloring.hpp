#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/geom.hpp"
#include "ramsey/graphs.hpp"

namespace ramsey {

enum class EdgeColor { Red, Blue };

inline EdgeColor other(EdgeColor c) {
    return c == EdgeColor::Red ? EdgeColor::Blue : EdgeColor::Red;
}

// Complete geometric graph on a point set with a total Red/Blue edge map.
class ColoredKP {
public:
    explicit ColoredKP(PointSet points);  // all Blue

    static ColoredKP random(PointSet points, double red_bias, std::uint64_t seed);

    // The lower-bound construction: (n-1)(m-1) convex points, clockwise
    // labelled from the lexicographically smallest hull point, partitioned
    // into m-1 consecutive blocks of n-1; edges inside a block are Red,
    // edges across blocks Blue. The red graph is a disjoint union of m-1
    // copies of K_{n-1}.
    static ColoredKP lower_bound(int tree_n, int host_m, PointSet convex_points);

    const PointSet& points() const { return points_; }
    int size() const { return points_.size(); }

    EdgeColor color(int i, int j) const;
    void set_color(int i, int j, EdgeColor c);
    bool is_red(int i, int j) const { return color(i, j) == EdgeColor::Red; }

    int red_degree(int v) const;
    std::vector<std::pair<int, int>> red_edges() const;

    ColoredKP swapped() const;  // colors exchanged

    // Order-independent fingerprint of the coloring.
    std::uint64_t coloring_hash() const;

private:
    int pair_index(int i, int j) const;
    PointSet points_;
    std::vector<std::uint8_t> red_;  // 1 = Red, indexed by pair
};

enum class ExtremalAxis { MaxX, MaxY };

struct ExtremalConstraint {
    ExtremalAxis axis = ExtremalAxis::MaxY;
    int root = 0;  // pattern vertex whose image must attain the maximum
};

// Injective pattern-vertex -> point-id map whose edges are monochromatic
// and pairwise non-crossing.
struct Embedding {
    PatternGraph pattern;
    std::vector<int> map;
    EdgeColor color = EdgeColor::Red;
    std::optional<ExtremalConstraint> extremal;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks all Embedding invariants against the coloring; the report names
// every offending edge or pair.
ValidationReport validate(const ColoredKP& kp, const Embedding& e);

struct OracleOptions {
    std::optional<std::vector<int>> allowed_points;  // restrict the search
    std::optional<ExtremalConstraint> extremal;
    bool ignore_colors = false;  // accept any edge color (crossing-free search)
    std::vector<std::pair<int, int>> pins;  // pattern vertex -> forced point id
};

// Exhaustive backtracking search for a monochromatic non-crossing copy of
// the pattern. None is a proof of non-existence.
std::optional<Embedding> find_mono_noncrossing(const ColoredKP& kp,
                                               const PatternGraph& pattern,
                                               EdgeColor c,
                                               const OracleOptions& opts = {});

// Enumerates every non-crossing placement (colors ignored) and hands each
// one to the callback; used to precompute embedding masks for the verifier.
void for_each_noncrossing(const PointSet& ps, const PatternGraph& pattern,
                          const std::function<void(const std::vector<int>&)>& fn);

struct Fingerprint {
    std::uint64_t coloring_hash = 0;
    std::uint64_t seed = 0;
    std::string params;  // sizes and constants of the producing run
};

// Machine-checkable pipeline output: a Red or Blue witness embedding plus
// the fingerprint of the instance that produced it.
struct Certificate {
    Embedding witness;
    Fingerprint fingerprint;
};

}  // namespace ramsey
