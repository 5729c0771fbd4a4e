#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/embedders.hpp"
#include "ramsey/graphs.hpp"

namespace ramsey {

// Red-edge bitmask of a coloring: bit j(j-1)/2+i set iff edge {i,j} is Red.
std::uint64_t red_mask(const ColoredKP& kp);

// Orbit representative of a red-mask under the dihedral symmetries of N
// convex points (rotations and reflections of the hull order).
std::uint64_t canonical_convex_mask(std::uint64_t mask, int N);

// All counterexample colorings of K_N on convex points (no Red non-crossing
// red_pattern and no Blue non-crossing blue_pattern), one canonical mask per
// dihedral orbit. Shard s of k scans masks with mask % k == s.
std::vector<std::uint64_t> convex_counterexamples(const PatternGraph& red_pattern,
                                                  const PatternGraph& blue_pattern,
                                                  int N, int shards = 1, int shard = 0);

struct RamseyReport {
    int value = 0;  // exact convex geometric Ramsey number
    long long colorings_scanned = 0;             // at N = value
    std::vector<std::uint64_t> counterexamples;  // canonical orbits at value-1
};

// Exact convex-position Ramsey number by exhaustive scan over N = 1,2,...;
// refuses point counts whose coloring space exceeds 2^28.
RamseyReport exact_convex_ramsey(const PatternGraph& red_pattern,
                                 const PatternGraph& blue_pattern, int n_cap = 8);

struct SweepOutcome {
    int runs = 0;
    int red_wins = 0;
    int blue_wins = 0;
    int pipeline_errors = 0;  // extraction shortfalls and the like
    std::vector<std::string> failures;  // anything else, with messages
};

// Registered pipeline names accepted by the dispatch functions below.
std::vector<std::string> pipeline_names();

// Exact point count demanded by a pipeline's size bound.
long long pipeline_size(const std::string& pipeline, const PatternGraph& first,
                        const PatternGraph& second, int size_constant = 2);

// Dispatches to the named embedder. The self-host pipelines ignore `second`.
Certificate run_pipeline(const std::string& pipeline, const ColoredKP& kp,
                         const PatternGraph& first, const PatternGraph& second,
                         int size_constant = 2);

// Runs a pipeline on `trials` random instances at its exact size bound and
// re-validates every produced certificate. `second` is ignored by the
// self-Ramsey pipelines.
SweepOutcome sweep_theorem(const std::string& pipeline, const PatternGraph& first,
                           const PatternGraph& second, int trials, std::uint64_t seed,
                           int size_constant = 2);

// Smallest constant in [1, c_cap] whose sweep is clean, after checking that
// every larger constant up to c_cap stays clean (the property is upward
// closed in c, so a violation indicates a bug).
int calibrate_constant(const std::string& pipeline, const PatternGraph& first,
                       const PatternGraph& second, int trials, std::uint64_t seed,
                       int c_cap = 6);

}  // namespace ramsey
