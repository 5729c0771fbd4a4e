#include "ramsey/verifier.hpp"

#include <algorithm>
#include <set>

namespace ramsey {

namespace {

int pidx(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deduplicated edge-bitmasks of every non-crossing placement of g.
std::vector<std::uint64_t> placement_masks(const PointSet& ps, const PatternGraph& g) {
    std::vector<std::uint64_t> out;
    if (g.n() > ps.size()) return out;
    for_each_noncrossing(ps, g, [&](const std::vector<int>& map) {
        std::uint64_t m = 0;
        for (auto [u, v] : g.edges()) m |= std::uint64_t{1} << pidx(map[u], map[v]);
        out.push_back(m);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Pair-index permutations induced by the 2N dihedral symmetries of the
// cyclic order. Point ids are assumed to appear along the hull in id order,
// which holds for all generated convex sets.
std::vector<std::vector<int>> dihedral_pair_perms(int N) {
    const int E = N * (N - 1) / 2;
    std::vector<std::vector<int>> perms;
    for (int refl = 0; refl < 2; ++refl)
        for (int shift = 0; shift < N; ++shift) {
            std::vector<int> sigma(N);
            for (int v = 0; v < N; ++v) {
                int w = refl ? (N - v) % N : v;
                sigma[v] = (w + shift) % N;
            }
            std::vector<int> pp(E);
            for (int j = 0; j < N; ++j)
                for (int i = 0; i < j; ++i) pp[pidx(i, j)] = pidx(sigma[i], sigma[j]);
            perms.push_back(std::move(pp));
        }
    return perms;
}

}  // namespace

std::uint64_t red_mask(const ColoredKP& kp) {
    if (kp.size() > 11)
        throw PipelineError("red_mask: more than 55 edges do not fit one word");
    std::uint64_t m = 0;
    for (int j = 0; j < kp.size(); ++j)
        for (int i = 0; i < j; ++i)
            if (kp.is_red(i, j)) m |= std::uint64_t{1} << pidx(i, j);
    return m;
}

std::uint64_t canonical_convex_mask(std::uint64_t mask, int N) {
    const int E = N * (N - 1) / 2;
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& pp : dihedral_pair_perms(N)) {
        std::uint64_t img = 0;
        for (int e = 0; e < E; ++e)
            if ((mask >> e) & 1) img |= std::uint64_t{1} << pp[e];
        best = std::min(best, img);
    }
    return best;
}

std::vector<std::uint64_t> convex_counterexamples(const PatternGraph& red_pattern,
                                                  const PatternGraph& blue_pattern,
                                                  int N, int shards, int shard) {
    if (N < 1) throw PipelineError("convex_counterexamples: N must be positive");
    if (shards < 1 || shard < 0 || shard >= shards)
        throw PipelineError("convex_counterexamples: bad shard spec");
    const int E = N * (N - 1) / 2;
    if (E > 28)
        throw PipelineError("convex_counterexamples: more than 2^28 colorings refused");
    PointSet ps = PointSet::generate(N, PositionClass::Convex, 4242);
    auto red_masks = placement_masks(ps, red_pattern);
    auto blue_masks = placement_masks(ps, blue_pattern);
    std::set<std::uint64_t> orbits;
    const std::uint64_t top = std::uint64_t{1} << E;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        if (shards > 1 && mask % shards != static_cast<std::uint64_t>(shard)) continue;
        bool good = false;
        for (std::uint64_t r : red_masks)
            if ((mask & r) == r) {
                good = true;
                break;
            }
        if (!good)
            for (std::uint64_t b : blue_masks)
                if ((mask & b) == 0) {
                    good = true;
                    break;
                }
        if (!good) orbits.insert(canonical_convex_mask(mask, N));
    }
    return std::vector<std::uint64_t>(orbits.begin(), orbits.end());
}

RamseyReport exact_convex_ramsey(const PatternGraph& red_pattern,
                                 const PatternGraph& blue_pattern, int n_cap) {
    std::vector<std::uint64_t> prev;
    for (int N = 1; N <= n_cap; ++N) {
        auto cexs = convex_counterexamples(red_pattern, blue_pattern, N);
        if (cexs.empty()) {
            RamseyReport rep;
            rep.value = N;
            rep.colorings_scanned = std::int64_t{1} << (N * (N - 1) / 2);
            rep.counterexamples = std::move(prev);
            return rep;
        }
        prev = std::move(cexs);
    }
    throw PipelineError("exact_convex_ramsey: value exceeds the point cap");
}

std::vector<std::string> pipeline_names() {
    return {"convex_caterpillar_vs_ham", "general_twostar_vs_ham",
            "general_caterpillar_vs_ham", "selframsey_caterpillar",
            "tree_vs_caterpillar",        "tree_vs_pw2_convex",
            "tree_vs_pw2_general",        "selframsey_tree_diameter"};
}

long long pipeline_size(const std::string& pipeline, const PatternGraph& first,
                        const PatternGraph& second, int c) {
    const long long n = first.n(), m = second.n();
    if (pipeline == "convex_caterpillar_vs_ham" || pipeline == "general_twostar_vs_ham")
        return (n - 1) * (m - 1) + 1;
    if (pipeline == "general_caterpillar_vs_ham") {
        auto cat = caterpillar_structure(first);
        return static_cast<long long>(cat.max_degree) * cat.spine_length * m * m;
    }
    if (pipeline == "selframsey_caterpillar") {
        auto cat = caterpillar_structure(first);
        return 4LL * cat.max_degree * cat.spine_length * n;
    }
    if (pipeline == "tree_vs_caterpillar")
        return static_cast<long long>(c) * (n - 1) * m * m + 1;
    if (pipeline == "tree_vs_pw2_convex") return (n - 1) * (n - 1) * (m - 1) + 1;
    if (pipeline == "tree_vs_pw2_general")
        return static_cast<long long>(c) * m * m * (n - 1) * (n - 1) * (n - 1) + 1;
    if (pipeline == "selframsey_tree_diameter") {
        auto t = RootedTree::rooted_at_center(first);
        long long N = 1;
        for (int i = 0; i < 2 * t.height; ++i) N *= n;
        return std::max(N, 1LL);
    }
    throw PipelineError("unknown pipeline: " + pipeline);
}

Certificate run_pipeline(const std::string& pipeline, const ColoredKP& kp,
                         const PatternGraph& first, const PatternGraph& second, int c) {
    auto wrap = [&](Embedding e) {
        return Certificate{std::move(e),
                           Fingerprint{kp.coloring_hash(), 0, pipeline}};
    };
    if (pipeline == "convex_caterpillar_vs_ham")
        return convex_caterpillar_vs_ham(kp, caterpillar_structure(first), second);
    if (pipeline == "general_twostar_vs_ham")
        return general_twostar_vs_ham(kp, caterpillar_structure(first), second);
    if (pipeline == "general_caterpillar_vs_ham")
        return general_caterpillar_vs_ham(kp, caterpillar_structure(first), second);
    if (pipeline == "selframsey_caterpillar")
        return wrap(selframsey_caterpillar(kp, caterpillar_structure(first)));
    if (pipeline == "tree_vs_caterpillar")
        return tree_vs_caterpillar(kp, RootedTree::rooted_at_center(first),
                                   caterpillar_structure(second), c);
    if (pipeline == "tree_vs_pw2_convex" || pipeline == "tree_vs_pw2_general") {
        auto h = pw2_decompose(second);
        if (!h) throw GraphError("host has no two-path split");
        auto mode = pipeline == "tree_vs_pw2_convex" ? PipelineMode::Convex
                                                     : PipelineMode::General;
        return tree_vs_pw2(kp, RootedTree::rooted_at_center(first), *h, mode, c);
    }
    if (pipeline == "selframsey_tree_diameter")
        return wrap(selframsey_tree_diameter(kp, RootedTree::rooted_at_center(first)));
    throw PipelineError("unknown pipeline: " + pipeline);
}

namespace {

struct RunResult {
    ColoredKP kp;
    Embedding witness;
};

RunResult run_one(const std::string& name, const PatternGraph& first,
                  const PatternGraph& second, int c, std::uint64_t s, double bias) {
    long long N = pipeline_size(name, first, second, c);
    if (N > 20000)
        throw PipelineError("sweep instance too large: " + std::to_string(N) +
                            " points");
    PositionClass cls = (name == "convex_caterpillar_vs_ham" ||
                         name == "tree_vs_pw2_convex")
                            ? PositionClass::Convex
                            : PositionClass::General;
    ColoredKP kp = ColoredKP::random(PointSet::generate(static_cast<int>(N), cls, s),
                                     bias, mix(s));
    return {kp, run_pipeline(name, kp, first, second, c).witness};
}

}  // namespace

SweepOutcome sweep_theorem(const std::string& pipeline, const PatternGraph& first,
                           const PatternGraph& second, int trials, std::uint64_t seed,
                           int size_constant) {
    SweepOutcome out;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t s = mix(seed + t);
        double bias = static_cast<double>(s % 101) / 100.0;
        ++out.runs;
        try {
            RunResult r = run_one(pipeline, first, second, size_constant, s, bias);
            auto rep = validate(r.kp, r.witness);
            if (!rep.ok) {
                out.failures.push_back("trial " + std::to_string(t) + ": " +
                                       rep.violations.front());
                continue;
            }
            (r.witness.color == EdgeColor::Red ? out.red_wins : out.blue_wins)++;
        } catch (const PipelineError& e) {
            if (std::string(e.what()).find("fell short") != std::string::npos)
                ++out.pipeline_errors;
            else
                out.failures.push_back("trial " + std::to_string(t) + ": " + e.what());
        } catch (const InternalError& e) {
            out.failures.push_back("trial " + std::to_string(t) + ": " + e.what());
        }
    }
    return out;
}

int calibrate_constant(const std::string& pipeline, const PatternGraph& first,
                       const PatternGraph& second, int trials, std::uint64_t seed,
                       int c_cap) {
    std::vector<char> clean(c_cap + 1, 0);
    for (int c = 1; c <= c_cap; ++c) {
        auto o = sweep_theorem(pipeline, first, second, trials, seed, c);
        clean[c] = o.failures.empty() && o.pipeline_errors == 0;
    }
    int value = -1;
    for (int c = 1; c <= c_cap; ++c)
        if (clean[c]) {
            value = c;
            break;
        }
    if (value < 0)
        throw PipelineError("calibrate_constant: no constant up to the cap is clean");
    for (int c = value + 1; c <= c_cap; ++c)
        if (!clean[c])
            throw InternalError("calibrate_constant: clean runs are not upward closed");
    return value;
}

}  // namespace ramsey
