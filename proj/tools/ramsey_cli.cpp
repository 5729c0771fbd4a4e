#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ramsey/json_io.hpp"
#include "ramsey/svg.hpp"
#include "ramsey/verifier.hpp"

using namespace ramsey;
using nlohmann::json;

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw GeomError("cannot open output file: " + out);
    f << j.dump(2) << "\n";
}

json load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GeomError("cannot open input file: " + path);
    return json::parse(f);
}

PositionClass parse_class(const std::string& s) {
    if (s == "convex") return PositionClass::Convex;
    if (s == "general") return PositionClass::General;
    throw GeomError("unknown position class: " + s);
}

int dispatch(int argc, char** argv) {
    CLI::App app{"geometric Ramsey workbench"};
    app.require_subcommand(1);

    std::string out, cls = "general", points_file, coloring_file, cert_file;
    std::string pattern_spec, first_spec, second_spec, pipeline, color_name = "red";
    std::uint64_t seed = 1;
    int n = 0, tree_n = 0, host_m = 0, constant = 2, trials = 100;
    int nmax = 8, shards = 1, shard = 0, scan_n = 0, c_cap = 6;
    int anchor_vertex = -1, anchor_point = -1;
    double bias = 0.5;
    bool lower = false;

    auto* gen = app.add_subcommand("gen", "generate a point set");
    gen->add_option("--n", n, "point count")->required();
    gen->add_option("--class", cls, "convex|general");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out);

    auto* color = app.add_subcommand("color", "color a complete geometric graph");
    color->add_option("--points", points_file, "point set JSON (generated if absent)");
    color->add_option("--n", n, "point count when generating");
    color->add_option("--class", cls, "convex|general");
    color->add_option("--seed", seed);
    color->add_option("--bias", bias, "red probability");
    color->add_flag("--lower-bound", lower, "block construction instead of random");
    color->add_option("--tree-n", tree_n, "block size + 1");
    color->add_option("--host-m", host_m, "block count + 1");
    color->add_option("--out", out);

    auto* embed = app.add_subcommand("embed", "non-crossing outerplanar embedding");
    embed->add_option("--points", points_file)->required();
    embed->add_option("--pattern", pattern_spec)->required();
    embed->add_option("--anchor-vertex", anchor_vertex);
    embed->add_option("--anchor-point", anchor_point);
    embed->add_option("--out", out);

    auto* pipe = app.add_subcommand("pipeline", "run an embedder pipeline");
    pipe->add_option("name", pipeline, "pipeline name")->required();
    pipe->add_option("--coloring", coloring_file, "instance JSON (generated if absent)");
    pipe->add_option("--first", first_spec, "first pattern")->required();
    pipe->add_option("--second", second_spec, "second pattern");
    pipe->add_option("--constant", constant, "size constant c");
    pipe->add_option("--seed", seed);
    pipe->add_option("--bias", bias);
    pipe->add_option("--out", out);

    auto* oracle = app.add_subcommand("oracle", "exhaustive monochromatic search");
    oracle->add_option("--coloring", coloring_file)->required();
    oracle->add_option("--pattern", pattern_spec)->required();
    oracle->add_option("--color", color_name, "red|blue");
    oracle->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "exhaustive verification");
    verify->require_subcommand(1);
    auto* exact = verify->add_subcommand("exact", "exact convex Ramsey number");
    exact->add_option("--tree", first_spec)->required();
    exact->add_option("--host", second_spec)->required();
    exact->add_option("--nmax", nmax);
    exact->add_option("--out", out);
    auto* scan = verify->add_subcommand("scan", "counterexample orbits at one size");
    scan->add_option("--tree", first_spec)->required();
    scan->add_option("--host", second_spec)->required();
    scan->add_option("--n", scan_n)->required();
    scan->add_option("--shards", shards);
    scan->add_option("--shard", shard);
    scan->add_option("--out", out);
    auto* sweep = verify->add_subcommand("sweep", "random sweep of one pipeline");
    sweep->add_option("--pipeline", pipeline)->required();
    sweep->add_option("--first", first_spec)->required();
    sweep->add_option("--second", second_spec)->required();
    sweep->add_option("--trials", trials);
    sweep->add_option("--seed", seed);
    sweep->add_option("--constant", constant);
    sweep->add_option("--out", out);

    auto* cal = app.add_subcommand("calibrate", "smallest clean size constant");
    cal->add_option("--pipeline", pipeline)->required();
    cal->add_option("--first", first_spec)->required();
    cal->add_option("--second", second_spec)->required();
    cal->add_option("--trials", trials);
    cal->add_option("--seed", seed);
    cal->add_option("--c-cap", c_cap);
    cal->add_option("--out", out);

    auto* render = app.add_subcommand("render", "SVG figure of an instance");
    render->add_option("--coloring", coloring_file)->required();
    render->add_option("--certificate", cert_file, "witness overlay");
    render->add_option("--out", out)->required();

    CLI11_PARSE(app, argc, argv);

    auto run_config = [&](const std::string& command) {
        return json{{"command", command}, {"seed", seed},
                    {"first", first_spec.empty() ? pattern_spec : first_spec},
                    {"second", second_spec}, {"constant", constant}};
    };

    if (*gen) {
        auto ps = PointSet::generate(n, parse_class(cls), seed);
        json j = to_json(ps);
        j["run_config"] = run_config("gen");
        emit(j, out);
        return 0;
    }
    if (*color) {
        auto ps = points_file.empty()
                      ? PointSet::generate(n, parse_class(cls), seed)
                      : point_set_from_json(load(points_file));
        ColoredKP kp = lower ? ColoredKP::lower_bound(tree_n, host_m, ps)
                             : ColoredKP::random(ps, bias, mix(seed));
        json j = to_json(kp);
        j["run_config"] = run_config("color");
        emit(j, out);
        return 0;
    }
    if (*embed) {
        auto ps = point_set_from_json(load(points_file));
        auto g = parse_pattern_spec(pattern_spec);
        std::optional<Anchor> anchor;
        if (anchor_vertex >= 0 || anchor_point >= 0)
            anchor = Anchor{std::max(anchor_vertex, 0), std::max(anchor_point, 0)};
        Embedding e = embed_outerplanar(g, ps, anchor);
        json j = to_json(e);
        j["run_config"] = run_config("embed");
        emit(j, out);
        return 0;
    }
    if (*pipe) {
        auto first = parse_pattern_spec(first_spec);
        auto second = second_spec.empty() ? first : parse_pattern_spec(second_spec);
        std::optional<ColoredKP> kp;
        if (!coloring_file.empty()) {
            kp = coloring_from_json(load(coloring_file));
        } else {
            long long N = pipeline_size(pipeline, first, second, constant);
            auto pc = (pipeline == "convex_caterpillar_vs_ham" ||
                       pipeline == "tree_vs_pw2_convex")
                          ? PositionClass::Convex
                          : PositionClass::General;
            kp = ColoredKP::random(PointSet::generate(static_cast<int>(N), pc, seed),
                                   bias, mix(seed));
        }
        Certificate cert = run_pipeline(pipeline, *kp, first, second, constant);
        auto rep = validate(*kp, cert.witness);
        if (!rep.ok) throw InternalError("certificate failed validation: " +
                                         rep.violations.front());
        json j = to_json(cert);
        j["run_config"] = run_config("pipeline " + pipeline);
        emit(j, out);
        return 0;
    }
    if (*oracle) {
        auto kp = coloring_from_json(load(coloring_file));
        auto g = parse_pattern_spec(pattern_spec);
        EdgeColor c = color_name == "blue" ? EdgeColor::Blue : EdgeColor::Red;
        auto found = find_mono_noncrossing(kp, g, c);
        json j = {{"found", found.has_value()},
                  {"embedding", found ? to_json(*found) : json(nullptr)}};
        j["run_config"] = run_config("oracle");
        emit(j, out);
        return 0;
    }
    if (*exact) {
        auto rep = exact_convex_ramsey(parse_pattern_spec(first_spec),
                                       parse_pattern_spec(second_spec), nmax);
        json j = {{"value", rep.value},
                  {"colorings_scanned", rep.colorings_scanned},
                  {"counterexample_orbits", rep.counterexamples}};
        j["run_config"] = run_config("verify exact");
        emit(j, out);
        return 0;
    }
    if (*scan) {
        auto cexs = convex_counterexamples(parse_pattern_spec(first_spec),
                                           parse_pattern_spec(second_spec), scan_n,
                                           shards, shard);
        json j = {{"n", scan_n}, {"shards", shards}, {"shard", shard},
                  {"counterexample_orbits", cexs}};
        j["run_config"] = run_config("verify scan");
        emit(j, out);
        return 0;
    }
    if (*sweep) {
        auto o = sweep_theorem(pipeline, parse_pattern_spec(first_spec),
                               parse_pattern_spec(second_spec), trials, seed, constant);
        json j = {{"runs", o.runs},           {"red_wins", o.red_wins},
                  {"blue_wins", o.blue_wins}, {"pipeline_errors", o.pipeline_errors},
                  {"failures", o.failures}};
        j["run_config"] = run_config("verify sweep " + pipeline);
        emit(j, out);
        return o.failures.empty() ? 0 : 3;
    }
    if (*cal) {
        int c = calibrate_constant(pipeline, parse_pattern_spec(first_spec),
                                   parse_pattern_spec(second_spec), trials, seed, c_cap);
        json j = {{"constant", c}};
        j["run_config"] = run_config("calibrate " + pipeline);
        emit(j, out);
        return 0;
    }
    if (*render) {
        auto kp = coloring_from_json(load(coloring_file));
        std::optional<Embedding> witness;
        if (!cert_file.empty()) witness = certificate_from_json(load(cert_file)).witness;
        std::ofstream f(out);
        if (!f) throw GeomError("cannot open output file: " + out);
        f << render_svg(kp, witness);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const PipelineError& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 2;
    } catch (const GeomError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const GraphError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    }
}
