#include "ramsey/json_io.hpp"

#include <fstream>

namespace ramsey {

using nlohmann::json;

json to_json(const PointSet& ps) {
    json pts = json::array();
    for (const Point& p : ps.points()) pts.push_back({p.x, p.y});
    return {{"position_class",
             ps.position_class() == PositionClass::Convex ? "convex" : "general"},
            {"points", pts}};
}

PointSet point_set_from_json(const json& j) {
    std::string cls = j.at("position_class").get<std::string>();
    if (cls != "convex" && cls != "general")
        throw GeomError("unknown position_class: " + cls);
    std::vector<Point> pts;
    int id = 0;
    for (const auto& p : j.at("points"))
        pts.push_back({p.at(0).get<Coord>(), p.at(1).get<Coord>(), id++});
    return PointSet(std::move(pts),
                    cls == "convex" ? PositionClass::Convex : PositionClass::General);
}

json to_json(const PatternGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

PatternGraph pattern_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return PatternGraph(j.at("n").get<int>(), std::move(edges));
}

json to_json(const ColoredKP& kp) {
    json reds = json::array();
    for (auto [i, jj] : kp.red_edges()) reds.push_back({i, jj});
    return {{"points", to_json(kp.points())}, {"red_edges", reds}};
}

ColoredKP coloring_from_json(const json& j) {
    ColoredKP kp(point_set_from_json(j.at("points")));
    for (const auto& e : j.at("red_edges"))
        kp.set_color(e.at(0).get<int>(), e.at(1).get<int>(), EdgeColor::Red);
    return kp;
}

json to_json(const Embedding& e) {
    json ext = nullptr;
    if (e.extremal)
        ext = {{"axis", e.extremal->axis == ExtremalAxis::MaxX ? "max_x" : "max_y"},
               {"root", e.extremal->root}};
    return {{"pattern", to_json(e.pattern)},
            {"map", e.map},
            {"color", e.color == EdgeColor::Red ? "red" : "blue"},
            {"extremal", ext}};
}

Embedding embedding_from_json(const json& j) {
    std::string color = j.at("color").get<std::string>();
    if (color != "red" && color != "blue")
        throw GraphError("unknown edge color: " + color);
    Embedding e{pattern_from_json(j.at("pattern")),
                j.at("map").get<std::vector<int>>(),
                color == "red" ? EdgeColor::Red : EdgeColor::Blue, std::nullopt};
    const auto& ext = j.at("extremal");
    if (!ext.is_null()) {
        std::string axis = ext.at("axis").get<std::string>();
        if (axis != "max_x" && axis != "max_y")
            throw GraphError("unknown extremal axis: " + axis);
        e.extremal = ExtremalConstraint{
            axis == "max_x" ? ExtremalAxis::MaxX : ExtremalAxis::MaxY,
            ext.at("root").get<int>()};
    }
    return e;
}

json to_json(const Certificate& c) {
    return {{"pattern", to_json(c.witness.pattern)},
            {"map", c.witness.map},
            {"color", c.witness.color == EdgeColor::Red ? "red" : "blue"},
            {"extremal", to_json(c.witness)["extremal"]},
            {"fingerprint",
             {{"coloring_hash", c.fingerprint.coloring_hash},
              {"seed", c.fingerprint.seed},
              {"params", c.fingerprint.params}}}};
}

Certificate certificate_from_json(const json& j) {
    const auto& f = j.at("fingerprint");
    return {embedding_from_json(j),
            Fingerprint{f.at("coloring_hash").get<std::uint64_t>(),
                        f.at("seed").get<std::uint64_t>(),
                        f.at("params").get<std::string>()}};
}

PatternGraph parse_pattern_spec(const std::string& spec) {
    static const std::pair<const char*, PatternGraph (*)(int)> families[] = {
        {"path", &PatternGraph::path},     {"cycle", &PatternGraph::cycle},
        {"star", &PatternGraph::star},     {"fan", &PatternGraph::fan},
        {"complete", &PatternGraph::complete}};
    for (auto [name, make] : families) {
        std::string prefix = name;
        if (spec.size() > prefix.size() && spec.compare(0, prefix.size(), prefix) == 0 &&
            spec.find_first_not_of("0123456789", prefix.size()) == std::string::npos)
            return make(std::stoi(spec.substr(prefix.size())));
    }
    std::ifstream in(spec);
    if (!in) throw GraphError("cannot open pattern file: " + spec);
    return pattern_from_json(json::parse(in));
}

}  // namespace ramsey
