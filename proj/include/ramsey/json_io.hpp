#pragma once

#include <json.hpp>

#include "ramsey/coloring.hpp"
#include "ramsey/geom.hpp"
#include "ramsey/graphs.hpp"

namespace ramsey {

// Schemas:
//   PointSet    {"position_class":"convex"|"general","points":[[x,y],...]}
//   PatternGraph{"n":int,"edges":[[u,v],...]}
//   ColoredKP   {"points":<PointSet>,"red_edges":[[i,j],...]}   (blue implied)
//   Certificate {"pattern":…,"map":[...],"color":"red"|"blue",
//                "extremal":null|{"axis":"max_x"|"max_y","root":int},
//                "fingerprint":{"coloring_hash":u64,"seed":u64,"params":str}}
// Parsers throw GeomError / GraphError on semantically invalid input.

nlohmann::json to_json(const PointSet& ps);
PointSet point_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PatternGraph& g);
PatternGraph pattern_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ColoredKP& kp);
ColoredKP coloring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

// Pattern shorthand: "path4", "cycle5", "star6", "fan4", "complete3" via the
// factories, otherwise the argument is read as a PatternGraph JSON file.
PatternGraph parse_pattern_spec(const std::string& spec);

}  // namespace ramsey
