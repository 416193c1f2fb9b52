#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wlpa/branching.hpp"
#include "wlpa/chen.hpp"

namespace wlpa::io {

using json = nlohmann::ordered_json;

json graph_to_json(const WeightedGraph& e);
WeightedGraph graph_from_json(const json& j);

json rep_to_json(const RepGraph& f);
// `base` overrides an embedded graph (used for files referencing a graph_file).
RepGraph rep_from_json(const json& j, std::optional<WeightedGraph> base = std::nullopt);

json partition_to_json(const RepGraph& f, const Partition& p);
Partition partition_from_json(const json& j, const RepGraph& f);

json module_vector_to_json(const RepGraph& f, const ModuleVector& x);

json morphism_to_json(const RepGraph& f, const RepGraph& g, const Morphism& m);
GraphHom hom_from_json(const json& j, const WeightedGraph& f, const WeightedGraph& g);

json branching_to_json(const BranchingSystem& sys);
BranchingSystem branching_from_json(const json& j);
json supported_function_to_json(const BranchingSystem& sys, const SupportedFunction& x);

json table_to_json(const ActionTable& t);
ActionTable table_from_json(const json& j);

json ev_path_to_json(const WeightedGraph& e, const EvPeriodicPath& p);
json sink_path_to_json(const WeightedGraph& e, const SinkPath& p);

json degree_to_json(const DegreeVector& d);

// Expression grammar: expr := term (('+'|'-') term)*; term := (coeff '*')?
// factor+; factor := VERTEXID | EDGEID '[' INT ']' '*'?; coeff := INT |
// INT '/' INT. Non-composable juxtapositions collapse to zero with a warning.
AlgebraElement parse_expr(const std::string& text, const WeightedGraph& e, const Field& field,
                          std::vector<std::string>* warnings = nullptr);

// DOT export: edges colored by structure edge, labeled by tag.
std::string to_dot(const RepGraph& f);

}  // namespace wlpa::io
