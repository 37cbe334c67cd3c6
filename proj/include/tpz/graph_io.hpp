#ifndef TPZ_GRAPH_IO_HPP
#define TPZ_GRAPH_IO_HPP

#include <string>

#include <json.hpp>

#include "tpz/graph.hpp"

namespace tpz {

// DOT text with the 1-based vertex names (x1, x2, ...).
std::string to_dot(const Graph& g, const std::string& name = "G");

// Interchange format: {"order": m, "edges": [[u,v], ...]} with 1-based
// endpoints. Import accepts an optional "labels" array (length-checked).
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace tpz

#endif
