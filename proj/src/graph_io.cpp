#include "tpz/graph_io.hpp"

#include <sstream>

namespace tpz {

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); v++)
    if (g.degree(v) == 0) out << "  " << vertex_name(v) << ";\n";
  for (auto [u, v] : g.edges())
    out << "  " << vertex_name(u) << " -- " << vertex_name(v) << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["order"] = g.order();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw std::invalid_argument("graph json: missing integer field 'order'");
  int m = j["order"].get<int>();
  if (m <= 0) throw std::invalid_argument("graph json: order must be positive");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph json: missing array field 'edges'");
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || int(j["labels"].size()) != m)
      throw std::invalid_argument("graph json: labels must list one name per vertex");
  }
  Graph g(m);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("graph json: each edge must be a pair of integers");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 1 || v < 1 || u > m || v > m)
      throw std::invalid_argument("graph json: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph json: self-loop rejected");
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

}  // namespace tpz
