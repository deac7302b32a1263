#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qwsed/graph.hpp"

namespace qwsed {

/// {"n": int, "edges": [[u,v,w],...], "labels": [...]?}. Weights are
/// written as decimal floats and round-trip exactly for integer values.
inline nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges) edges.push_back({e.u, e.v, e.w});
  j["edges"] = edges;
  if (g.labels) j["labels"] = *g.labels;
  return j;
}

inline WeightedGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    fail(errc::bad_input, "graph JSON needs fields 'n' and 'edges'");
  if (!j.at("n").is_number_integer()) fail(errc::bad_input, "field 'n' must be an integer");
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& item : j.at("edges")) {
    if (!item.is_array() || item.size() != 3)
      fail(errc::bad_input, "each edge must be a [u, v, w] triple");
    if (!item[0].is_number_integer() || !item[1].is_number_integer() || !item[2].is_number())
      fail(errc::bad_input, "edge entries must be int, int, number");
    edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
  }
  std::optional<std::vector<std::string>> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) fail(errc::bad_input, "field 'labels' must be an array");
    labels = j.at("labels").get<std::vector<std::string>>();
  }
  return from_edge_list(n, std::move(edges), std::move(labels));
}

inline WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::bad_input, path + ": " + e.what());
  }
  return graph_from_json(j);
}

inline void save_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::bad_input, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qwsed
