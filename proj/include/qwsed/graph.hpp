#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwsed/error.hpp"

namespace qwsed {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v && a.w == b.w;
}

/// Simple loopless weighted graph with nonzero edge weights.
/// Treat as immutable after construction; the adjacency lists are
/// derived once in from_edge_list.
struct WeightedGraph {
  int n = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<std::string>> labels;
  // adj[u] = (neighbor, weight), sorted by neighbor index
  std::vector<std::vector<std::pair<int, double>>> adj;

  int degree(int u) const { return static_cast<int>(adj.at(u).size()); }

  Eigen::MatrixXd adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : edges) {
      a(e.u, e.v) = e.w;
      a(e.v, e.u) = e.w;
    }
    return a;
  }

  bool is_unweighted(double tol = 1e-12) const {
    return std::all_of(edges.begin(), edges.end(),
                       [&](const Edge& e) { return std::abs(e.w - 1.0) <= tol; });
  }
};

inline std::string edge_str(int u, int v, double w) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")";
}

/// Validates and builds a graph. Rejects loops, zero weights, duplicate
/// pairs and out-of-range endpoints, naming the offending edge.
inline WeightedGraph from_edge_list(int n, std::vector<Edge> edges,
                                    std::optional<std::vector<std::string>> labels = std::nullopt) {
  if (n < 0) fail(errc::bad_params, "vertex count must be nonnegative");
  if (labels && static_cast<int>(labels->size()) != n)
    fail(errc::bad_params, "labels size must equal vertex count");
  WeightedGraph g;
  g.n = n;
  g.adj.resize(n);
  std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      fail(errc::index_out_of_range, "edge " + edge_str(e.u, e.v, e.w));
    if (e.u == e.v) fail(errc::self_loop, "edge " + edge_str(e.u, e.v, e.w));
    if (e.w == 0.0) fail(errc::zero_weight, "edge " + edge_str(e.u, e.v, e.w));
    if (seen[e.u][e.v]) fail(errc::duplicate_edge, "edge " + edge_str(e.u, e.v, e.w));
    seen[e.u][e.v] = seen[e.v][e.u] = 1;
    g.adj[e.u].emplace_back(e.v, e.w);
    g.adj[e.v].emplace_back(e.u, e.w);
  }
  g.edges = std::move(edges);
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  g.labels = std::move(labels);
  return g;
}

inline bool is_connected(const WeightedGraph& g) {
  if (g.n <= 1) return true;
  std::vector<char> vis(g.n, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [v, w] : g.adj[u]) {
      (void)w;
      if (!vis[v]) {
        vis[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == g.n;
}

inline void require_connected(const WeightedGraph& g, const std::string& where) {
  if (!is_connected(g)) fail(errc::disconnected, where + " requires a connected graph");
}

}  // namespace qwsed
