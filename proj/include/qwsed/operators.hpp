#pragma once

#include <vector>

#include "qwsed/graph.hpp"

namespace qwsed {

/// Tensor double: vertex (s,u) maps to index s*n + u; each edge (u,v,w)
/// contributes ((0,u),(1,v)) and ((0,v),(1,u)). Disconnects iff the input
/// is bipartite.
inline WeightedGraph bipartite_double(const WeightedGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(2 * g.edges.size());
  for (const Edge& e : g.edges) {
    edges.push_back({e.u, g.n + e.v, e.w});
    edges.push_back({e.v, g.n + e.u, e.w});
  }
  return from_edge_list(2 * g.n, std::move(edges));
}

/// Each edge is replaced by a 2-path through a new midpoint carrying the
/// same weight. Midpoints are appended after the original vertices in
/// stored edge order, so the result has |V| + |E| vertices.
inline WeightedGraph subdivision(const WeightedGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(2 * g.edges.size());
  int mid = g.n;
  for (const Edge& e : g.edges) {
    edges.push_back({e.u, mid, e.w});
    edges.push_back({mid, e.v, e.w});
    ++mid;
  }
  return from_edge_list(g.n + static_cast<int>(g.edges.size()), std::move(edges));
}

/// Box product: vertex (u,v) maps to u*|V(H)| + v.
inline WeightedGraph cartesian_product(const WeightedGraph& g, const WeightedGraph& h) {
  std::vector<Edge> edges;
  edges.reserve(g.edges.size() * h.n + h.edges.size() * g.n);
  for (int u = 0; u < g.n; ++u)
    for (const Edge& e : h.edges) edges.push_back({u * h.n + e.u, u * h.n + e.v, e.w});
  for (const Edge& e : g.edges)
    for (int v = 0; v < h.n; ++v) edges.push_back({e.u * h.n + v, e.v * h.n + v, e.w});
  return from_edge_list(g.n * h.n, std::move(edges));
}

/// One rooted graph per vertex of the base graph; the root is identified
/// with its base vertex. Base vertices keep indices 0..n-1, the non-root
/// vertices of each attachment follow in base-vertex order.
inline WeightedGraph rooted_product(const WeightedGraph& g,
                                    const std::vector<std::pair<WeightedGraph, int>>& attachments) {
  if (static_cast<int>(attachments.size()) != g.n)
    fail(errc::arity_mismatch, "need exactly one rooted attachment per vertex, got " +
                                   std::to_string(attachments.size()) + " for " +
                                   std::to_string(g.n) + " vertices");
  std::vector<Edge> edges = g.edges;
  int next = g.n;
  for (int i = 0; i < g.n; ++i) {
    const auto& [y, root] = attachments[i];
    if (root < 0 || root >= y.n)
      fail(errc::bad_root, "root " + std::to_string(root) + " out of range for attachment " +
                               std::to_string(i));
    std::vector<int> map(y.n, -1);
    map[root] = i;
    for (int w = 0; w < y.n; ++w)
      if (w != root) map[w] = next++;
    for (const Edge& e : y.edges) edges.push_back({map[e.u], map[e.v], e.w});
  }
  return from_edge_list(next, std::move(edges));
}

}  // namespace qwsed
