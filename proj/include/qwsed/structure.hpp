#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "qwsed/graph.hpp"

namespace qwsed {

/// Two-coloring of a connected bipartite graph. Vertex 0 is on side_a.
struct Bipartition {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

/// BFS 2-coloring. Absent when the graph has an odd cycle.
inline std::optional<Bipartition> bipartition(const WeightedGraph& g) {
  require_connected(g, "bipartition");
  std::vector<int> color(g.n, -1);
  if (g.n == 0) return Bipartition{};
  color[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (auto [v, w] : g.adj[u]) {
      (void)w;
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        queue.push_back(v);
      } else if (color[v] == color[u]) {
        return std::nullopt;
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < g.n; ++v) (color[v] == 0 ? b.side_a : b.side_b).push_back(v);
  return b;
}

enum class twin_kind { independent, clique };

struct TwinSet {
  std::vector<int> members;  // sorted, size >= 2
  twin_kind kind = twin_kind::independent;
};

/// Maximal twin sets of an unweighted graph. Vertices with equal open
/// neighborhoods form independent sets, equal closed neighborhoods cliques;
/// the two class families are disjoint for sets of size >= 2.
inline std::vector<TwinSet> twin_sets(const WeightedGraph& g) {
  if (!g.is_unweighted())
    fail(errc::not_unweighted, "twin detection is defined for unweighted graphs");
  std::map<std::vector<int>, std::vector<int>> open_classes, closed_classes;
  for (int u = 0; u < g.n; ++u) {
    std::vector<int> nb;
    nb.reserve(g.adj[u].size());
    for (auto [v, w] : g.adj[u]) {
      (void)w;
      nb.push_back(v);
    }
    open_classes[nb].push_back(u);
    nb.push_back(u);
    std::sort(nb.begin(), nb.end());
    closed_classes[nb].push_back(u);
  }
  std::vector<TwinSet> out;
  for (auto& [key, members] : open_classes)
    if (members.size() >= 2) out.push_back({members, twin_kind::independent});
  for (auto& [key, members] : closed_classes)
    if (members.size() >= 2) out.push_back({members, twin_kind::clique});
  std::sort(out.begin(), out.end(),
            [](const TwinSet& a, const TwinSet& b) { return a.members.front() < b.members.front(); });
  return out;
}

struct MatchingReport {
  int count_capped = 0;  // min(2, number of perfect matchings)
  std::optional<std::vector<Edge>> sample;
};

namespace detail {

inline void count_pm_rec(const WeightedGraph& g, std::vector<char>& used, int matched,
                         std::vector<Edge>& current, MatchingReport& report) {
  if (report.count_capped >= 2) return;
  if (2 * matched == g.n) {
    if (report.count_capped == 0) report.sample = current;
    ++report.count_capped;
    return;
  }
  int u = -1;
  for (int i = 0; i < g.n; ++i)
    if (!used[i]) {
      u = i;
      break;
    }
  for (auto [v, w] : g.adj[u]) {
    if (used[v]) continue;
    used[u] = used[v] = 1;
    current.push_back({u, v, w});
    count_pm_rec(g, used, matched + 1, current, report);
    current.pop_back();
    used[u] = used[v] = 0;
    if (report.count_capped >= 2) return;
  }
}

}  // namespace detail

/// Counts perfect matchings, stopping after the second one. Exact for
/// counts 0 and 1; odd order short-circuits to 0.
inline MatchingReport count_perfect_matchings_capped(const WeightedGraph& g) {
  MatchingReport report;
  if (g.n % 2 != 0) return report;
  if (g.n == 0) {
    report.count_capped = 1;
    report.sample = std::vector<Edge>{};
    return report;
  }
  std::vector<char> used(g.n, 0);
  std::vector<Edge> current;
  detail::count_pm_rec(g, used, 0, current, report);
  return report;
}

/// A vertex together with its degree-one neighbors (at least two of them).
struct PendantGroup {
  int center = 0;
  std::vector<int> pendants;  // sorted
};

inline std::vector<PendantGroup> pendant_groups(const WeightedGraph& g) {
  std::map<int, std::vector<int>> by_center;
  for (int u = 0; u < g.n; ++u)
    if (g.degree(u) == 1) by_center[g.adj[u][0].first].push_back(u);
  std::vector<PendantGroup> out;
  for (auto& [c, ps] : by_center)
    if (ps.size() >= 2) out.push_back({c, ps});
  return out;
}

inline double edge_weight(const WeightedGraph& g, int u, int v) {
  for (auto [x, w] : g.adj[u])
    if (x == v) return w;
  fail(errc::bad_params, "no edge " + std::to_string(u) + "-" + std::to_string(v));
}

}  // namespace qwsed
