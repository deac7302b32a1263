#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qwsed/classify.hpp"
#include "qwsed/families.hpp"
#include "qwsed/oracles.hpp"

namespace qwsed {

struct CaseResult {
  bool pass = true;
  std::string detail;
};

struct ReproCase {
  int id = 0;
  std::string name;
  std::string suite;  // paths | cycles | families | products | doubles
  std::function<CaseResult()> run;
};

namespace repro {

struct Check {
  bool ok = true;
  std::string detail = "ok";
  void expect(bool cond, const std::string& msg) {
    if (ok && !cond) {
      ok = false;
      detail = msg;
    }
  }
  CaseResult result() const { return {ok, detail}; }
};

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

inline double nonzero_weight(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  double w = 0.0;
  while (std::abs(w) < 1e-3) w = dist(rng);
  return w;
}

/// Random connected weighted graph: random attachment tree plus extra edges.
inline WeightedGraph random_connected(int n, std::mt19937& rng, double extra_edge_prob = 0.3) {
  std::vector<Edge> edges;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % v);
    edges.push_back({u, v, nonzero_weight(rng)});
    has[u][v] = has[v][u] = 1;
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!has[u][v] && coin(rng) < extra_edge_prob) edges.push_back({u, v, nonzero_weight(rng)});
  return from_edge_list(n, std::move(edges));
}

inline WeightedGraph random_tree(int n, std::mt19937& rng, bool weighted = true) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({static_cast<int>(rng() % v), v, weighted ? nonzero_weight(rng) : 1.0});
  return from_edge_list(n, std::move(edges));
}

/// Random connected bipartite graph: a cross-side tree plus cross edges.
inline WeightedGraph random_bipartite(int n, std::mt19937& rng) {
  int a = 1 + static_cast<int>(rng() % (n - 1));
  std::vector<int> side(n);
  for (int i = 0; i < n; ++i) side[i] = i < a ? 0 : 1;
  std::vector<Edge> edges;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    // attach to a random earlier vertex on the other side, if any
    std::vector<int> other;
    for (int u = 0; u < v; ++u)
      if (side[u] != side[v]) other.push_back(u);
    if (other.empty()) {
      side[v] = 1 - side[v];
      for (int u = 0; u < v; ++u)
        if (side[u] != side[v]) other.push_back(u);
    }
    int u = other[rng() % other.size()];
    edges.push_back({u, v, nonzero_weight(rng)});
    has[u][v] = has[v][u] = 1;
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (side[u] != side[v] && !has[u][v] && coin(rng) < 0.3)
        edges.push_back({u, v, nonzero_weight(rng)});
  return from_edge_list(n, std::move(edges));
}

inline ClassifyOptions fast_opts() {
  ClassifyOptions o;
  o.evidence_scan = false;
  return o;
}

// --- criterion 1 -----------------------------------------------------------

inline CaseResult complete_graph_minima() {
  Check c;
  const double pi = std::numbers::pi;
  for (int n = 3; n <= 10 && c.ok; ++n) {
    WeightedGraph g = build({family::complete, {{"n", n}}});
    SpectralDecomposition s = eigendecompose(g);
    ScanResult r = numeric_scan(s, 0);
    c.expect(r.period_exact, "K_" + std::to_string(n) + " should scan over one period");
    c.expect(std::abs(r.global_min - (1.0 - 2.0 / n)) <= 1e-6,
             "K_" + std::to_string(n) + " min " + fmt(r.global_min) + " != " + fmt(1.0 - 2.0 / n));
    c.expect(std::abs(r.argmin - pi / n) <= 1e-3,
             "K_" + std::to_string(n) + " argmin " + fmt(r.argmin) + " != pi/" + std::to_string(n));
  }
  return c.result();
}

// --- criterion 2 -----------------------------------------------------------

inline CaseResult unweighted_paths() {
  Check c;
  const double pi = std::numbers::pi;
  for (int n = 3; n <= 12 && c.ok; ++n) {
    WeightedGraph g = build({family::path, {{"n", n}}});
    SpectralDecomposition s = eigendecompose(g);
    for (const Verdict& v : classify_all(g, s, fast_opts()))
      c.expect(v.not_sedentary(), "P_" + std::to_string(n) + " vertex " + std::to_string(v.vertex) +
                                      " got " + verdict_status_name(v.status));
  }
  for (int n : {9, 11, 13})
    for (int u = 1; u <= n && c.ok; u += 2) {
      double re = path_diagonal_oracle(n, u, pi / std::sqrt(2.0)).real();
      c.expect(re <= 1e-9, "P_" + std::to_string(n) + " vertex " + std::to_string(u) +
                               " diagonal at pi/sqrt2 is " + fmt(re));
    }
  for (int n = 3; n <= 12 && c.ok; ++n) {
    WeightedGraph g = build({family::path, {{"n", n}}});
    SpectralDecomposition s = eigendecompose(g);
    for (int u = 1; u <= n && c.ok; ++u)
      for (int i = 1; i <= 100 && c.ok; ++i) {
        double t = 0.1 * i;
        cd a = path_diagonal_oracle(n, u, t);
        cd b = walk_diagonal(s, u - 1, t);
        c.expect(std::abs(a - b) <= 1e-9, "path oracle mismatch n=" + std::to_string(n) + " u=" +
                                              std::to_string(u) + " t=" + fmt(t));
      }
  }
  return c.result();
}

// --- criterion 3 -----------------------------------------------------------

inline CaseResult even_cycles() {
  Check c;
  const double pi = std::numbers::pi;
  for (int n : {4, 8, 12, 16}) {
    double re = cycle_diagonal_oracle(n, pi / 2.0).real();
    c.expect(re <= 1e-9, "C_" + std::to_string(n) + " diagonal at pi/2 is " + fmt(re));
  }
  for (int k : {3, 5}) {
    WeightedGraph odd = build({family::cycle, {{"n", k}}});
    SpectralDecomposition s = eigendecompose(odd);
    c.expect(s.zero_index() < 0, "C_" + std::to_string(k) + " should be nonsingular");
    Verdict base = classify_vertex(odd, s, 0, fast_opts());
    Verdict copies = double_classify(odd, s, 0, base);
    c.expect(copies.not_sedentary(), "double of C_" + std::to_string(k) + " copies should be not sedentary");
    WeightedGraph dbl = bipartite_double(odd);
    c.expect(dbl.n == 2 * k && is_connected(dbl), "double of odd cycle should be C_{2k}");
    SpectralDecomposition ds = eigendecompose(dbl);
    for (const Verdict& v : classify_all(dbl, ds, fast_opts()))
      c.expect(v.not_sedentary(), "C_" + std::to_string(2 * k) + " vertex " +
                                      std::to_string(v.vertex) + " got " +
                                      verdict_status_name(v.status));
  }
  return c.result();
}

// --- criterion 4 -----------------------------------------------------------

inline CaseResult subdivided_stars() {
  Check c;
  const double pi = std::numbers::pi;
  for (int m = 2; m <= 8 && c.ok; ++m) {
    FamilySpec spec{family::subdivided_star, {{"m", m}}};
    WeightedGraph g = build(spec);
    SpectralDecomposition s = eigendecompose(g);
    auto exp_spec = *expected(spec).spectrum;
    c.expect(s.count() == exp_spec.size(), "G(" + std::to_string(m) + ") distinct eigenvalue count");
    for (std::size_t i = 0; i < exp_spec.size() && c.ok; ++i) {
      c.expect(std::abs(s.eigenvalues[i] - exp_spec[i].first) <= 1e-8,
               "G(" + std::to_string(m) + ") eigenvalue " + fmt(s.eigenvalues[i]));
      c.expect(s.multiplicities[i] == exp_spec[i].second,
               "G(" + std::to_string(m) + ") multiplicity at " + fmt(exp_spec[i].first));
    }
    for (const Verdict& v : classify_all(g, s, fast_opts()))
      c.expect(v.not_sedentary(), "G(" + std::to_string(m) + ") vertex " +
                                      std::to_string(v.vertex) + " got " +
                                      verdict_status_name(v.status));
    if (m == 3) {
      // sqrt(m+1) = 2 is even: the leaf case is settled by the sign of the
      // diagonal at t = pi
      double re = walk_diagonal(s, m + 1, pi).real();
      c.expect(re < -1e-9, "G(3) leaf diagonal at pi should be negative, got " + fmt(re));
    }
  }
  return c.result();
}

// --- criterion 5 -----------------------------------------------------------

inline CaseResult weighted_odd_path() {
  Check c;
  WeightedGraph g = build({family::weighted_end_path, {{"n", 5}, {"alpha", 2.0}}});
  SpectralDecomposition s = eigendecompose(g);
  int zi = s.zero_index();
  c.expect(zi >= 0, "0 should be an eigenvalue");
  if (c.ok) c.expect(std::abs(s.diag(zi, 0) - 2.0 / 3.0) <= 1e-9,
                     "(E_0)_{0,0} = " + fmt(s.diag(zi, 0)) + " != 2/3");
  Verdict v = classify_vertex(g, s, 0, fast_opts());
  c.expect(v.sedentary(), "end vertex should be sedentary");
  if (v.lower_bound)
    c.expect(std::abs(*v.lower_bound - 1.0 / 3.0) <= 1e-9,
             "certified bound " + fmt(*v.lower_bound) + " != 1/3");
  else
    c.expect(false, "missing lower bound");
  ScanOptions so;
  so.horizon = 100.0;
  ScanResult r = numeric_scan(s, 0, so);
  c.expect(r.global_min >= 1.0 / 3.0 - 1e-6, "scan min " + fmt(r.global_min) + " below 1/3");
  return c.result();
}

// --- criterion 6 -----------------------------------------------------------

inline CaseResult weighted_c4k_case() {
  Check c;
  WeightedGraph g = build({family::weighted_c4k, {{"k", 2}, {"alpha", 3.0}}});
  SpectralDecomposition s = eigendecompose(g);
  int zi = s.zero_index();
  c.expect(zi >= 0, "0 should be an eigenvalue");
  if (c.ok) c.expect(s.diag(zi, 1) >= 0.75 - 1e-9, "(E_0)_{1,1} = " + fmt(s.diag(zi, 1)));
  ScanResult r = numeric_scan(s, 1);
  c.expect(r.global_min >= 0.5 - 1e-6, "scan min " + fmt(r.global_min) + " below 1/2");
  return c.result();
}

// --- criterion 7 -----------------------------------------------------------

inline CaseResult cocktail_parties() {
  Check c;
  for (int m = 3; m <= 8 && c.ok; ++m) {
    WeightedGraph g = build({family::cocktail_party, {{"m", m}}});
    SpectralDecomposition s = eigendecompose(g);
    verdict_status want = m % 2 == 1 ? verdict_status::sedentary : verdict_status::not_sedentary;
    std::vector<Verdict> verdicts = classify_all(g, s, fast_opts());
    for (const Verdict& v : verdicts) {
      c.expect(v.status == want, "cocktail m=" + std::to_string(m) + " vertex " +
                                     std::to_string(v.vertex) + " got " +
                                     verdict_status_name(v.status));
      c.expect(v.certificate.kind == certificate_kind::half_case_parity,
               "cocktail m=" + std::to_string(m) + " should decide via the half case");
    }
    // transfer to the two copies in the tensor double
    Verdict copies = double_classify(g, s, 0, verdicts[0], fast_opts());
    c.expect(copies.status == want, "cocktail m=" + std::to_string(m) + " double transfer");
    // and the direct classification of the double agrees
    WeightedGraph dbl = bipartite_double(g);
    SpectralDecomposition ds = eigendecompose(dbl);
    Verdict direct = classify_vertex(dbl, ds, 0, fast_opts());
    c.expect(direct.status == want, "cocktail m=" + std::to_string(m) + " double direct status");
  }
  return c.result();
}

// --- criterion 8 -----------------------------------------------------------

inline CaseResult products() {
  Check c;
  const double pi = std::numbers::pi;
  WeightedGraph h23 = build({family::hamming, {{"d", 2}, {"q", 3}}});
  SpectralDecomposition s = eigendecompose(h23);
  for (const Verdict& v : classify_all(h23, s, fast_opts())) {
    c.expect(v.sedentary(), "H(2,3) vertex " + std::to_string(v.vertex) + " got " +
                                verdict_status_name(v.status));
    if (v.lower_bound)
      c.expect(std::abs(*v.lower_bound - 1.0 / 9.0) <= 1e-9,
               "H(2,3) bound " + fmt(*v.lower_bound) + " != 1/9");
    else
      c.expect(false, "H(2,3) missing bound");
  }
  double mag = std::abs(walk_diagonal(s, 0, pi / 3.0));
  c.expect(std::abs(mag - 1.0 / 9.0) <= 1e-9, "|U(pi/3)| = " + fmt(mag) + " != 1/9");

  WeightedGraph grid = cartesian_product(build({family::path, {{"n", 2}}}),
                                         build({family::path, {{"n", 3}}}));
  SpectralDecomposition gs = eigendecompose(grid);
  for (const Verdict& v : classify_all(grid, gs, fast_opts()))
    c.expect(v.not_sedentary(), "P_2 x P_3 vertex " + std::to_string(v.vertex) + " got " +
                                    verdict_status_name(v.status));

  std::mt19937 rng(8601);
  std::uniform_real_distribution<double> tdist(0.0, 10.0);
  for (int trial = 0; trial < 10 && c.ok; ++trial) {
    int na = 2 + static_cast<int>(rng() % 3), nb = 2 + static_cast<int>(rng() % 3);
    WeightedGraph a = random_connected(na, rng), b = random_connected(nb, rng);
    WeightedGraph prod = cartesian_product(a, b);
    SpectralDecomposition sa = eigendecompose(a), sb = eigendecompose(b),
                          sp = eigendecompose(prod);
    for (int k = 0; k < 20 && c.ok; ++k) {
      double t = tdist(rng);
      for (int u = 0; u < na && c.ok; ++u)
        for (int v = 0; v < nb && c.ok; ++v) {
          double lhs = std::abs(walk_diagonal(sp, u * nb + v, t));
          double rhs = std::abs(walk_diagonal(sa, u, t)) * std::abs(walk_diagonal(sb, v, t));
          c.expect(std::abs(lhs - rhs) <= 1e-9,
                   "product law violated by " + fmt(std::abs(lhs - rhs)));
        }
    }
  }
  return c.result();
}

// --- criterion 9 -----------------------------------------------------------

inline CaseResult shrikhande_doob() {
  Check c;
  const double pi = std::numbers::pi;
  WeightedGraph sh = build({family::shrikhande, nlohmann::json::object()});
  SpectralDecomposition s = eigendecompose(sh);
  ScanOptions so;
  so.horizon = pi;
  ScanResult r = numeric_scan(s, 0, so);
  c.expect(std::abs(r.global_min - 0.25) <= 1e-6, "shrikhande min " + fmt(r.global_min));
  c.expect(std::abs(r.argmin - pi / 4.0) <= 1e-3, "shrikhande argmin " + fmt(r.argmin));

  WeightedGraph doob = build({family::doob, {{"l", 1}, {"d", 1}}});
  SpectralDecomposition ds = eigendecompose(doob);
  ScanResult dr = numeric_scan(ds, 0);
  c.expect(std::abs(dr.global_min - 0.125) <= 1e-6, "doob min " + fmt(dr.global_min));
  c.expect(std::abs(dr.argmin - pi / 4.0) <= 1e-3, "doob argmin " + fmt(dr.argmin));
  return c.result();
}

// --- criterion 10 ----------------------------------------------------------

inline CaseResult pendant_path_infimum() {
  Check c;
  WeightedGraph g = build({family::pendant_path_gn, {{"n", 5}}});
  SpectralDecomposition s = eigendecompose(g);
  ScanOptions so;
  so.horizon = 2000.0;
  ScanResult r = numeric_scan(s, 5, so);
  c.expect(r.global_min >= 0.2 - 1e-6 && r.global_min <= 0.22,
           "G_5 pendant scan min " + fmt(r.global_min) + " outside [0.2, 0.22]");
  return c.result();
}

// --- criterion 11 ----------------------------------------------------------

inline CaseResult matched_trees_and_unicyclic() {
  Check c;
  std::mt19937 rng(1101);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    int k = 2 + static_cast<int>(rng() % 7);  // tree order k, doubled below
    WeightedGraph t = random_tree(k, rng, false);
    std::vector<std::pair<WeightedGraph, int>> att;
    for (int i = 0; i < k; ++i)
      att.push_back({from_edge_list(2, {{0, 1, 1.0}}), 0});
    WeightedGraph tk2 = rooted_product(t, att);
    std::vector<Edge> weighted = tk2.edges;
    for (Edge& e : weighted) e.w = nonzero_weight(rng);
    WeightedGraph g = from_edge_list(tk2.n, std::move(weighted));
    SpectralDecomposition s = eigendecompose(g);
    c.expect(s.zero_index() < 0, "tree with perfect matching should be nonsingular");
    for (const Verdict& v : classify_all(g, s, fast_opts()))
      c.expect(v.not_sedentary(), "matched tree vertex " + std::to_string(v.vertex) + " got " +
                                      verdict_status_name(v.status));
  }
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    int n = 3 + static_cast<int>(rng() % 10);
    std::vector<Edge> edges{{0, 1, nonzero_weight(rng)},
                            {1, 2, nonzero_weight(rng)},
                            {0, 2, nonzero_weight(rng)}};
    for (int v = 3; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v, nonzero_weight(rng)});
    WeightedGraph x = from_edge_list(n, std::move(edges));
    WeightedGraph sx = subdivision(x);
    SpectralDecomposition s = eigendecompose(sx);
    c.expect(s.zero_index() < 0, "subdivision of a triangle-containing unicyclic graph should be nonsingular");
    for (const Verdict& v : classify_all(sx, s, fast_opts()))
      c.expect(v.not_sedentary(), "subdivision vertex " + std::to_string(v.vertex) + " got " +
                                      verdict_status_name(v.status));
  }
  return c.result();
}

// --- criterion 12 ----------------------------------------------------------

inline CaseResult property_suites() {
  Check c;
  std::mt19937 rng(1201);
  // projector algebra
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    WeightedGraph g = random_connected(n, rng);
    SpectralDecomposition s = eigendecompose(g);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd rec = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < s.count(); ++i) {
      const Eigen::MatrixXd& p = s.projectors[i];
      c.expect((p * p - p).cwiseAbs().maxCoeff() <= 1e-9, "projector not idempotent");
      c.expect(std::abs(p.trace() - s.multiplicities[i]) <= 1e-6, "projector trace != multiplicity");
      for (std::size_t j = i + 1; j < s.count(); ++j)
        c.expect((p * s.projectors[j]).cwiseAbs().maxCoeff() <= 1e-9, "projectors not orthogonal");
      sum += p;
      rec += s.eigenvalues[i] * p;
    }
    c.expect((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-9,
             "projectors do not sum to identity");
    c.expect((rec - g.adjacency_matrix()).cwiseAbs().maxCoeff() <= 1e-8,
             "spectral reconstruction failed");
  }
  // unitarity
  std::uniform_real_distribution<double> tdist(0.0, 10.0);
  for (int trial = 0; trial < 50 && c.ok; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    WeightedGraph g = random_connected(n, rng);
    SpectralDecomposition s = eigendecompose(g);
    for (int k = 0; k < 10 && c.ok; ++k) {
      double t = tdist(rng);
      int u = static_cast<int>(rng() % n);
      c.expect(std::abs(walk_row(s, u, t).squaredNorm() - 1.0) <= 1e-9, "row not unit norm");
    }
  }
  // bipartite spectrum symmetry and the 1/2 diagonal bound
  for (int trial = 0; trial < 60 && c.ok; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    WeightedGraph g = random_bipartite(n, rng);
    SpectralDecomposition s = eigendecompose(g);
    double ztol = s.cluster_threshold();
    for (std::size_t i = 0; i < s.count() && c.ok; ++i) {
      int j = s.index_of(-s.eigenvalues[i]);
      c.expect(j >= 0, "spectrum not symmetric about 0");
      if (j < 0) break;
      for (int u = 0; u < n; ++u)
        c.expect(std::abs(s.diag(i, u) - s.diag(j, u)) <= 1e-9,
                 "mirrored projector diagonals differ");
    }
    for (int u = 0; u < n && c.ok; ++u) {
      VertexProfile prof = support(s, u);
      int zi = s.zero_index();
      bool zero_in = zi >= 0 && prof.contains(zi);
      double e0 = zero_in ? prof.diagonal_at(zi) : 0.0;
      for (std::size_t i = 0; i < prof.support.size(); ++i) {
        if (std::abs(s.eigenvalues[prof.support[i]]) <= ztol) continue;
        c.expect(prof.diagonals[i] <= 0.5 + 1e-9, "nonzero diagonal above 1/2 in a bipartite graph");
        if (zero_in)
          c.expect(prof.diagonals[i] <= 0.5 - e0 / 2.0 + 1e-9,
                   "diagonal not strictly below 1/2 despite zero support");
      }
    }
  }
  // cospectral vertices agree in status, and sedentary bounds are sound
  for (const FamilySpec& spec : builtin_corpus()) {
    WeightedGraph g = build(spec);
    if (g.n > 16) continue;
    SpectralDecomposition s = eigendecompose(g);
    std::vector<Verdict> verdicts = classify_all(g, s, fast_opts());
    for (int u = 0; u < g.n && c.ok; ++u)
      for (int v = u + 1; v < g.n && c.ok; ++v)
        if (cospectral(s, u, v))
          c.expect(verdicts[u].status == verdicts[v].status,
                   spec.str() + ": cospectral vertices " + std::to_string(u) + "," +
                       std::to_string(v) + " disagree");
    for (const Verdict& v : verdicts) {
      if (!v.sedentary() || !v.lower_bound) continue;
      ScanResult r = numeric_scan(s, v.vertex);
      c.expect(r.global_min >= *v.lower_bound - 1e-6,
               spec.str() + ": scan " + fmt(r.global_min) + " below certified bound " +
                   fmt(*v.lower_bound) + " at vertex " + std::to_string(v.vertex));
    }
    if (!c.ok) break;
  }
  return c.result();
}

// --- criterion 13 ----------------------------------------------------------

inline CaseResult five_eigenvalue_example() {
  Check c;
  FamilySpec spec{family::five_eigenvalue, {{"components", "1x4,2x2"}}};
  WeightedGraph g = build(spec);
  SpectralDecomposition s = eigendecompose(g);
  std::vector<std::pair<double, int>> want{{std::sqrt(7.0), 1}, {2.0, 1}, {0.0, 6}, {-2.0, 1},
                                           {-std::sqrt(7.0), 1}};
  c.expect(s.count() == want.size(), "distinct eigenvalue count");
  for (std::size_t i = 0; i < want.size() && c.ok; ++i) {
    c.expect(std::abs(s.eigenvalues[i] - want[i].first) <= 1e-8, "eigenvalue " + fmt(s.eigenvalues[i]));
    c.expect(s.multiplicities[i] == want[i].second, "multiplicity at " + fmt(want[i].first));
  }
  // stated per-class verdicts: free/joined twin classes sedentary, the
  // white color class and the apex not sedentary
  auto status_of = [&](int u) { return classify_vertex(g, s, u, fast_opts()); };
  for (int u : {0, 1, 2, 3}) {
    Verdict v = status_of(u);
    c.expect(v.sedentary(), "blue vertex " + std::to_string(u) + " got " +
                                verdict_status_name(v.status));
  }
  for (int u : {4, 5}) {
    Verdict v = status_of(u);
    c.expect(v.sedentary(), "pink vertex " + std::to_string(u) + " got " +
                                verdict_status_name(v.status));
  }
  for (int u : {7, 8, 9}) {
    Verdict v = status_of(u);
    c.expect(v.not_sedentary(), "white vertex " + std::to_string(u) + " got " +
                                    verdict_status_name(v.status));
  }
  {
    Verdict v = status_of(6);
    std::string msg = "apex expected not_sedentary but got " +
                      std::string(verdict_status_name(v.status));
    if (v.sedentary() && v.lower_bound) {
      int zi = s.zero_index();
      msg += " ((E_0)_{apex} = " + fmt(zi >= 0 ? s.diag(zi, 6) : 0.0) +
             " exceeds 1/2, certified bound " + fmt(*v.lower_bound) +
             "; the single-positive route requires (E_0) < 1/2)";
    }
    c.expect(v.not_sedentary(), msg);
  }
  return c.result();
}

}  // namespace repro

inline std::vector<ReproCase> reproduction_cases() {
  return {
      {1, "complete graph minima over one period", "families", repro::complete_graph_minima},
      {2, "unweighted paths are not sedentary", "paths", repro::unweighted_paths},
      {3, "even cycles and odd-cycle doubles", "cycles", repro::even_cycles},
      {4, "subdivided stars: spectrum and verdicts", "families", repro::subdivided_stars},
      {5, "weighted odd path end vertex", "paths", repro::weighted_odd_path},
      {6, "weighted C_{4k} heavy vertex", "cycles", repro::weighted_c4k_case},
      {7, "cocktail parties and double transfer", "doubles", repro::cocktail_parties},
      {8, "cartesian products", "products", repro::products},
      {9, "shrikhande and doob minima", "products", repro::shrikhande_doob},
      {10, "pendant path G_5 long-horizon infimum", "families", repro::pendant_path_infimum},
      {11, "random matched trees and unicyclic subdivisions", "families",
       repro::matched_trees_and_unicyclic},
      {12, "property suites", "families", repro::property_suites},
      {13, "five-eigenvalue bipartite example", "families", repro::five_eigenvalue_example},
  };
}

/// Runs the selected suite, printing one line per criterion. Returns the
/// number of failures.
inline int run_reproduction(const std::string& suite, std::ostream& os) {
  int failures = 0;
  for (const ReproCase& rc : reproduction_cases()) {
    if (suite != "all" && suite != rc.suite) continue;
    CaseResult res = rc.run();
    os << (res.pass ? "[ ok ] " : "[FAIL] ") << "criterion " << rc.id << ": " << rc.name;
    if (!res.pass) os << " -- " << res.detail;
    os << "\n";
    if (!res.pass) ++failures;
  }
  return failures;
}

}  // namespace qwsed
