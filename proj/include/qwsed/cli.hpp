#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "qwsed/arithmetic.hpp"
#include "qwsed/classify.hpp"
#include "qwsed/families.hpp"
#include "qwsed/io.hpp"
#include "qwsed/reproduce.hpp"

namespace qwsed {

enum class command { spectrum, classify, scan, build, reproduce };

struct RunConfig {
  command cmd = command::spectrum;
  std::string input;                  // graph JSON path
  std::string family_name;            // build
  nlohmann::json family_params = nlohmann::json::object();
  std::optional<int> vertex;
  double horizon = 200.0;
  double step = 0.0;
  double support_tol = 1e-8;
  double cluster_tol = 1e-8;
  double recognize_tol = 1e-7;
  int relation_bound = 32;
  std::string out;                    // output path; empty = stdout
  std::string csv;                    // scan trace path
  std::string suite = "all";          // reproduce
};

namespace detail {

inline void emit(const nlohmann::json& j, const std::string& out_path, std::ostream& os) {
  if (out_path.empty())
    os << j.dump(2) << "\n";
  else
    save_json(j, out_path);
}

inline ClassifyOptions classify_options(const RunConfig& cfg) {
  ClassifyOptions opts;
  opts.support_tol = cfg.support_tol;
  opts.relation_bound = cfg.relation_bound;
  opts.horizon = cfg.horizon;
  opts.step = cfg.step;
  return opts;
}

inline int run_spectrum(const RunConfig& cfg, std::ostream& os) {
  WeightedGraph g = load_graph(cfg.input);
  SpectralDecomposition s = eigendecompose(g, cfg.cluster_tol);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < s.count(); ++i) {
    EigenvalueClass form = recognize(s.eigenvalues[i], cfg.recognize_tol);
    rows.push_back({{"value", s.eigenvalues[i]},
                    {"multiplicity", s.multiplicities[i]},
                    {"form", form.str()}});
  }
  detail::emit({{"n", g.n}, {"eigenvalues", rows}}, cfg.out, os);
  return 0;
}

inline int run_classify(const RunConfig& cfg, std::ostream& os) {
  WeightedGraph g = load_graph(cfg.input);
  SpectralDecomposition s = eigendecompose(g, cfg.cluster_tol);
  ClassifyOptions opts = classify_options(cfg);
  nlohmann::json rows = nlohmann::json::array();
  if (cfg.vertex) {
    rows.push_back(to_json(classify_vertex(g, s, *cfg.vertex, opts)));
  } else {
    for (const Verdict& v : classify_all(g, s, opts)) rows.push_back(to_json(v));
  }
  detail::emit(rows, cfg.out, os);
  return 0;
}

inline int run_scan(const RunConfig& cfg, std::ostream& os) {
  WeightedGraph g = load_graph(cfg.input);
  SpectralDecomposition s = eigendecompose(g, cfg.cluster_tol);
  if (!cfg.vertex) fail(errc::bad_params, "scan needs --vertex");
  int u = *cfg.vertex;
  if (u < 0 || u >= g.n) fail(errc::index_out_of_range, "vertex " + std::to_string(u));
  if (cfg.csv.empty()) fail(errc::bad_params, "scan needs --csv");
  VertexProfile prof = support(s, u, cfg.support_tol);
  double lmax = 1e-9;
  for (int idx : prof.support) lmax = std::max(lmax, std::abs(s.eigenvalues[idx]));
  double step = cfg.step > 0.0 ? cfg.step : std::min(0.01, std::numbers::pi / (8.0 * lmax));
  std::ofstream csv(cfg.csv);
  if (!csv) fail(errc::bad_input, "cannot write " + cfg.csv);
  csv << "t,re,im,abs\n";
  csv.precision(15);
  long long samples = static_cast<long long>(std::ceil(cfg.horizon / step));
  for (long long k = 0; k <= samples; ++k) {
    double t = cfg.horizon * static_cast<double>(k) / static_cast<double>(samples);
    cd z = walk_diagonal(prof, s, t);
    csv << t << "," << z.real() << "," << z.imag() << "," << std::abs(z) << "\n";
  }
  ScanOptions so{cfg.horizon, cfg.step};
  ScanResult r = numeric_scan(s, u, so);
  detail::emit({{"vertex", u},
                {"global_min", r.global_min},
                {"argmin", r.argmin},
                {"horizon", r.horizon},
                {"period_exact", r.period_exact},
                {"csv", cfg.csv}},
               cfg.out, os);
  return 0;
}

inline int run_build(const RunConfig& cfg, std::ostream& os) {
  auto fam = family_from_name(cfg.family_name);
  if (!fam) fail(errc::bad_params, "unknown family '" + cfg.family_name + "'");
  WeightedGraph g = build({*fam, cfg.family_params});
  if (cfg.out.empty())
    os << graph_to_json(g).dump(2) << "\n";
  else
    save_json(graph_to_json(g), cfg.out);
  return 0;
}

}  // namespace detail

/// Executes one parsed command. Exit status: 0 success (or all reproduce
/// criteria pass), 1 reproduce failures, throws on input or analysis errors.
inline int run(const RunConfig& cfg, std::ostream& os = std::cout) {
  switch (cfg.cmd) {
    case command::spectrum: return detail::run_spectrum(cfg, os);
    case command::classify: return detail::run_classify(cfg, os);
    case command::scan: return detail::run_scan(cfg, os);
    case command::build: return detail::run_build(cfg, os);
    case command::reproduce: return run_reproduction(cfg.suite, os) == 0 ? 0 : 1;
  }
  return 0;
}

/// Maps a thrown qwsed::error to the documented process exit code:
/// 2 for schema/input violations, 3 for analysis errors.
inline int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::bad_input:
    case errc::duplicate_edge:
    case errc::zero_weight:
    case errc::self_loop:
    case errc::index_out_of_range:
    case errc::bad_params: return 2;
    default: return 3;
  }
}

}  // namespace qwsed
