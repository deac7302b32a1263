#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qwsed/cli.hpp"
#include "qwsed/qwsed.hpp"

using namespace qwsed;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qwsed_test_" + name);
}

auto has_code(errc c) {
  return Catch::Matchers::Predicate<error>([c](const error& e) { return e.code() == c; });
}

}  // namespace

TEST_CASE("graph JSON round-trips exactly") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> wdist(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) {
          double w = rng() % 3 == 0 ? static_cast<double>(1 + rng() % 5) : wdist(rng);
          if (w == 0.0) w = 1.0;
          edges.push_back({u, v, w});
        }
    WeightedGraph g = from_edge_list(n, edges);
    WeightedGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.n == g.n);
    REQUIRE(back.edges.size() == g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      CHECK(back.edges[i].u == g.edges[i].u);
      CHECK(back.edges[i].v == g.edges[i].v);
      CHECK(back.edges[i].w == g.edges[i].w);  // bit-exact
    }
  }

  WeightedGraph labeled = from_edge_list(2, {{0, 1, 1.0}}, std::vector<std::string>{"a", "b"});
  WeightedGraph back = graph_from_json(graph_to_json(labeled));
  REQUIRE(back.labels.has_value());
  CHECK((*back.labels)[1] == "b");
}

TEST_CASE("graph JSON schema violations are rejected") {
  CHECK_THROWS_MATCHES(graph_from_json(nlohmann::json{{"edges", nlohmann::json::array()}}), error,
                       has_code(errc::bad_input));
  CHECK_THROWS_MATCHES(graph_from_json(nlohmann::json{{"n", 2.5}, {"edges", nlohmann::json::array()}}),
                       error, has_code(errc::bad_input));
  nlohmann::json bad_edge{{"n", 2}, {"edges", {{0, 1}}}};
  CHECK_THROWS_MATCHES(graph_from_json(bad_edge), error, has_code(errc::bad_input));
  CHECK_THROWS_MATCHES(load_graph("/nonexistent/file.json"), error, has_code(errc::bad_input));
}

TEST_CASE("verdict JSON carries the documented fields") {
  WeightedGraph g = build({family::path, {{"n", 4}}});
  SpectralDecomposition s = eigendecompose(g);
  ClassifyOptions opts;
  opts.evidence_scan = false;
  nlohmann::json j = to_json(classify_vertex(g, s, 0, opts));
  CHECK(j.at("vertex") == 0);
  CHECK(j.at("status") == "not_sedentary");
  CHECK(j.at("certificate") == "unique_perfect_matching");
}

TEST_CASE("cli build then classify matches the in-memory pipeline byte for byte") {
  auto graph_path = temp_file("p4.json");
  RunConfig build_cfg;
  build_cfg.cmd = command::build;
  build_cfg.family_name = "path";
  build_cfg.family_params = {{"n", 4}};
  build_cfg.out = graph_path.string();
  std::ostringstream sink;
  REQUIRE(run(build_cfg, sink) == 0);

  RunConfig classify_cfg;
  classify_cfg.cmd = command::classify;
  classify_cfg.input = graph_path.string();
  std::ostringstream from_file;
  REQUIRE(run(classify_cfg, from_file) == 0);

  WeightedGraph g = build({family::path, {{"n", 4}}});
  SpectralDecomposition s = eigendecompose(g, classify_cfg.cluster_tol);
  ClassifyOptions opts = detail::classify_options(classify_cfg);
  nlohmann::json rows = nlohmann::json::array();
  for (const Verdict& v : classify_all(g, s, opts)) rows.push_back(to_json(v));
  CHECK(from_file.str() == rows.dump(2) + "\n");

  nlohmann::json parsed = nlohmann::json::parse(from_file.str());
  REQUIRE(parsed.size() == 4);
  for (const auto& row : parsed) {
    CHECK(row.at("status") == "not_sedentary");
    CHECK(row.at("certificate") == "unique_perfect_matching");
  }
  std::filesystem::remove(graph_path);
}

TEST_CASE("cli scan emits a monotone consistent trace") {
  auto graph_path = temp_file("k5.json");
  save_json(graph_to_json(build({family::complete, {{"n", 5}}})), graph_path.string());

  auto csv_path = temp_file("k5.csv");
  RunConfig cfg;
  cfg.cmd = command::scan;
  cfg.input = graph_path.string();
  cfg.vertex = 0;
  cfg.horizon = 2.0 * std::numbers::pi;
  cfg.csv = csv_path.string();
  std::ostringstream out;
  REQUIRE(run(cfg, out) == 0);

  nlohmann::json summary = nlohmann::json::parse(out.str());
  CHECK(summary.at("global_min").get<double>() == Catch::Approx(0.6).margin(1e-6));
  CHECK(summary.at("argmin").get<double>() ==
        Catch::Approx(std::numbers::pi / 5.0).margin(1e-3));

  std::ifstream csv(csv_path);
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "t,re,im,abs");
  double prev_t = -1.0;
  std::string line;
  int rows = 0;
  while (std::getline(csv, line)) {
    double t, re, im, mag;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &t, &re, &im, &mag) == 4);
    CHECK(t > prev_t);
    prev_t = t;
    CHECK(mag == Catch::Approx(std::hypot(re, im)).margin(1e-12));
    ++rows;
  }
  CHECK(rows > 100);
  std::filesystem::remove(graph_path);
  std::filesystem::remove(csv_path);
}

TEST_CASE("cli spectrum reports recognized forms") {
  auto graph_path = temp_file("g3.json");
  save_json(graph_to_json(build({family::subdivided_star, {{"m", 3}}})), graph_path.string());
  RunConfig cfg;
  cfg.cmd = command::spectrum;
  cfg.input = graph_path.string();
  std::ostringstream out;
  REQUIRE(run(cfg, out) == 0);
  nlohmann::json j = nlohmann::json::parse(out.str());
  REQUIRE(j.at("eigenvalues").size() == 5);
  CHECK(j.at("eigenvalues")[0].at("form") == "2");
  CHECK(j.at("eigenvalues")[1].at("multiplicity") == 2);
  std::filesystem::remove(graph_path);
}

TEST_CASE("error exit codes distinguish schema from analysis failures") {
  CHECK(exit_code_for(error(errc::bad_input, "x")) == 2);
  CHECK(exit_code_for(error(errc::self_loop, "x")) == 2);
  CHECK(exit_code_for(error(errc::disconnected, "x")) == 3);
  CHECK(exit_code_for(error(errc::convergence_failure, "x")) == 3);

  // a disconnected graph parses but cannot be classified
  auto graph_path = temp_file("disc.json");
  save_json(graph_to_json(from_edge_list(4, {{0, 1, 1.0}, {2, 3, 1.0}})), graph_path.string());
  RunConfig cfg;
  cfg.cmd = command::classify;
  cfg.input = graph_path.string();
  std::ostringstream out;
  try {
    run(cfg, out);
    FAIL("expected a disconnected error");
  } catch (const error& e) {
    CHECK(exit_code_for(e) == 3);
  }
  std::filesystem::remove(graph_path);
}

TEST_CASE("reproduce suite filters run their criteria") {
  std::ostringstream out;
  run_reproduction("cycles", out);
  std::string text = out.str();
  CHECK(text.find("criterion 3") != std::string::npos);
  CHECK(text.find("criterion 6") != std::string::npos);
  CHECK(text.find("criterion 8") == std::string::npos);
}
