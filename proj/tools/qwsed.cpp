#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwsed/cli.hpp"

namespace {

// --param key=value, repeatable; numbers are parsed, everything else stays
// a string (list-valued parameters use compact forms like "1x4,2x2")
void apply_params(qwsed::RunConfig& cfg, const std::vector<std::string>& params) {
  for (const std::string& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      qwsed::fail(qwsed::errc::bad_params, "--param expects key=value, got '" + kv + "'");
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    try {
      std::size_t used = 0;
      double num = std::stod(value, &used);
      if (used == value.size()) {
        if (num == std::llround(num) && value.find('.') == std::string::npos &&
            value.find('e') == std::string::npos)
          cfg.family_params[key] = static_cast<long long>(std::llround(num));
        else
          cfg.family_params[key] = num;
        continue;
      }
    } catch (const std::exception&) {
    }
    cfg.family_params[key] = value;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sedentary-vertex analysis for continuous-time quantum walks"};
  app.require_subcommand(1);
  qwsed::RunConfig cfg;
  std::vector<std::string> params;
  int vertex = -1;

  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--cluster-tol", cfg.cluster_tol, "eigenvalue clustering tolerance (relative)");
    sub->add_option("--support-tol", cfg.support_tol, "support inclusion threshold");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues, multiplicities, recognized forms");
  spectrum->add_option("graph", cfg.input, "graph JSON file")->required();
  spectrum->add_option("--tol", cfg.recognize_tol, "recognition tolerance");
  spectrum->add_option("--out", cfg.out, "output file (default stdout)");
  add_tolerances(spectrum);

  CLI::App* classify = app.add_subcommand("classify", "per-vertex sedentariness verdicts");
  classify->add_option("graph", cfg.input, "graph JSON file")->required();
  classify->add_option("--vertex", vertex, "classify a single vertex");
  classify->add_option("--horizon", cfg.horizon, "scanner horizon");
  classify->add_option("--step", cfg.step, "scanner step (0 = auto)");
  classify->add_option("--relation-bound", cfg.relation_bound, "integer relation search bound");
  classify->add_option("--out", cfg.out, "output file (default stdout)");
  add_tolerances(classify);

  CLI::App* scan = app.add_subcommand("scan", "sampled |U(t)_{u,u}| trace");
  scan->add_option("graph", cfg.input, "graph JSON file")->required();
  scan->add_option("--vertex", vertex, "vertex to scan")->required();
  scan->add_option("--horizon", cfg.horizon, "scan horizon");
  scan->add_option("--step", cfg.step, "grid step (0 = auto)");
  scan->add_option("--csv", cfg.csv, "CSV output path (t,re,im,abs)")->required();
  scan->add_option("--out", cfg.out, "summary output file (default stdout)");
  add_tolerances(scan);

  CLI::App* build = app.add_subcommand("build", "construct a named graph family");
  build->add_option("family", cfg.family_name, "family name")->required();
  build->add_option("--param", params, "family parameter key=value (repeatable)");
  build->add_option("--out", cfg.out, "graph JSON output path (default stdout)");

  CLI::App* reproduce = app.add_subcommand("reproduce", "run the acceptance criteria suite");
  reproduce->add_option("--suite", cfg.suite, "all|paths|cycles|families|products|doubles")
      ->check(CLI::IsMember({"all", "paths", "cycles", "families", "products", "doubles"}));

  CLI11_PARSE(app, argc, argv);

  if (spectrum->parsed()) cfg.cmd = qwsed::command::spectrum;
  if (classify->parsed()) cfg.cmd = qwsed::command::classify;
  if (scan->parsed()) cfg.cmd = qwsed::command::scan;
  if (build->parsed()) cfg.cmd = qwsed::command::build;
  if (reproduce->parsed()) cfg.cmd = qwsed::command::reproduce;
  if (vertex >= 0) cfg.vertex = vertex;

  try {
    apply_params(cfg, params);
    return qwsed::run(cfg);
  } catch (const qwsed::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qwsed::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
