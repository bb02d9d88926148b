#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "driver.hpp"

namespace {

using fiberfield::cli::json;

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fiberfield::cli::ConfigError("cannot open config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw fiberfield::cli::ConfigError(std::string("config parse error: ") + e.what());
  }
}

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw fiberfield::cli::ConfigError("cannot open output file '" + out_path + "'");
  out << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fiberfield;
  using namespace fiberfield::cli;

  CLI::App app{"fiberfield: derivation modules, global deformations and windowed cohomology "
               "of affine curve families, in exact arithmetic"};
  app.require_subcommand(1);

  std::string config_path, out_path, example_name;
  long budget = kDefaultBudget;
  app.add_option("--budget", budget, "step budget for symbolic computations");

  auto* der = app.add_subcommand("der-solve", "solve a truncated derivation module");
  der->add_option("--config", config_path, "JSON config")->required();
  der->add_option("--out", out_path, "output path (default: stdout)");

  auto* coh = app.add_subcommand("cohomology", "windowed Chevalley-Eilenberg cohomology");
  coh->add_option("--config", config_path, "JSON config")->required();
  coh->add_option("--out", out_path, "output path (default: stdout)");

  auto* ex = app.add_subcommand("example", "run a named end-to-end pipeline");
  ex->add_option("--name", example_name, "scaled-bracket | fs-elliptic | cusp-degeneration")
      ->required();
  ex->add_option("--config", config_path, "optional JSON config overriding defaults");
  ex->add_option("--out", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    json cfg = json::object();
    if (!config_path.empty()) cfg = load_config(config_path);
    if (budget <= 0) throw ConfigError("budget must be positive");

    const auto start = std::chrono::steady_clock::now();
    json results;
    std::string sub;
    if (der->parsed()) {
      sub = "der-solve";
      results = run_der_solve(cfg, budget);
    } else if (coh->parsed()) {
      sub = "cohomology";
      results = run_cohomology(cfg, budget);
    } else {
      sub = "example";
      json echo = cfg;
      echo["name"] = example_name;
      results = run_example(example_name, cfg, budget);
      cfg = echo;
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    emit(wrap_report(sub, cfg, std::move(results), ms), out_path);
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PoleError& e) {
    std::cerr << "config error: evaluation point hits a pole: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
