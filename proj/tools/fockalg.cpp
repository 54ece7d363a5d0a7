// Command-line front end: runs named experiments and writes JSON reports.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fockalg/errors.hpp"
#include "fockalg/experiments.hpp"

namespace {

using fockalg::Json;
using fockalg::Report;

void write_json(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

void print_verdict(const Report& r) {
  std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << '\n';
  for (const auto& [label, ok] : r.checks())
    if (!ok) std::cout << "  failed: " << label << '\n';
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated Fock-space experiments"};
  app.require_subcommand(1);

  fockalg::ExperimentParams params;
  std::string out_path;
  double lambda = 0.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", params.n, "alphabet size");
    cmd->add_option("--level", params.level, "truncation level N");
    cmd->add_option("--terms", params.terms, "series terms / restarts / degree");
    cmd->add_option("--kmax", params.kmax, "largest power or level scanned");
    cmd->add_option("--tol", params.tol, "check tolerance");
    cmd->add_option("--seed", params.seed, "seed for randomized parts")->capture_default_str();
    cmd->add_option("--grid", params.grid, "circle grid size");
    cmd->add_option("--lambda", lambda, "real scalar parameter");
  };

  for (const auto& info : fockalg::experiment_catalog()) {
    CLI::App* cmd = app.add_subcommand(info.name, info.summary);
    add_common(cmd);
    cmd->add_option("--out", out_path, "report file (stdout when omitted)");
  }
  CLI::App* all = app.add_subcommand("run-all", "run every experiment with default parameters");
  all->add_option("--seed", params.seed, "seed for randomized parts")->capture_default_str();
  all->add_option("--out", out_path, "directory for one report per experiment");
  app.add_subcommand("list", "list experiment names");

  CLI11_PARSE(app, argc, argv);
  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->get_option_no_throw("--lambda") && chosen->count("--lambda")) params.lambda = fockalg::Complex(lambda);

  try {
    if (chosen->get_name() == "list") {
      for (const auto& info : fockalg::experiment_catalog())
        std::cout << info.name << "  " << info.summary << '\n';
      return 0;
    }
    if (chosen->get_name() == "run-all") {
      bool all_pass = true;
      for (const Report& r : fockalg::run_all(params.seed)) {
        print_verdict(r);
        all_pass = all_pass && r.pass;
        if (!out_path.empty()) write_json(std::filesystem::path(out_path) / (r.name + ".json"), to_json(r));
      }
      return all_pass ? 0 : 1;
    }
    const Report r = fockalg::run_experiment(chosen->get_name(), params);
    if (out_path.empty()) {
      std::cout << to_json(r).dump(2) << '\n';
    } else {
      write_json(out_path, to_json(r));
      print_verdict(r);
    }
    return r.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
