#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using mstrep::DsuEngine;
using mstrep::GraphFamily;
using mstrep::cli::OutputFormat;
using mstrep::cli::RunConfig;

namespace {

const std::map<std::string, DsuEngine> kEngines{{"gt", DsuEngine::kGabowTarjan},
                                                {"ref", DsuEngine::kReference}};
const std::map<std::string, OutputFormat> kFormats{{"tsv", OutputFormat::kTsv},
                                                   {"json", OutputFormat::kJson}};
const std::map<std::string, GraphFamily> kFamilies{
    {"random-connected", GraphFamily::kRandomConnected},
    {"path-chords", GraphFamily::kPathChords},
    {"grid", GraphFamily::kGrid},
    {"tree", GraphFamily::kTree}};

void add_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "Graph file (\"-\" for standard input)")->required();
}

void add_root(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--root", cfg.root, "Root vertex of the spanning tree")->capture_default_str();
}

void add_engine(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option_function<std::string>(
         "--dsu", [&cfg](const std::string& name) { cfg.dsu = kEngines.at(name); },
         "Disjoint-set engine: gt or ref (default gt)")
      ->check(CLI::IsMember(kEngines));
}

void add_format(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option_function<std::string>(
         "--format", [&cfg](const std::string& name) { cfg.format = kFormats.at(name); },
         "tsv or json (default tsv)")
      ->check(CLI::IsMember(kFormats));
}

void add_generator(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option_function<std::string>(
         "--family", [&cfg](const std::string& name) { cfg.family = kFamilies.at(name); },
         "random-connected, path-chords, grid or tree")
      ->check(CLI::IsMember(kFamilies));
  cmd->add_option_function<std::size_t>(
      "--n", [&cfg](const std::size_t& n) { cfg.n = n; }, "Vertex count");
  cmd->add_option_function<std::size_t>(
      "--m", [&cfg](const std::size_t& m) { cfg.m = m; }, "Edge count");
  cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cmd->add_option("--wmax", cfg.wmax, "Weights are drawn uniformly from [1, wmax]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum spanning tree replacement edges, bridges and most vital edge"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* compute = app.add_subcommand("compute", "MST, replacement edges and most vital edge");
  add_input(compute, cfg);
  add_root(compute, cfg);
  add_engine(compute, cfg);
  compute->add_flag("--early-exit", cfg.early_exit,
                    "Stop scanning once every non-bridge tree edge is covered");
  add_format(compute, cfg);
  compute->add_flag("--stats", cfg.stats, "Print disjoint-set operation counters");

  auto* oracle = app.add_subcommand("oracle", "Same report computed by brute force");
  add_input(oracle, cfg);
  add_format(oracle, cfg);

  auto* verify = app.add_subcommand("verify", "Check both engines against the brute-force oracle");
  add_input(verify, cfg);
  add_root(verify, cfg);
  verify->add_flag("--early-exit", cfg.early_exit, "Verify the early-exit scan");

  auto* gen = app.add_subcommand("gen", "Write a random graph to standard output");
  add_generator(gen, cfg);

  auto* bench = app.add_subcommand("bench", "Time the pipeline on a doubling ladder of sizes");
  add_generator(bench, cfg);
  add_engine(bench, cfg);
  bench->add_flag("--early-exit", cfg.early_exit, "Use the early-exit scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::ios::sync_with_stdio(false);
  if (compute->parsed()) return mstrep::cli::cmd_compute(cfg, std::cout, std::cerr);
  if (oracle->parsed()) return mstrep::cli::cmd_oracle(cfg, std::cout, std::cerr);
  if (verify->parsed()) return mstrep::cli::cmd_verify(cfg, std::cout, std::cerr);
  if (gen->parsed()) return mstrep::cli::cmd_gen(cfg, std::cout, std::cerr);
  return mstrep::cli::cmd_bench(cfg, std::cout, std::cerr);
}
