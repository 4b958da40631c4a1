// polypart: decide and construct disjoint polygon partitions of planar point
// sets; compile 3-occurrence CNF into K5-partition point sets.
#include <CLI11.hpp>
#include <iostream>

#include "polypart/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"point-set polygon partition toolkit"};
  app.require_subcommand(1);
  polypart::RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    sub->add_option("input", cfg.input, "input file")->required();
    if (needs_spec)
      sub->add_option("--spec", cfg.spec, "cycle sizes, e.g. 3,4,5 or 'triangles'")
          ->required();
    sub->add_option("--out", cfg.output, "output file (default stdout)");
    sub->add_option("--seed", cfg.seed, "seed for randomized helpers");
  };

  auto* pvg = app.add_subcommand("pvg", "emit the point visibility graph");
  add_common(pvg, false);

  auto* check = app.add_subcommand("check", "decide partition feasibility");
  add_common(check, true);

  auto* partition = app.add_subcommand("partition", "construct a partition");
  add_common(partition, true);

  auto* verify = app.add_subcommand("verify", "re-check a partition file");
  add_common(verify, false);
  verify->add_option("partition", cfg.aux_input, "partition file")->required();

  auto* gadget = app.add_subcommand("gadget", "compile DIMACS CNF to a point set");
  add_common(gadget, false);
  gadget->add_option("--roles", cfg.roles_output, "role map sidecar path");
  gadget->add_flag("--verify", cfg.verify, "run the structural audit");

  auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth partition");
  add_common(oracle, true);

  auto* render = app.add_subcommand("render", "emit an SVG drawing");
  add_common(render, false);
  render->add_option("--partition", cfg.aux_input,
                     "partition file or .roles map to overlay");

  CLI11_PARSE(app, argc, argv);
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return polypart::run(cfg, std::cout, std::cerr);
}
