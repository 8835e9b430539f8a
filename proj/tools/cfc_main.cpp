#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "cfc/cli.hpp"

int main(int argc, char** argv) {
  using namespace cfc::cli;

  CLI::App app{"Conflict-free connection colorings: analysis, exact solving and extremal tables"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  std::string dedup = "on";
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--budget", cfg.budget, "Search node limit for the exact solver");
    sub->add_option("--out", cfg.out_dir, "Directory for written files");
    sub->add_option("--seed", cfg.seed, "Seed for sampled checks");
  };

  auto* analyze = app.add_subcommand("analyze", "Bridges, blocks and the bridge-block coloring of a graph");
  analyze->add_option("--input", cfg.input_path, "Edge-list file")->required();
  common(analyze);

  auto* exact = app.add_subcommand("exact", "Exact conflict-free connection number");
  exact->add_option("--input", cfg.input_path, "Edge-list file")->required();
  common(exact);

  auto* tables = app.add_subcommand("tables", "Exhaustive s/t/f/g tables for order n");
  tables->add_option("--n", cfg.n, "Graph order")->required();
  tables->add_option("--dedup", dedup, "One graph per isomorphism class")->check(CLI::IsMember({"on", "off"}));
  common(tables);

  auto* construct = app.add_subcommand("construct", "Build an extremal construction");
  construct->add_option("kind", cfg.construct_kind, "gk | path-ruler | max-bridges")
      ->required()
      ->check(CLI::IsMember({"gk", "path-ruler", "max-bridges"}));
  construct->add_option("--n", cfg.n, "Graph order")->required();
  construct->add_option("--k", cfg.k, "Colors (gk) or bridges (max-bridges)");
  common(construct);

  auto* verify = app.add_subcommand("verify-formulas", "Check every closed form against exhaustive search");
  verify->add_option("--n", cfg.n, "Graph order")->required();
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (analyze->parsed()) cfg.command = Command::analyze;
  if (exact->parsed()) cfg.command = Command::exact;
  if (tables->parsed()) cfg.command = Command::tables;
  if (construct->parsed()) cfg.command = Command::construct;
  if (verify->parsed()) cfg.command = Command::verify_formulas;
  cfg.format = formats.at(format);
  cfg.dedup = dedup == "on";

  return run(cfg, std::cout, std::cerr);
}
