#include "quotient_forge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

int main(int argc, char **argv) {
  using namespace qforge;

  CLI::App app{"Special McKay quivers and moduli of cyclic quotient surface singularities"};
  app.require_subcommand(1);

  RunConfig cfg;
  int r = 0, a = 0;
  std::uint64_t seed = 0;
  std::string out_path;

  std::map<std::string, Format> formats;
  for (const auto &[name, f] : format_names()) formats[name] = f;

  for (const auto &[name, cmd] : command_names()) {
    auto *sub = app.add_subcommand(name);
    sub->callback([&cfg, cmd = cmd] { cfg.command = cmd; });
    if (cmd == Command::Sweep) {
      sub->add_option("--max", cfg.sweep_max, "largest r to check")->required();
      sub->add_option("--sample", cfg.sample, "check a random subset of this many groups");
    } else {
      sub->add_option("--r", r, "group order")->required();
      sub->add_option("--a", a, "weight, coprime to r")->required();
    }
    sub->add_option("--format", cfg.format, "json, dot, cas or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", out_path, "write the artifact to this file");
    sub->add_option("--seed", seed, "seed for --sample");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  if (cfg.command != Command::Sweep) {
    cfg.r = r;
    cfg.a = a;
  }
  for (auto *sub : app.get_subcommands())
    if (sub->count("--seed")) cfg.seed = seed;
  if (!out_path.empty()) cfg.out_path = out_path;

  std::ostringstream artifact;
  int code = run(cfg, artifact, std::cerr);
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path);
    if (!file) {
      std::cerr << "error: cannot write " << *cfg.out_path << "\n";
      return kExitInvalidInput;
    }
    file << artifact.str();
  } else {
    std::cout << artifact.str();
  }
  return code;
}
