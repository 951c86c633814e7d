#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "peanuts/harness.hpp"

int main(int argc, char** argv) {
  using namespace peanuts;

  CLI::App app{"Approximate k-clique and near-clique counting via Turan-shadow sampling"};

  RunConfig config;
  std::uint64_t seed = 0;

  const std::map<std::string, Command> commands{{"count", Command::Count},
                                                {"exact", Command::Exact},
                                                {"list", Command::List},
                                                {"stats", Command::Stats}};
  const std::map<std::string, PatternKind> patterns{{"kclique", PatternKind::KClique},
                                                    {"k1", PatternKind::K1},
                                                    {"k2t1", PatternKind::K2Type1},
                                                    {"k2t2", PatternKind::K2Type2}};
  const std::map<std::string, Mode> modes{{"inverse-ts", Mode::InverseTS},
                                          {"peanuts", Mode::Peanuts}};
  const std::map<std::string, OutputFormat> outputs{{"json", OutputFormat::Json},
                                                    {"csv", OutputFormat::Csv}};

  app.add_option("--input", config.input_path, "Edge-list file (whitespace pairs; # and % comments)")
      ->required();
  app.add_option("--command", config.command, "count | exact | list | stats")
      ->required()
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
  app.add_option("--pattern", config.pattern, "kclique | k1 | k2t1 | k2t2")
      ->transform(CLI::CheckedTransformer(patterns, CLI::ignore_case));
  app.add_option("--k", config.k, "Pattern size (>= 3; (k,2) kinds need >= 4)")->required();
  app.add_option("--samples", config.samples, "Sample budget (default 500000)");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed (default: time-derived, echoed)");
  app.add_option("--mode", config.mode, "inverse-ts (default) | peanuts")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--output", config.output, "json (default) | csv")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
  app.add_option("--threads", config.threads, "Sampling batches run in parallel (default 1)");
  app.add_option("--max-list", config.max_list, "Cap on listed instances (default 1000)");
  app.add_flag("--with-exact", config.with_exact, "stats: include exact counts and ratios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (seed_opt->count() > 0) config.seed = seed;

  try {
    return run(config, std::cout, std::cerr);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
