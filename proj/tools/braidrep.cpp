// braidrep: enumerate permutation representations of K_n and B_n.
//
//   braidrep cycles --r 4 --format paper --type II
//   braidrep extend --n 4 --r 4
//   braidrep braid --n 5 --r 4 --format json
//   braidrep census --n 3 --r 3
//   braidrep conjecture --r 5 --n-max 6
//   braidrep verify-paper
//   braidrep graph --r 3 > gamma.dot

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "braidrep/cli.hpp"

namespace {

  using braidrep::cli::Command;
  using braidrep::cli::Format;
  using braidrep::cli::KindFilter;
  using braidrep::cli::RunConfig;

  void add_common(CLI::App* sub, RunConfig& cfg, std::string& cache_dir) {
    sub->add_option("--cache-dir", cache_dir,
                    "Result cache directory (default $BRAIDREP_CACHE_DIR or ~/.cache/braidrep)");
    sub->add_flag("--no-cache", cfg.no_cache, "Neither read nor write the result cache");
    sub->add_option("--workers", cfg.workers, "Worker threads (default: all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-degree", cfg.max_degree, "Largest r accepted for enumeration")
        ->check(CLI::Range(1, braidrep::kStorageDegree));
  }

  void add_format(CLI::App* sub, RunConfig& cfg, bool with_dot) {
    std::map<std::string, Format> names{{"paper", Format::paper}, {"json", Format::json}};
    if (with_dot) {
      names.emplace("dot", Format::dot);
    }
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
  }

  bool given(CLI::App* sub, std::string const& name) {
    auto const* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation representations of braid commutator subgroups"};
  app.require_subcommand(1);

  RunConfig   cfg;
  std::string cache_dir;
  int         n = 0, r = 0, n_max = 0;

  auto* cycles = app.add_subcommand("cycles", "Cycles of the representation shift graph");
  cycles->add_option("--r", r, "Degree of S_r")->required();
  cycles->add_option("--n", n, "List only cycles that extend to K_n (default 3)");
  cycles->add_option("--type", cfg.kind, "Cycle type filter: I, II or all")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, KindFilter>{
              {"all", KindFilter::all}, {"I", KindFilter::type_i}, {"II", KindFilter::type_ii}},
          CLI::ignore_case));
  add_format(cycles, cfg, true);

  auto* extend = app.add_subcommand("extend", "Hom(K_n, S_r) by tower extension");
  extend->add_option("--n", n, "Level n of K_n")->required();
  extend->add_option("--r", r, "Degree of S_r")->required();
  add_format(extend, cfg, false);

  auto* braid = app.add_subcommand("braid", "Hom(B_n, S_r) by braid lifts");
  braid->add_option("--n", n, "Number of strands")->required();
  braid->add_option("--r", r, "Degree of S_r")->required();
  add_format(braid, cfg, false);

  auto* census = app.add_subcommand("census", "Transitive representations and subgroup counts");
  census->add_option("--n", n, "Level n of K_n")->required();
  census->add_option("--r", r, "Subgroup index r")->required();
  add_format(census, cfg, false);

  auto* conjecture = app.add_subcommand("conjecture", "Triviality probes for 5 <= n <= n-max");
  conjecture->add_option("--r", r, "Largest degree probed")->required();
  conjecture->add_option("--n-max", n_max, "Largest level probed")->required();
  add_format(conjecture, cfg, false);

  auto* verify = app.add_subcommand("verify-paper", "Recompute and diff every reference table");

  auto* graph = app.add_subcommand("graph", "Shift graph in Graphviz DOT");
  graph->add_option("--r", r, "Degree of S_r")->required();

  for (auto* sub : {cycles, extend, braid, census, conjecture, verify, graph}) {
    add_common(sub, cfg, cache_dir);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return braidrep::cli::kStatusUsage;
  }

  std::map<CLI::App*, Command> commands{{cycles, Command::cycles},
                                        {extend, Command::extend},
                                        {braid, Command::braid},
                                        {census, Command::census},
                                        {conjecture, Command::conjecture},
                                        {verify, Command::verify_paper},
                                        {graph, Command::graph}};
  CLI::App* chosen = app.get_subcommands().front();
  cfg.command      = commands.at(chosen);
  if (given(chosen, "--n")) {
    cfg.n = n;
  }
  if (given(chosen, "--r")) {
    cfg.r = r;
  }
  if (given(chosen, "--n-max")) {
    cfg.n_max = n_max;
  }
  if (chosen == graph) {
    cfg.format = Format::dot;
  }
  cfg.cache_dir = cache_dir;

  auto const result = braidrep::cli::run(cfg);
  std::cout << result.out;
  std::cerr << result.err;
  if (result.status == braidrep::cli::kStatusUsage) {
    std::cerr << chosen->help();
  }
  return result.status;
}
