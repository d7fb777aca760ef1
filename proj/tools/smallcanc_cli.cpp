#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smallcanc/session.hpp"

int main(int argc, char** argv) {
  using namespace smallcanc;

  CLI::App app{"workbench for group-like small cancellation rings"};
  app.require_subcommand(1);

  SessionConfig cfg;
  int tau_override = 0;
  std::string policy = "first";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("presentation", cfg.presentation_path, "presentation file")->required();
    sub->add_option("--tau", tau_override, "override the presentation's tau");
    sub->add_option("--virt-depth", cfg.virt_depth, "virtual member search depth");
    sub->add_option("--max-relations", cfg.closure_caps.max_relations, "closure cap");
    sub->add_option("--max-wordlen", cfg.closure_caps.max_word_length, "closure cap");
    sub->add_option("--oracle-bound", cfg.oracle_bound, "oracle monomial length bound");
    sub->add_option("--policy", policy, "first|all")
        ->check(CLI::IsMember({"first", "all"}));
    sub->add_option("--steps", cfg.step_budget, "greedy step budget");
    sub->add_option("--format", cfg.format, "text|kv")
        ->check(CLI::IsMember({"text", "kv"}));
  };

  CLI::App* check = app.add_subcommand("check", "run the axiom checkers");
  add_common(check);

  CLI::App* query = app.add_subcommand("query", "query the closed system");
  add_common(query);
  std::vector<std::string> query_args;
  query->add_option("words", query_args, "query and its arguments")->expected(-1);

  CLI::App* gen = app.add_subcommand("gen", "generate presentation files");
  std::string gen_kind;
  std::string gen_dir = ".";
  std::vector<std::string> gen_params;
  std::uint64_t seed = 0;
  bool seed_set = false;
  gen->add_option("kind", gen_kind, "corpus | group-algebra | trinomial")->required();
  gen->add_option("--dir", gen_dir, "output directory");
  gen->add_option("--seed", seed, "generation seed (overrides SMALLCANC_SEED)")
      ->each([&](const std::string&) { seed_set = true; });
  gen->add_option("params", gen_params, "positional numeric parameters")->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (check->count("--tau") || query->count("--tau")) cfg.tau_override = tau_override;
  cfg.policy = policy == "all" ? Policy::kAllBranches : Policy::kFirstBranch;

  if (check->parsed()) return cmd_check(cfg, std::cout);
  if (query->parsed()) return cmd_query(cfg, query_args, std::cout);

  if (!seed_set) {
    if (const char* env = std::getenv("SMALLCANC_SEED")) {
      seed = std::strtoull(env, nullptr, 10);
    }
  }
  return cmd_gen(gen_kind, gen_params, seed, gen_dir, std::cout);
}
