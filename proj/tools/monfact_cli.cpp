// monfact: atoms, sets of lengths and verification runs for the power monoid
// of N and the monoid of monomial ideals of K[X, Y].

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "monfact/cli.hpp"

namespace {

constexpr const char* kTargetHelp = R"(Targets:
  set literal      "{0,1,4}"  "[0,1,4]"  "0,1,4"
  ideal literal    "X^4, X^3 Y, Y^4"  "<X^2, Y^3>"  "1"  '{"gens": [[2,0],[0,3]]}'
  ideal families   a_k  b_i  c_k  (underscore optional)   phi {0,1,3}
                   I_B  I_C  tilde_b  with --minimal n | --seq a1,...  (tilde_b also --r k)
  set families     A  B  C  (with --minimal n | --seq a1,...)  beta_i  delta_odd_i  delta_even_i
Examples:
  monfact atom --monoid mon c4
  monfact atom --monoid mon "tilde_b --minimal 3 --r 3"
  monfact lengths --monoid pfin0 "C --minimal 3"
  monfact verify --suite core --table
Exit codes: 0 conclusive, 1 usage or parse error, 2 inconclusive, 3 verification failure.)";

void emit(const monfact::io::Json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  using namespace monfact;
  CLI::App app{"Factorization in the power monoid of N and in monomial ideals of K[X, Y]"};
  app.footer(kTargetHelp);
  app.require_subcommand(1);

  BudgetLimits limits;
  bool table = false;
  bool json = false;
  std::uint64_t seed = VerifyOptions{}.seed;
  cli::FamilyArgs family;
  std::string monoid_name = "mon";
  std::string target_text;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", limits.max_nodes, "Maximum search nodes")->capture_default_str();
    cmd->add_option("--budget-seconds", limits.max_seconds, "Wall-time budget in seconds")->capture_default_str();
    cmd->add_option("--budget-cache", limits.max_cached, "Maximum memoized divisors")->capture_default_str();
    cmd->add_option("--parallelism", limits.parallelism, "Worker threads for length searches")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
  };
  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("target", target_text, "Set, ideal or family spec")->required();
    cmd->add_option("--monoid", monoid_name, "pfin, pfin0 or mon")
        ->check(CLI::IsMember({"pfin", "pfin0", "mon"}))
        ->capture_default_str();
    cmd->add_option("--minimal", family.minimal, "Use the minimal sequence with this n");
    cmd->add_option_function<std::string>(
        "--seq",
        [&](const std::string& s) {
          const auto seq = io::parse_sequence(s);
          family.seq = std::vector<Nat>(seq.values().begin(), seq.values().end());
        },
        "Explicit sequence a1,...,a_{n+1}");
    cmd->add_option("--r", family.r, "Index r for tilde_b");
    cmd->add_flag("--json", json, "JSON output (default)");
  };

  auto* build = app.add_subcommand("build", "Construct a target and print it");
  add_family(build);
  auto* atom = app.add_subcommand("atom", "Decide whether a target is an atom");
  add_family(atom);
  add_budget(atom);
  auto* lengths = app.add_subcommand("lengths", "Set of lengths with delta set and elasticity");
  add_family(lengths);
  add_budget(lengths);

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::string suite = "core";
  std::string claim;
  bool list = false;
  verify->add_option("--suite", suite, "core, stretch or all")
      ->check(CLI::IsMember({"core", "stretch", "all"}))
      ->capture_default_str();
  verify->add_option("--claim", claim, "Run a single claim by id");
  verify->add_flag("--list", list, "List claim ids");
  verify->add_flag("--table", table, "Human-readable table instead of JSON lines");
  verify->add_flag("--json", json, "JSON lines (default)");
  verify->add_option("--seed", seed, "Seed for sampled claims")->capture_default_str();
  add_budget(verify);

  auto* experiment = app.add_subcommand("experiment", "Exploratory statistics");
  std::string experiment_name;
  cli::ExperimentParams params;
  experiment->add_option("name", experiment_name, "atom-density or phi-transport")->required();
  experiment->add_option("--max", params.max, "Sets are drawn from [0, max]")->capture_default_str();
  experiment->add_option("--samples", params.samples, "Sample count")->capture_default_str();
  experiment->add_option("--seed", params.seed, "Random seed")->capture_default_str();
  add_budget(experiment);

  CLI11_PARSE(app, argc, argv);

  try {
    cli::CommandResult result;
    if (*verify) {
      if (list) {
        result = cli::cmd_list_claims();
        for (const auto& c : result.output) emit(c);
        return result.exit_code;
      }
      VerifyOptions options{limits, seed};
      std::vector<ClaimResult> runs;
      if (!claim.empty()) {
        runs.push_back(run_claim(claim, options));
      } else {
        runs = run_suite(suite, options);
      }
      int code = cli::kExitOk;
      for (const auto& r : runs) {
        if (r.status == Status::fail) code = cli::kExitFailure;
        if (r.status == Status::inconclusive && code == cli::kExitOk) code = cli::kExitInconclusive;
      }
      if (table) {
        std::cout << cli::format_table(runs);
      } else {
        for (const auto& r : runs) emit(cli::to_json(r));
      }
      return code;
    }
    if (*experiment) {
      params.limits = limits;
      result = cli::cmd_experiment(experiment_name, params);
      emit(result.output);
      return result.exit_code;
    }
    const cli::Target target = cli::parse_target(target_text, family);
    const cli::MonoidKind monoid = cli::parse_monoid(monoid_name);
    if (*build) result = cli::cmd_build(target);
    if (*atom) result = cli::cmd_atom(target, monoid, limits);
    if (*lengths) result = cli::cmd_lengths(target, monoid, limits);
    emit(result.output);
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
}
