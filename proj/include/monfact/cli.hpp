#pragma once

// Command implementations behind the command-line tool. Each command returns
// its exit code together with the JSON document to print.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monfact/budget.hpp"
#include "monfact/claims.hpp"
#include "monfact/io.hpp"
#include "monfact/monomial_ideal.hpp"
#include "monfact/nat_set.hpp"

namespace monfact::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitFailure = 3;

enum class MonoidKind { pfin, pfin0, mon };
/// "pfin", "pfin0" or "mon"; ParseError otherwise.
MonoidKind parse_monoid(const std::string& name);

/// Sequence and index arguments for the families that need them.
struct FamilyArgs {
  std::optional<unsigned> minimal;
  std::optional<std::vector<Nat>> seq;
  std::optional<unsigned> r;
};

using Target = std::variant<NatSet, MonIdeal>;

/// Target grammar:
///   set literal      "{0,1,4}", "[0,1,4]", "0,1,4"
///   ideal literal    "X^4, X^3 Y, Y^4", "<X^2, Y^3>", "1", {"gens": [[2,0],[0,3]]}
///   ideal families   a_k, b_i, c_k (underscore optional), phi <set>,
///                    I_B, I_C, tilde_b (with --r k)
///   set families     A, B, C, beta_i, delta_odd_i, delta_even_i
/// Families built from a sequence take "--minimal n" or "--seq a1,...", either
/// inside the target text or through `defaults`.
Target parse_target(const std::string& text, const FamilyArgs& defaults = {});

struct CommandResult {
  int exit_code = kExitOk;
  io::Json output;
};

CommandResult cmd_build(const Target& target);
CommandResult cmd_atom(const Target& target, MonoidKind monoid, const BudgetLimits& limits);
CommandResult cmd_lengths(const Target& target, MonoidKind monoid, const BudgetLimits& limits);
/// suite is "core", "stretch" or "all"; output is an array of claim records.
CommandResult cmd_verify(const std::string& suite, const VerifyOptions& options);
CommandResult cmd_list_claims();

struct ExperimentParams {
  Nat max = 12;
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;
  BudgetLimits limits;
};
/// name is "atom-density" or "phi-transport".
CommandResult cmd_experiment(const std::string& name, const ExperimentParams& params);

io::Json to_json(const ClaimResult& r);
/// Fixed-width text table, one claim per line.
std::string format_table(const std::vector<ClaimResult>& results);

}  // namespace monfact::cli
