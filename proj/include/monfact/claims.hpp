#pragma once

// Reproducible verification suite: each claim is an exact check of one
// family of statements about the two monoids, run under a search budget.

#include <cstdint>
#include <string>
#include <vector>

#include "monfact/budget.hpp"

namespace monfact {

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct ClaimResult {
  std::string id;
  std::string topic;
  Status status = Status::pass;
  double seconds = 0;
  std::string witness;  // set for every fail, optional otherwise
};

struct VerifyOptions {
  BudgetLimits limits;
  std::uint64_t seed = 20240917;
};

struct ClaimInfo {
  std::string id;
  std::string topic;
  std::string suite;  // "core" or "stretch"
};

/// All claims, core first, in a fixed order.
std::vector<ClaimInfo> list_claims();
/// Throws DomainError for an unknown suite name.
std::vector<ClaimResult> run_suite(const std::string& suite, const VerifyOptions& options);
/// Throws DomainError for an unknown id.
ClaimResult run_claim(const std::string& id, const VerifyOptions& options);

}  // namespace monfact
