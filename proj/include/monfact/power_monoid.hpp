#pragma once

// Arithmetic of the finitary power monoid of N (finite nonempty subsets under
// setwise addition) and of its reduced submonoid (subsets containing 0).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monfact/budget.hpp"
#include "monfact/engine.hpp"
#include "monfact/length_set.hpp"
#include "monfact/nat_set.hpp"

namespace monfact {

/// {a + b : a in A, b in B}. Throws OverflowError if a sum overflows.
NatSet sumset(const NatSet& a, const NatSet& b);

/// True iff A and A + A are disjoint.
bool is_sum_free(const NatSet& a);

/// {c : part + c is contained in whole}, or nullopt when that set is empty.
/// It is the largest C with part + C inside whole, so a cofactor of part in
/// whole exists iff part + set_colon(whole, part) == whole.
std::optional<NatSet> set_colon(const NatSet& whole, const NatSet& part);

struct ReducedForm {
  Nat shift;
  NatSet base;  // min() == 0
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// A = shift + base. Factorizations of A are those of base plus shift copies
/// of the atom {1}.
ReducedForm reduce(const NatSet& a);

/// Engine adaptor for the reduced power monoid, graded by max().
struct ReducedPowerMonoid {
  using Element = NatSet;
  static NatSet identity() { return NatSet{0}; }
  static bool is_identity(const NatSet& a) { return a.size() == 1 && a.min() == 0; }
  static NatSet product(const NatSet& a, const NatSet& b) { return sumset(a, b); }
  static std::optional<NatSet> colon(const NatSet& whole, const NatSet& part) {
    return set_colon(whole, part);
  }
  static Nat grade(const NatSet& a) { return a.max(); }
  static std::string key(const NatSet& a) { return to_string(a); }
  /// Streams the 0-containing subsets B of A (B != {0}, B != A) that pass the
  /// incremental cofactor test. Requires min(A) == 0.
  static void for_each_candidate(const NatSet& a, SearchBudget& budget,
                                 const std::function<bool(const NatSet&)>& emit);
};

using ReducedPowerEngine = FactorizationEngine<ReducedPowerMonoid>;

/// All unordered pairs (B, C), B and C different from {0}, with B + C == A.
/// Requires min(A) == 0 (DomainError otherwise).
std::vector<std::pair<NatSet, NatSet>> decompose_reduced(const NatSet& a,
                                                         BudgetLimits limits = {});

bool is_atom_reduced(const NatSet& a, BudgetLimits limits = {});

/// Set of lengths in the reduced power monoid; {0} maps to {0}.
LengthSet lengths_reduced(const NatSet& a, BudgetLimits limits = {});

/// Atoms of the full power monoid are the reduced atoms together with {1}.
bool is_atom_pfin(const NatSet& a, BudgetLimits limits = {});
LengthSet lengths_pfin(const NatSet& a, BudgetLimits limits = {});

}  // namespace monfact

namespace monfact {

/// Every ordered pair (B, C) of 0-containing sets with B + C == A, trivial
/// pairs ({0}, A) and (A, {0}) included, in canonical order of B. Nodes are
/// charged to the given budget.
std::vector<std::pair<NatSet, NatSet>> ordered_factor_pairs(const NatSet& a, SearchBudget& budget);

}  // namespace monfact
