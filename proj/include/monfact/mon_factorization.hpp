#pragma once

// Factorization search in the monoid of nonzero monomial ideals of K[X, Y].

#include <functional>
#include <optional>
#include <string>

#include "monfact/budget.hpp"
#include "monfact/engine.hpp"
#include "monfact/length_set.hpp"
#include "monfact/monomial_ideal.hpp"

namespace monfact {

/// Engine adaptor for monomial ideals, graded by mdeg.
///
/// Candidate divisors of e = X^u Y^v J (J with pure powers X^p, Y^q) are
/// X^u' Y^v' a' with a' a candidate factor of J. For J the search fixes, per
/// branch, the degree split d + d' = mdeg(J), a factorization S_a + S_b = S_J
/// of the exponent sets of the minimal-degree generators, and the pure powers
/// X^{p_a}, Y^{q_a} of a (with p_a + p_b = p, q_a + q_b = q). It then walks the
/// staircase of a column by column between the bounds these pin down,
/// rejecting a partial staircase once (J : a_known) cannot contain the forced
/// part of the cofactor or can no longer reproduce J on the decided columns.
struct MonomialIdealMonoid {
  using Element = MonIdeal;
  static MonIdeal identity() { return MonIdeal::unit(); }
  static bool is_identity(const MonIdeal& e) { return e.is_unit(); }
  static MonIdeal product(const MonIdeal& a, const MonIdeal& b) { return monfact::product(a, b); }
  static std::optional<MonIdeal> colon(const MonIdeal& whole, const MonIdeal& part) {
    return monfact::colon(whole, part);
  }
  static Nat grade(const MonIdeal& e) { return mdeg(e); }
  static std::string key(const MonIdeal& e) { return to_string(e); }
  static void for_each_candidate(const MonIdeal& e, SearchBudget& budget,
                                 const std::function<bool(const MonIdeal&)>& emit);
};

using MonEngine = FactorizationEngine<MonomialIdealMonoid>;

/// Streams candidate factors of an ideal that has pure powers X^p and Y^q
/// (p, q >= 1). Every non-unit a != e with a * (e : a) == e is emitted at
/// least once; unit and e itself never are.
void for_each_artinian_candidate(const MonIdeal& e, SearchBudget& budget,
                                 const std::function<bool(const MonIdeal&)>& emit);

/// Exponents y of the minimal-degree generators X^(m-y) Y^y, m = mdeg(e),
/// provided X^m and Y^m are among them; nullopt otherwise.
std::optional<NatSet> pure_level_set(const MonIdeal& e);

/// Sets of lengths in Mon(R).
///
/// If X^m and Y^m are minimal generators of e (m = mdeg(e)), every factor a
/// of e has X^d and Y^d among its generators (d = mdeg(a)), so the
/// minimal-degree exponent sets of a length-k factorization multiply to
/// pure_level_set(e) in the reduced power monoid with no factor equal to {0}.
/// Hence L(e) lies in [2, max L(pure_level_set(e))] for non-atoms. Lengths
/// are certified from below by factorizations built from the two extremal
/// factor pairs of each split of the level set; when they fill the interval
/// the result is exact without enumerating all divisors. Otherwise the full
/// search runs. complete == false means the budget ran out first.
LengthsResult lengths_mon(const MonIdeal& e, BudgetLimits limits = {});

}  // namespace monfact
