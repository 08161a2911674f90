#pragma once

// Brute-force reference implementations. They enumerate every candidate in
// the bounding box without colon pruning and serve as independent checks on
// the search engines. Exponential; only for small inputs.

#include <utility>
#include <vector>

#include "monfact/length_set.hpp"
#include "monfact/monomial_ideal.hpp"
#include "monfact/nat_set.hpp"

namespace monfact::oracle {

/// Unordered pairs {B, C} of 0-containing sets, neither equal to {0}, with
/// B + C == A, each pair listed once with B <= C. Requires min(A) == 0 and
/// max(A) < 32.
std::vector<std::pair<NatSet, NatSet>> reduced_pairs(const NatSet& a);
LengthSet reduced_lengths(const NatSet& a);

/// Every monomial ideal containing e whose generators lie in the exponent
/// box [0, max_x(e)] x [0, max_y(e)], the unit ideal included.
std::vector<MonIdeal> ideals_above(const MonIdeal& e);
/// Unordered pairs {a, b} of non-unit ideals with a b == e, listed once
/// with a <= b.
std::vector<std::pair<MonIdeal, MonIdeal>> ideal_pairs(const MonIdeal& e);
LengthSet ideal_lengths(const MonIdeal& e);

}  // namespace monfact::oracle
