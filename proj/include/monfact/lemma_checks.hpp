#pragma once

// Exhaustive checks of the subset-sum lemmas behind the A_n / B_n / C_n
// families. Each returns a description of the first counterexample found,
// or nullopt when the statement holds for the given sequence.

#include <optional>
#include <string>

#include "monfact/families.hpp"

namespace monfact {

/// For k <= n and I, J subsets of [1, k]: a_I + a_J = a_H for some H in
/// [1, k] iff I and J are disjoint.
std::optional<std::string> check_subset_sum_uniqueness(const SumSequence& seq);
/// For I, J subsets of [1, n-1]: a_I + a_J lies in A_n iff I, J are disjoint.
std::optional<std::string> check_sums_in_A(const SumSequence& seq);
/// For I in [1, n-1] and J in [1, n-1] or J = Y + {n+1} with Y in [1, n-1]:
/// a_I + a_J lies in B_n iff I, J are disjoint; and a_{[1,n]} + a_I lies in
/// B_n iff I is empty.
std::optional<std::string> check_sums_in_B(const SumSequence& seq);
/// For I, J subsets of [1, n+1]: a_I + a_J lies in C_n iff I, J are disjoint
/// or (I u J = [1, n] and n lies in both).
std::optional<std::string> check_sums_in_C(const SumSequence& seq);
/// For n >= 4, r in [4, n] and I, J subsets of {1} u [3, r]: if
/// a_J - a_I > a_1 and a_J - a_I != a_3 - a_1 then a_J - a_I >= a_3.
std::optional<std::string> check_difference_gap(const SumSequence& seq);

}  // namespace monfact
