#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "monfact/families.hpp"
#include "monfact/lemma_checks.hpp"
#include "monfact/power_monoid.hpp"

using namespace monfact;

namespace {

std::vector<Nat> values(const SumSequence& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

TEST_CASE("sequence validation is strict") {
  CHECK(values(SumSequence::validate({1, 3, 7})) == std::vector<Nat>{1, 3, 7});
  CHECK(values(SumSequence::validate({1, 3, 9, 22})) == std::vector<Nat>{1, 3, 9, 22});
  CHECK(values(SumSequence::validate({2, 5, 12})) == std::vector<Nat>{2, 5, 12});
  CHECK_THROWS_AS(SumSequence::validate({1, 3, 8}), DomainError);   // closing fails
  CHECK_THROWS_AS(SumSequence::validate({1, 2, 5}), DomainError);   // 2 > 2*1 fails
  CHECK_THROWS_AS(SumSequence::validate({1, 3}), DomainError);
  CHECK_THROWS_AS(SumSequence::validate({0, 3, 6}), DomainError);
}

TEST_CASE("minimal sequences") {
  CHECK(values(SumSequence::minimal(2)) == std::vector<Nat>{1, 3, 7});
  CHECK(values(SumSequence::minimal(3)) == std::vector<Nat>{1, 3, 9, 22});
  CHECK(values(SumSequence::minimal(4)) == std::vector<Nat>{1, 3, 9, 27, 67});
  CHECK_THROWS_AS(SumSequence::minimal(1), DomainError);
  CHECK_THROWS_AS(SumSequence::minimal(61), OverflowError);
  for (unsigned n = 2; n <= 12; ++n) {
    CHECK(SumSequence::validate(values(SumSequence::minimal(n))) == SumSequence::minimal(n));
  }
}

TEST_CASE("subset sums") {
  const auto s = SumSequence::minimal(3);
  const std::vector<unsigned> idx{1, 3};
  CHECK(s.subset_sum(idx) == 10);
  CHECK(s.subset_sum(std::span<const unsigned>{}) == 0);
  CHECK(s.subset_sum_mask(0b1011) == 1 + 3 + 22);
  const std::vector<unsigned> repeated{2, 2};
  CHECK_THROWS_AS(s.subset_sum(repeated), DomainError);
  const std::vector<unsigned> outside{5};
  CHECK_THROWS_AS(s.subset_sum(outside), DomainError);
  CHECK_THROWS_AS(s.at(0), DomainError);
}

TEST_CASE("A, B and C families") {
  const auto s2 = SumSequence::minimal(2);
  CHECK(build_A(s2) == NatSet{0, 1});
  CHECK(build_B(s2) == NatSet{0, 1, 4, 7, 8});
  CHECK(build_C(s2) == NatSet{0, 1, 3, 4, 7, 8, 10, 11});
  CHECK(build_B(SumSequence::minimal(3)) == NatSet{0, 1, 3, 4, 13, 22, 23, 25, 26});
  for (unsigned n = 2; n <= 6; ++n) {
    const auto s = SumSequence::minimal(n);
    const NatSet b = build_B(s);
    CHECK(b.size() == (std::size_t{1} << n) + 1);
    Nat prefix = 0;
    for (unsigned i = 1; i <= n; ++i) prefix += s.at(i);
    CHECK(b.max() == 2 * prefix);
    CHECK(b.max() % 2 == 0);
    const NatSet c = build_C(s);
    CHECK(c.size() == std::size_t{1} << (n + 1));
    NatSet fold{0};
    for (unsigned i = 1; i <= n + 1; ++i) fold = sumset(fold, NatSet{0, s.at(i)});
    CHECK(fold == c);
  }
}

TEST_CASE("singleton and delta families") {
  CHECK(build_beta(4) == NatSet{4});
  CHECK_THROWS_AS(build_beta(0), DomainError);
  CHECK(build_delta_odd(2) == NatSet{1, 3, 5});
  CHECK(build_delta_even(2) == NatSet{1, 2, 4});
  CHECK(with_zero(build_delta_even(2)) == NatSet{0, 1, 2, 4});
}

TEST_CASE("subset-sum lemmas hold exhaustively") {
  for (unsigned n = 2; n <= 5; ++n) {
    const auto s = SumSequence::minimal(n);
    CHECK_FALSE(check_subset_sum_uniqueness(s));
    CHECK_FALSE(check_sums_in_A(s));
    if (n <= 4) {
      CHECK_FALSE(check_sums_in_B(s));
      CHECK_FALSE(check_sums_in_C(s));
    }
    if (n >= 4) CHECK_FALSE(check_difference_gap(s));
  }
  // a non-minimal sequence satisfying both conditions
  const auto other = SumSequence::validate({2, 5, 15, 47, 116});
  CHECK_FALSE(check_subset_sum_uniqueness(other));
  CHECK_FALSE(check_sums_in_C(other));
  CHECK_FALSE(check_difference_gap(other));
  CHECK_THROWS_AS(check_difference_gap(SumSequence::minimal(3)), DomainError);
}
