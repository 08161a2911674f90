#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "monfact/mon_factorization.hpp"
#include "monfact/oracle.hpp"
#include "monfact/power_monoid.hpp"

using namespace monfact;

namespace {

MonIdeal ideal(std::vector<ExpPair> gens) { return MonIdeal::from_generators(std::move(gens)); }

MonIdeal random_ideal(std::mt19937_64& rng, Nat max, unsigned max_gens) {
  std::uniform_int_distribution<Nat> e(0, max);
  std::uniform_int_distribution<unsigned> k(1, max_gens);
  std::vector<ExpPair> gens;
  for (unsigned i = k(rng); i > 0; --i) gens.push_back({e(rng), e(rng)});
  return ideal(gens);
}

std::vector<MonIdeal> sample_ideals(std::uint64_t seed, int count, Nat max) {
  std::mt19937_64 rng(seed);
  std::vector<MonIdeal> out;
  while (static_cast<int>(out.size()) < count) {
    MonIdeal e = random_ideal(rng, max, 4);
    if (!e.is_unit()) out.push_back(std::move(e));
  }
  return out;
}

template <class E>
std::set<std::pair<E, E>> unordered(const std::vector<std::pair<E, E>>& pairs) {
  std::set<std::pair<E, E>> out;
  for (auto [a, b] : pairs) {
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

// Factorizations as sorted atom lists, built from the brute-force split oracle.
using Multiset = std::vector<MonIdeal>;
std::set<Multiset> naive_factorizations(const MonIdeal& e, std::map<MonIdeal, std::set<Multiset>>& memo) {
  if (auto it = memo.find(e); it != memo.end()) return it->second;
  std::set<Multiset> out;
  const auto pairs = oracle::ideal_pairs(e);
  if (pairs.empty()) out.insert({e});
  for (const auto& [a, b] : pairs) {
    for (const auto& x : naive_factorizations(a, memo)) {
      for (const auto& y : naive_factorizations(b, memo)) {
        Multiset z = x;
        z.insert(z.end(), y.begin(), y.end());
        std::sort(z.begin(), z.end());
        out.insert(z);
      }
    }
  }
  memo.emplace(e, out);
  return out;
}

}  // namespace

TEST_CASE("splits of small ideals") {
  MonEngine engine;
  const auto s = engine.split(build_a(2));
  CHECK(std::find(s.begin(), s.end(), std::pair{build_a(1), build_a(1)}) != s.end());
  CHECK(engine.split(build_c(4)).empty());
  const auto s5 = engine.split(build_a(5));
  CHECK(std::find(s5.begin(), s5.end(), std::pair{build_a(1), build_c(4)}) != s5.end());
  for (const auto& [a, b] : s5) {
    CHECK(product(a, b) == build_a(5));
    CHECK(mdeg(a) <= mdeg(b));
  }
  CHECK_THROWS_AS(engine.split(MonIdeal::unit()), DomainError);
}

TEST_CASE("atoms of Mon(R)") {
  MonEngine engine;
  CHECK(engine.is_atom(ideal({{5, 0}, {0, 3}})));
  CHECK(engine.is_atom(build_tilde_b(SumSequence::minimal(3), 3)));
  CHECK(engine.is_atom(build_I_B(SumSequence::minimal(2))));
  CHECK(engine.is_atom(ideal({{1, 0}})));
  CHECK_FALSE(engine.is_atom(ideal({{2, 0}})));
  CHECK_FALSE(engine.is_atom(ideal({{1, 1}})));
  CHECK_FALSE(engine.is_atom(ideal({{3, 1}, {1, 2}})));
}

TEST_CASE("candidate stream only yields genuine factors carrying pure powers") {
  for (Nat k = 2; k <= 5; ++k) {
    const MonIdeal e = build_a(k);
    SearchBudget budget;
    std::size_t seen = 0;
    for_each_artinian_candidate(e, budget, [&](const MonIdeal& a) {
      ++seen;
      const Nat d = mdeg(a);
      CHECK(contains_monomial(a, {d, 0}));
      CHECK(contains_monomial(a, {0, d}));
      CHECK(contains_ideal(a, e));
      CHECK(d >= 1);
      CHECK(d < k);
      return true;
    });
    CHECK(seen > 0);
  }
  SearchBudget budget;
  std::size_t seen = 0;
  for_each_artinian_candidate(build_c(4), budget, [&](const MonIdeal&) { return ++seen, true; });
  CHECK(seen == 0);
  CHECK_THROWS_AS(for_each_artinian_candidate(ideal({{2, 1}, {0, 3}}), budget, [](const MonIdeal&) { return true; }),
                  DomainError);
}

TEST_CASE("monomial search agrees with brute force") {
  auto ideals = sample_ideals(21, 200, 4);
  for (const auto& e : sample_ideals(22, 40, 6)) ideals.push_back(e);
  for (const auto& e : ideals) {
    MonEngine engine;
    const auto got = unordered(engine.split(e));
    const auto want = unordered(oracle::ideal_pairs(e));
    CHECK_MESSAGE(got == want, to_string(e));
    std::set<MonIdeal> factors;
    for (const auto& [a, b] : want) factors.insert({a, b});
    const auto lf = engine.left_factors(e);
    CHECK(std::set<MonIdeal>(lf.begin(), lf.end()) == factors);
    const LengthSet l = engine.lengths(e);
    CHECK(l == oracle::ideal_lengths(e));
    CHECK(*l.rbegin() <= mdeg(e));
    CHECK((l.count(1) > 0) == engine.is_atom(e));
  }
}

TEST_CASE("set search agrees with brute force on every 0-containing subset of [0,10]") {
  for (std::uint32_t mask = 3; mask < (1u << 11); mask += 2) {
    std::vector<Nat> v;
    for (Nat i = 0; i < 11; ++i) {
      if (mask >> i & 1u) v.push_back(i);
    }
    const NatSet a = NatSet::from_elements(v);
    ReducedPowerEngine engine;
    CHECK(unordered(engine.split(a)) == unordered(oracle::reduced_pairs(a)));
    const LengthSet l = engine.lengths(a);
    CHECK(l == oracle::reduced_lengths(a));
    CHECK(*l.rbegin() <= a.max());
    CHECK((l.count(1) > 0) == is_atom_reduced(a));
  }
}

TEST_CASE("factorizations") {
  MonEngine engine;
  std::map<MonIdeal, std::set<Multiset>> memo;
  for (const MonIdeal& e : {build_a(2), build_a(3), ideal({{4, 0}, {2, 2}, {0, 4}}), ideal({{3, 0}, {1, 1}, {0, 2}})}) {
    const auto zs = engine.factorizations(e);
    std::set<Multiset> got;
    for (const auto& z : zs) {
      MonIdeal p = MonIdeal::unit();
      for (const auto& atom : z.atoms) {
        p = product(p, atom);
        CHECK(engine.is_atom(atom));
      }
      CHECK(p == e);
      Multiset m = z.atoms;
      std::sort(m.begin(), m.end());
      got.insert(m);
    }
    CHECK(got.size() == zs.size());
    CHECK(got == naive_factorizations(e, memo));
    for (std::size_t i = 1; i < zs.size(); ++i) CHECK(zs[i - 1].length() <= zs[i].length());
  }
  const auto a2 = engine.factorizations(build_a(2));
  CHECK(std::any_of(a2.begin(), a2.end(), [](const auto& z) { return z.atoms == Multiset{build_a(1), build_a(1)}; }));
  const auto atom = engine.factorizations(build_c(4));
  REQUIRE(atom.size() == 1);
  CHECK(atom[0].atoms == Multiset{build_c(4)});
  const auto unit = engine.factorizations(MonIdeal::unit());
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].atoms.empty());
}

TEST_CASE("sets of lengths") {
  MonEngine engine;
  for (Nat k = 2; k <= 6; ++k) {
    LengthSet want;
    for (Nat x = 2; x <= k; ++x) want.insert(x);
    CHECK(engine.lengths(build_a(k)) == want);
  }
  CHECK(engine.lengths(build_I_C(SumSequence::minimal(2))) == LengthSet{2, 3});
  CHECK(engine.lengths(MonIdeal::unit()) == LengthSet{0});
  CHECK(engine.lengths(build_b(3)) == LengthSet{1});
}

TEST_CASE("level-bounded lengths agree with the full search") {
  for (const auto& e : sample_ideals(23, 150, 6)) {
    MonEngine engine;
    const auto r = lengths_mon(e);
    REQUIRE(r.complete);
    CHECK_MESSAGE(r.lengths == engine.lengths(e), to_string(e));
  }
  for (Nat k = 1; k <= 7; ++k) {
    MonEngine engine;
    CHECK(lengths_mon(build_a(k)).lengths == engine.lengths(build_a(k)));
  }
  CHECK(lengths_mon(build_I_C(SumSequence::minimal(3))).lengths == LengthSet{2, 3, 4});
  CHECK(lengths_mon(MonIdeal::unit()).lengths == LengthSet{0});
  CHECK(pure_level_set(build_c(4)) == NatSet{0, 1, 2, 4});
  CHECK_FALSE(pure_level_set(ideal({{3, 0}, {0, 2}})).has_value());
}

TEST_CASE("results do not depend on parallelism") {
  for (const MonIdeal& e : {build_a(6), build_I_C(SumSequence::minimal(2)), ideal({{6, 0}, {4, 1}, {2, 3}, {0, 6}})}) {
    MonEngine serial(BudgetLimits{500'000'000, 600.0, 1});
    MonEngine parallel(BudgetLimits{500'000'000, 600.0, 4});
    CHECK(serial.lengths(e) == parallel.lengths(e));
    CHECK(serial.split(e) == parallel.split(e));
  }
  ReducedPowerEngine serial(BudgetLimits{500'000'000, 600.0, 1});
  ReducedPowerEngine parallel(BudgetLimits{500'000'000, 600.0, 3});
  const NatSet c = build_C(SumSequence::minimal(3));
  CHECK(serial.lengths(c) == parallel.lengths(c));
}

TEST_CASE("budget exhaustion is inconclusive") {
  const MonIdeal e = build_I_C(SumSequence::minimal(3));
  MonEngine engine(BudgetLimits{2000, 60.0, 1});
  CHECK_THROWS_AS(engine.lengths(e), SearchInconclusive);
  MonEngine bounded(BudgetLimits{2000, 60.0, 1});
  CHECK_FALSE(bounded.lengths_bounded(e).complete);
  CHECK_FALSE(lengths_mon(build_a(30), BudgetLimits{10, 60.0, 1}).complete);
  MonEngine small_cache(BudgetLimits{500'000'000, 60.0, 1, 1000});
  CHECK_THROWS_AS(small_cache.left_factors(e), SearchInconclusive);
}
