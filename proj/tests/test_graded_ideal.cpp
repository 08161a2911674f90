#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "monfact/graded_ideal.hpp"

using namespace monfact;

namespace {

using Row = std::vector<Rational>;

HomPoly poly(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return HomPoly(std::move(v));
}

MonIdeal random_ideal(std::mt19937_64& rng, Nat max, unsigned max_gens) {
  std::uniform_int_distribution<Nat> e(0, max);
  std::uniform_int_distribution<unsigned> k(1, max_gens);
  std::vector<ExpPair> gens;
  for (unsigned i = k(rng); i > 0; --i) gens.push_back({e(rng), e(rng)});
  return MonIdeal::from_generators(std::move(gens));
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational(" +1/3 ") == Rational(1, 3));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("homogeneous polynomials") {
  const HomPoly f = poly({1, 1});   // X + Y
  const HomPoly g = poly({1, -1});  // X - Y
  CHECK(f * g == poly({1, 0, -1}));
  CHECK(to_string(f * g) == "X^2 - Y^2");
  CHECK(to_string(poly({0, 2, 0})) == "2 X Y");
  CHECK(poly({0, 3, -6}).monic() == poly({0, 1, -2}));
  CHECK(HomPoly::monomial(2, 1) == poly({0, 1, 0, 0}));
  CHECK_THROWS_AS(poly({0, 0}), DomainError);
  CHECK_THROWS_AS(HomPoly({}), DomainError);
}

TEST_CASE("row reduction") {
  const auto r = rref({{Rational(2), Rational(4), Rational(0)},
                       {Rational(1), Rational(2), Rational(1)},
                       {Rational(3), Rational(6), Rational(1)}});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Row{1, 2, 0});
  CHECK(r[1] == Row{0, 0, 1});
  CHECK(rref({{Rational(0), Rational(0)}}).empty());
}

TEST_CASE("graded pieces of monomial ideals count monomials") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    const MonIdeal i = random_ideal(rng, 6, 4);
    const GradedIdeal2 g = GradedIdeal2::from_monomial(i);
    for (Nat t = 0; t <= 10; ++t) {
      std::size_t count = 0;
      for (Nat y = 0; y <= t; ++y) count += contains_monomial(i, {t - y, y}) ? 1 : 0;
      CHECK(graded_piece(g, t).rank() == count);
    }
  }
}

TEST_CASE("the c4 factorization over the rationals") {
  const GradedIdeal2 p({HomPoly::monomial(2, 0), poly({0, 1, 1})});
  const GradedIdeal2 q({HomPoly::monomial(2, 0), poly({0, 1, -1})});
  const GradedIdeal2 pq = product(p, q);
  const std::vector<HomPoly> want{poly({1, 0, 0, 0, 0}), poly({0, 1, -1, 0, 0}),
                                  poly({0, 1, 1, 0, 0}), poly({0, 0, 1, 0, -1})};
  CHECK(pq.gens.size() == want.size());
  for (const auto& w : want) {
    CHECK(std::find(pq.gens.begin(), pq.gens.end(), w) != pq.gens.end());
  }
  CHECK(equals(pq, GradedIdeal2::from_monomial(build_c(4))));
  CHECK_FALSE(equals(p, GradedIdeal2::from_monomial(build_a(2))));
  CHECK_FALSE(equals(GradedIdeal2::from_monomial(build_b(2)), GradedIdeal2::from_monomial(build_a(2))));
}

TEST_CASE("graded products of monomial ideals match monomial products") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 40; ++k) {
    const MonIdeal i = random_ideal(rng, 5, 3);
    const MonIdeal j = random_ideal(rng, 5, 3);
    CHECK(equals(product(GradedIdeal2::from_monomial(i), GradedIdeal2::from_monomial(j)),
                 GradedIdeal2::from_monomial(product(i, j))));
  }
}

TEST_CASE("minimal-degree piece of a product") {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 20; ++k) {
    CHECK(min_degree_product_check(random_ideal(rng, 6, 4), random_ideal(rng, 6, 4)));
  }
  CHECK(min_degree_product_check(build_b(2), build_b(3)));
  CHECK(min_degree_product_check(build_c(4), build_a(1)));
  const GradedPiece a = graded_piece(GradedIdeal2::from_monomial(build_b(2)), 2);
  const GradedPiece b = graded_piece(GradedIdeal2::from_monomial(build_b(3)), 3);
  CHECK(product_space(a, b).rank() == 4);
}
