#pragma once

// Homogeneous ideals of Q[X, Y] handled degree by degree with exact linear
// algebra. Coefficients use GMP rationals.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "monfact/errors.hpp"
#include "monfact/monomial_ideal.hpp"

namespace monfact {

using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign); the result is canonical.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Nonzero homogeneous polynomial of degree t; coeffs[i] multiplies X^(t-i) Y^i.
class HomPoly {
 public:
  /// Throws DomainError if coeffs is empty or all zero.
  explicit HomPoly(std::vector<Rational> coeffs);
  static HomPoly monomial(Nat x, Nat y, Rational coeff = 1);

  Nat degree() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Scaled so the first nonzero coefficient is 1.
  HomPoly monic() const;

  friend HomPoly operator*(const HomPoly& f, const HomPoly& g);
  friend bool operator==(const HomPoly&, const HomPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const HomPoly& f);

/// Ideal generated by finitely many homogeneous polynomials.
struct GradedIdeal2 {
  std::vector<HomPoly> gens;  // nonempty

  explicit GradedIdeal2(std::vector<HomPoly> generators);
  static GradedIdeal2 from_monomial(const MonIdeal& ideal);

  Nat max_degree() const;
};

/// Row-reduced basis of a subspace of the degree-t forms: each row has t+1
/// entries, leading entry 1 in strictly increasing columns, pivot columns
/// cleared in every other row.
struct GradedPiece {
  Nat degree = 0;
  std::vector<std::vector<Rational>> rows;

  std::size_t rank() const { return rows.size(); }
  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

/// Reduced row-echelon form (leftmost pivot, pivot 1, zero rows dropped).
std::vector<std::vector<Rational>> rref(std::vector<std::vector<Rational>> rows);

/// Span of all X^(t-s-j) Y^j g over generators g of degree s <= t.
GradedPiece graded_piece(const GradedIdeal2& ideal, Nat t);

/// Span of { f g : f in p, g in q }, as a piece of degree p.degree + q.degree.
GradedPiece product_space(const GradedPiece& p, const GradedPiece& q);

/// Pairwise generator products; generators are made monic and duplicates dropped.
GradedIdeal2 product(const GradedIdeal2& a, const GradedIdeal2& b);

/// Compares graded pieces in every degree up to the largest generator degree,
/// which determines a homogeneous ideal in two variables completely.
bool equals(const GradedIdeal2& a, const GradedIdeal2& b);

/// Checks that the minimal-degree piece of IJ equals the product of the
/// minimal-degree pieces of I and J.
bool min_degree_product_check(const MonIdeal& i, const MonIdeal& j);

}  // namespace monfact
