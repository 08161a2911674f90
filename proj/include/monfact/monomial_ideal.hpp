#pragma once

// Nonzero monomial ideals of K[X, Y], represented by their unique minimal
// monomial generating set (a staircase antichain of exponent pairs).

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "monfact/errors.hpp"
#include "monfact/families.hpp"
#include "monfact/nat_set.hpp"

namespace monfact {

/// Exponents of the monomial X^x Y^y.
struct ExpPair {
  Nat x = 0;
  Nat y = 0;

  bool divides(const ExpPair& o) const { return x <= o.x && y <= o.y; }
  Nat degree() const { return checked_add(x, y); }

  friend bool operator==(const ExpPair&, const ExpPair&) = default;
  friend auto operator<=>(const ExpPair&, const ExpPair&) = default;
};

class MonIdeal {
 public:
  /// Drops every pair divisible by another and sorts canonically (x strictly
  /// descending, y strictly ascending). Throws DomainError on empty input.
  static MonIdeal from_generators(std::vector<ExpPair> raw);
  static MonIdeal unit() { return MonIdeal({{0, 0}}); }

  std::span<const ExpPair> gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == ExpPair{0, 0}; }

  /// Largest exponents appearing among the generators.
  Nat max_x() const { return gens_.front().x; }
  Nat max_y() const { return gens_.back().y; }

  friend bool operator==(const MonIdeal&, const MonIdeal&) = default;
  friend auto operator<=>(const MonIdeal&, const MonIdeal&) = default;

 private:
  explicit MonIdeal(std::vector<ExpPair> canonical) : gens_(std::move(canonical)) {}
  std::vector<ExpPair> gens_;
};

/// True iff some generator of I divides m.
bool contains_monomial(const MonIdeal& ideal, const ExpPair& m);

/// J is a subset of I.
bool contains_ideal(const MonIdeal& ideal, const MonIdeal& sub);

MonIdeal product(const MonIdeal& a, const MonIdeal& b);
MonIdeal intersection(const MonIdeal& a, const MonIdeal& b);

/// (I : J), the largest monomial ideal Q with J Q inside I.
MonIdeal colon(const MonIdeal& ideal, const MonIdeal& by);

/// Least total degree of a generator; 0 exactly for the unit ideal.
Nat mdeg(const MonIdeal& ideal);

/// The ideal generated by X^(max A - a) Y^a for a in A.
MonIdeal phi(const NatSet& a);

/// <X, Y>^k
MonIdeal build_a(Nat k);
/// <X^i, Y^i>
MonIdeal build_b(Nat i);
/// image of {0,1,3,...,2i+1} for odd k = 2i+1 (i >= 1), of {0,1,2,4,...,2i}
/// for even k = 2i (i >= 2)
MonIdeal build_c(Nat k);
MonIdeal build_I_B(const SumSequence& seq);
MonIdeal build_I_C(const SumSequence& seq);
/// <b_{a_1} b_{a_3} ... b_{a_r}, X^(a_3 + ... + a_r - a_2) Y^(a_3 - a_2)>,
/// for 3 <= r <= n.
MonIdeal build_tilde_b(const SumSequence& seq, unsigned r);

/// Text form "X^4, X^3 Y, X^2 Y^2, Y^4"; the unit ideal prints as "1".
std::string to_string(const MonIdeal& ideal);

}  // namespace monfact
