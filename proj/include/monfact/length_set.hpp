#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "monfact/errors.hpp"

namespace monfact {

/// Set of factorization lengths of one element.
using LengthSet = std::set<Nat>;

/// Distances between consecutive lengths. Empty for a singleton.
/// Throws DomainError on an empty input.
std::set<Nat> delta_set(const LengthSet& lengths);

/// max/min of a length set, with rho({0}) = 1.
struct Elasticity {
  Nat num = 1;
  Nat den = 1;
  bool infinite = false;

  std::string to_string() const;  // "5/2", "1", "inf"
  friend bool operator==(const Elasticity&, const Elasticity&) = default;
};

Elasticity elasticity(const LengthSet& lengths);

}  // namespace monfact
