#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "monfact/errors.hpp"

namespace monfact {

/// A nonempty finite subset of the naturals in canonical (strictly increasing)
/// form. Elements of the power monoid; the reduced submonoid is min() == 0.
class NatSet {
 public:
  /// Sorts and deduplicates; throws DomainError on empty input.
  static NatSet from_elements(std::vector<Nat> elements);
  NatSet(std::initializer_list<Nat> elements);

  std::span<const Nat> elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  Nat min() const { return elems_.front(); }
  Nat max() const { return elems_.back(); }
  bool contains(Nat x) const;
  bool is_reduced() const { return elems_.front() == 0; }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const NatSet&, const NatSet&) = default;
  friend auto operator<=>(const NatSet&, const NatSet&) = default;

 private:
  explicit NatSet(std::vector<Nat> sorted_unique) : elems_(std::move(sorted_unique)) {}
  std::vector<Nat> elems_;
};

/// Comma-separated text form, e.g. "0,1,4,7,8".
std::string to_string(const NatSet& s);

}  // namespace monfact
