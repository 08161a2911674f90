#pragma once

// Named subset families of N: the singletons beta_i, the odd and even delta
// sets, and the A_n / B_n / C_n families seeded by a sum sequence.

#include <cstdint>
#include <span>
#include <vector>

#include "monfact/errors.hpp"
#include "monfact/nat_set.hpp"

namespace monfact {

/// Positive integers a_1, ..., a_{n+1} (n >= 2) with
///   a_{n+1} = a_1 + ... + a_{n-1} + 2 a_n                 (closing condition)
///   a_{i+1} > 2 (a_1 + ... + a_i)  for i in [1, n-1]      (growth condition)
class SumSequence {
 public:
  /// Throws DomainError unless both conditions hold exactly.
  static SumSequence validate(std::vector<Nat> values);

  /// a_1 = 1, a_{i+1} = 2 (a_1 + ... + a_i) + 1, last entry forced by the
  /// closing condition. Throws DomainError for n < 2, OverflowError if too big.
  static SumSequence minimal(unsigned n);

  unsigned n() const { return static_cast<unsigned>(values_.size() - 1); }
  std::span<const Nat> values() const { return values_; }

  /// 1-based access, i in [1, n+1].
  Nat at(unsigned i) const;

  /// a_I for I given as 1-based indices; a_{empty} = 0. Repeated indices are
  /// rejected. Throws DomainError when an index is outside [1, n+1].
  Nat subset_sum(std::span<const unsigned> indices) const;

  /// a_I with I encoded as a bitmask, bit (i-1) standing for index i.
  Nat subset_sum_mask(std::uint64_t mask) const;

  friend bool operator==(const SumSequence&, const SumSequence&) = default;

 private:
  explicit SumSequence(std::vector<Nat> v) : values_(std::move(v)) {}
  std::vector<Nat> values_;
};

/// {a_I : I subset of [1, n-1]}
NatSet build_A(const SumSequence& seq);
/// A_n, a_{[1,n]}, and A_n + a_{n+1}
NatSet build_B(const SumSequence& seq);
/// {a_I : I subset of [1, n+1]}; throws DomainError if two subset sums collide.
NatSet build_C(const SumSequence& seq);

/// {i}
NatSet build_beta(Nat i);
/// {1, 3, 5, ..., 2i+1}
NatSet build_delta_odd(Nat i);
/// {1, 2, 4, ..., 2i}. Only for i >= 3 does {0} together with it give an
/// atom of the polynomial ideal monoid.
NatSet build_delta_even(Nat i);

/// {0} together with s.
NatSet with_zero(const NatSet& s);

}  // namespace monfact
