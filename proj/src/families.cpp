#include "monfact/families.hpp"

#include <string>

namespace monfact {

namespace {

std::vector<Nat> subset_sums(const SumSequence& seq, unsigned count) {
  if (count > 30) throw DomainError("too many subset sums to enumerate");
  std::vector<Nat> sums;
  const std::uint64_t limit = std::uint64_t{1} << count;
  sums.reserve(limit);
  for (std::uint64_t mask = 0; mask < limit; ++mask) sums.push_back(seq.subset_sum_mask(mask));
  return sums;
}

}  // namespace

SumSequence SumSequence::validate(std::vector<Nat> values) {
  if (values.size() < 3) {
    throw DomainError("a sum sequence needs n >= 2, i.e. at least 3 entries");
  }
  for (Nat v : values) {
    if (v == 0) throw DomainError("sum sequence entries must be positive");
  }
  const std::size_t n = values.size() - 1;
  Nat prefix = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // a_{i+2} > 2 (a_1 + ... + a_{i+1}) in 1-based terms
    prefix = checked_add(prefix, values[i]);
    if (values[i + 1] <= checked_mul(2, prefix)) {
      throw DomainError("growth condition fails at a_" + std::to_string(i + 2));
    }
  }
  Nat closing = checked_mul(2, values[n - 1]);
  for (std::size_t i = 0; i + 1 < n; ++i) closing = checked_add(closing, values[i]);
  if (values[n] != closing) {
    throw DomainError("closing condition fails: a_" + std::to_string(n + 1) + " must be " +
                      std::to_string(closing));
  }
  return SumSequence(std::move(values));
}

SumSequence SumSequence::minimal(unsigned n) {
  if (n < 2) throw DomainError("minimal sequence needs n >= 2");
  if (n > 60) throw OverflowError("minimal sequence for n > 60 overflows");
  std::vector<Nat> v{1};
  Nat prefix = 1;
  for (unsigned i = 1; i < n; ++i) {
    const Nat next = checked_add(checked_mul(2, prefix), 1);
    v.push_back(next);
    prefix = checked_add(prefix, next);
  }
  v.push_back(checked_add(prefix, v.back()));  // a_1 + ... + a_{n-1} + 2 a_n
  return validate(std::move(v));
}

Nat SumSequence::at(unsigned i) const {
  if (i < 1 || i > values_.size()) {
    throw DomainError("sequence index " + std::to_string(i) + " outside [1, " +
                      std::to_string(values_.size()) + "]");
  }
  return values_[i - 1];
}

Nat SumSequence::subset_sum(std::span<const unsigned> indices) const {
  std::uint64_t mask = 0;
  for (unsigned i : indices) {
    at(i);  // range check
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (mask & bit) throw DomainError("repeated index " + std::to_string(i));
    mask |= bit;
  }
  return subset_sum_mask(mask);
}

Nat SumSequence::subset_sum_mask(std::uint64_t mask) const {
  if (values_.size() < 64 && (mask >> values_.size()) != 0) {
    throw DomainError("index mask refers to entries beyond a_" + std::to_string(values_.size()));
  }
  Nat sum = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if ((mask >> i) & 1u) sum = checked_add(sum, values_[i]);
  }
  return sum;
}

NatSet build_A(const SumSequence& seq) {
  return NatSet::from_elements(subset_sums(seq, seq.n() - 1));
}

NatSet build_B(const SumSequence& seq) {
  const unsigned n = seq.n();
  std::vector<Nat> elems;
  const NatSet a = build_A(seq);
  const Nat top = seq.at(n + 1);
  for (Nat x : a) {
    elems.push_back(x);
    elems.push_back(checked_add(x, top));
  }
  elems.push_back(seq.subset_sum_mask((std::uint64_t{1} << n) - 1));
  return NatSet::from_elements(std::move(elems));
}

NatSet build_C(const SumSequence& seq) {
  auto sums = subset_sums(seq, seq.n() + 1);
  const std::size_t expected = sums.size();
  NatSet c = NatSet::from_elements(std::move(sums));
  if (c.size() != expected) throw DomainError("subset sums of the sequence are not distinct");
  return c;
}

NatSet build_beta(Nat i) {
  if (i < 1) throw DomainError("beta_i needs i >= 1");
  return NatSet{i};
}

NatSet build_delta_odd(Nat i) {
  if (i < 1) throw DomainError("delta_{2i+1} needs i >= 1");
  std::vector<Nat> v;
  for (Nat k = 0; k <= i; ++k) v.push_back(checked_add(checked_mul(2, k), 1));
  return NatSet::from_elements(std::move(v));
}

NatSet build_delta_even(Nat i) {
  if (i < 1) throw DomainError("delta_{2i} needs i >= 1");
  std::vector<Nat> v{1};
  for (Nat k = 1; k <= i; ++k) v.push_back(checked_mul(2, k));
  return NatSet::from_elements(std::move(v));
}

NatSet with_zero(const NatSet& s) {
  std::vector<Nat> v(s.begin(), s.end());
  v.push_back(0);
  return NatSet::from_elements(std::move(v));
}

}  // namespace monfact
