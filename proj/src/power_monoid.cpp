#include "monfact/power_monoid.hpp"

#include <algorithm>

#include "monfact/dense_bits.hpp"

namespace monfact {

namespace {

// Widest set the bitset search accepts.
constexpr Nat kMaxSearchWidth = Nat{1} << 24;

DenseBits to_bits(const NatSet& s, std::size_t width) {
  DenseBits bits(width);
  for (Nat x : s) {
    if (x < width) bits.set(static_cast<std::size_t>(x));
  }
  return bits;
}

NatSet from_bits(const DenseBits& bits) {
  std::vector<Nat> v;
  bits.for_each([&](std::size_t i) { v.push_back(i); });
  return NatSet::from_elements(std::move(v));
}

void require_reduced(const NatSet& a) {
  if (!a.is_reduced()) {
    throw DomainError("expected a set containing 0, got {" + to_string(a) + "}");
  }
}

// Depth-first search over 0-containing B inside A with fixed maximum beta.
// Elements of B below beta are decided in increasing order; after each decision
// the sumset of the decided part with the maximal cofactor must already
// reproduce A on the decided prefix.
class ReducedCandidateSearch {
 public:
  ReducedCandidateSearch(const NatSet& a, SearchBudget& budget,
                         const std::function<bool(const NatSet&)>& emit)
      : top_(static_cast<std::size_t>(a.max())),
        whole_(to_bits(a, top_ + 1)),
        budget_(budget),
        emit_(emit) {}

  void run() {
    whole_.for_each([&](std::size_t beta) {
      if (stopped_ || beta == 0 || beta == top_) return;
      const std::size_t gamma = top_ - beta;
      if (!whole_.test(gamma)) return;
      beta_ = beta;
      // B must lie in A, below beta, and be closed under adding 0 and gamma.
      DenseBits hi = whole_;
      hi &= whole_.shifted_down(gamma);
      options_.clear();
      hi.for_each([&](std::size_t b) {
        if (b > 0 && b < beta) options_.push_back(b);
      });
      DenseBits chosen(top_ + 1);
      chosen.set(0);
      chosen.set(beta);
      DenseBits cofactor = whole_;
      cofactor &= whole_.shifted_down(beta);
      cofactor.truncate(gamma + 1);
      dfs(0, chosen, cofactor);
    });
  }

 private:
  // Sumset of chosen and cofactor agrees with A below `limit`.
  bool prefix_ok(const DenseBits& chosen, const DenseBits& cofactor, std::size_t limit) const {
    DenseBits sum(top_ + 1);
    chosen.for_each([&](std::size_t b) {
      if (b < limit) sum.or_shifted_up(cofactor, b);
    });
    return sum.equal_below(whole_, limit);
  }

  void dfs(std::size_t idx, DenseBits& chosen, const DenseBits& cofactor) {
    if (stopped_) return;
    budget_.charge();
    if (!cofactor.test(0) || !cofactor.test(top_ - beta_)) return;
    const std::size_t limit = idx < options_.size() ? options_[idx] : beta_;
    if (!prefix_ok(chosen, cofactor, limit)) return;
    if (idx == options_.size()) {
      if (prefix_ok(chosen, cofactor, top_ + 1)) {
        if (!emit_(from_bits(chosen))) stopped_ = true;
      }
      return;
    }
    const std::size_t b = options_[idx];
    DenseBits narrowed = cofactor;
    narrowed &= whole_.shifted_down(b);
    chosen.set(b);
    dfs(idx + 1, chosen, narrowed);
    chosen.reset(b);
    dfs(idx + 1, chosen, cofactor);
  }

  std::size_t top_;
  DenseBits whole_;
  SearchBudget& budget_;
  const std::function<bool(const NatSet&)>& emit_;
  std::size_t beta_ = 0;
  std::vector<std::size_t> options_;
  bool stopped_ = false;
};

}  // namespace

NatSet sumset(const NatSet& a, const NatSet& b) {
  std::vector<Nat> sums;
  sums.reserve(a.size() * b.size());
  for (Nat x : a) {
    for (Nat y : b) sums.push_back(checked_add(x, y));
  }
  return NatSet::from_elements(std::move(sums));
}

bool is_sum_free(const NatSet& a) {
  for (auto i = a.begin(); i != a.end(); ++i) {
    for (auto j = i; j != a.end(); ++j) {
      Nat s;
      if (__builtin_add_overflow(*i, *j, &s)) break;
      if (s > a.max()) break;
      if (a.contains(s)) return false;
    }
  }
  return true;
}

std::optional<NatSet> set_colon(const NatSet& whole, const NatSet& part) {
  // c + min(part) must lie in whole, so candidates come from whole - min(part).
  std::vector<Nat> out;
  for (Nat w : whole) {
    if (w < part.min()) continue;
    const Nat c = w - part.min();
    bool ok = true;
    for (Nat p : part) {
      Nat s;
      if (__builtin_add_overflow(p, c, &s) || !whole.contains(s)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  if (out.empty()) return std::nullopt;
  return NatSet::from_elements(std::move(out));
}

ReducedForm reduce(const NatSet& a) {
  std::vector<Nat> v;
  v.reserve(a.size());
  for (Nat x : a) v.push_back(x - a.min());
  return {a.min(), NatSet::from_elements(std::move(v))};
}

void ReducedPowerMonoid::for_each_candidate(const NatSet& a, SearchBudget& budget,
                                            const std::function<bool(const NatSet&)>& emit) {
  require_reduced(a);
  if (a.max() >= kMaxSearchWidth) {
    throw DomainError("set too wide for factorization search: max " + std::to_string(a.max()));
  }
  if (a.size() < 3) return;  // {0} and {0, i} have no proper splits
  ReducedCandidateSearch(a, budget, emit).run();
}

std::vector<std::pair<NatSet, NatSet>> decompose_reduced(const NatSet& a, BudgetLimits limits) {
  require_reduced(a);
  if (ReducedPowerMonoid::is_identity(a)) return {};
  ReducedPowerEngine engine(limits);
  return engine.split(a);
}

bool is_atom_reduced(const NatSet& a, BudgetLimits limits) {
  require_reduced(a);
  if (ReducedPowerMonoid::is_identity(a)) return false;
  ReducedPowerEngine engine(limits);
  return engine.is_atom(a);
}

LengthSet lengths_reduced(const NatSet& a, BudgetLimits limits) {
  require_reduced(a);
  ReducedPowerEngine engine(limits);
  return engine.lengths(a);
}

bool is_atom_pfin(const NatSet& a, BudgetLimits limits) {
  const auto [shift, base] = reduce(a);
  if (shift == 0) return is_atom_reduced(base, limits);
  return shift == 1 && ReducedPowerMonoid::is_identity(base);
}

LengthSet lengths_pfin(const NatSet& a, BudgetLimits limits) {
  const auto [shift, base] = reduce(a);
  LengthSet out;
  for (Nat l : lengths_reduced(base, limits)) out.insert(checked_add(l, shift));
  return out;
}

}  // namespace monfact

namespace monfact {

std::vector<std::pair<NatSet, NatSet>> ordered_factor_pairs(const NatSet& a, SearchBudget& budget) {
  require_reduced(a);
  std::vector<NatSet> factors{NatSet{0}};
  if (!ReducedPowerMonoid::is_identity(a)) {
    ReducedPowerMonoid::for_each_candidate(a, budget, [&](const NatSet& b) {
      factors.push_back(b);
      return true;
    });
    factors.push_back(a);
  }
  std::sort(factors.begin(), factors.end(), [](const NatSet& x, const NatSet& y) {
    return std::pair(x.max(), to_string(x)) < std::pair(y.max(), to_string(y));
  });
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  std::vector<std::pair<NatSet, NatSet>> out;
  for (const auto& b : factors) {
    for (const auto& c : factors) {
      if (b.max() + c.max() != a.max()) continue;
      budget.charge();
      if (sumset(b, c) == a) out.emplace_back(b, c);
    }
  }
  return out;
}

}  // namespace monfact
