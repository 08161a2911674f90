#include "monfact/oracle.hpp"

#include <cstdint>
#include <limits>
#include <map>

#include "monfact/power_monoid.hpp"

namespace monfact::oracle {

namespace {

NatSet from_mask(std::uint32_t mask) {
  std::vector<Nat> v;
  for (Nat i = 0; i < 32; ++i) {
    if (mask >> i & 1u) v.push_back(i);
  }
  return NatSet::from_elements(std::move(v));
}

std::uint32_t mask_of(const NatSet& s) {
  std::uint32_t m = 0;
  for (Nat x : s) m |= std::uint32_t{1} << x;
  return m;
}

template <class E, class PairsFn>
LengthSet lengths_rec(const E& e, bool identity, PairsFn pairs, std::map<E, LengthSet>& memo) {
  if (identity) return {0};
  if (auto it = memo.find(e); it != memo.end()) return it->second;
  LengthSet out{1};
  bool atom = true;
  for (const auto& [b, c] : pairs(e)) {
    atom = false;
    for (Nat lb : lengths_rec(b, false, pairs, memo)) {
      for (Nat lc : lengths_rec(c, false, pairs, memo)) out.insert(lb + lc);
    }
  }
  if (!atom) out.erase(1);
  memo.emplace(e, out);
  return out;
}

}  // namespace

std::vector<std::pair<NatSet, NatSet>> reduced_pairs(const NatSet& a) {
  if (a.min() != 0) throw DomainError("reduced_pairs expects a set containing 0");
  if (a.max() >= 32) throw DomainError("reduced_pairs supports max(A) < 32");
  const std::uint32_t whole = mask_of(a);
  std::vector<std::pair<NatSet, NatSet>> out;
  const Nat top = a.max();
  // Every subset B of A with 0 in B, paired with every subset C of A with
  // 0 in C and max(B) + max(C) == max(A).
  for (std::uint32_t b = whole; b != 0; b = (b - 1) & whole) {
    if (!(b & 1u) || b == 1u) continue;
    const Nat cmax = top - (31 - static_cast<Nat>(__builtin_clz(b)));
    if (cmax == 0) continue;
    const std::uint32_t must = 1u | std::uint32_t{1} << cmax;
    if ((whole & must) != must) continue;
    const std::uint32_t room = whole & ((std::uint32_t{1} << cmax) - 1) & ~1u;
    for (std::uint32_t extra = room;; extra = (extra - 1) & room) {
      const std::uint32_t c = must | extra;
      std::uint32_t sum = 0;
      for (Nat i = 0; i <= top; ++i) {
        if (b >> i & 1u) sum |= c << i;
      }
      if (sum == whole) {
        NatSet bs = from_mask(b), cs = from_mask(c);
        if (bs <= cs) out.emplace_back(std::move(bs), std::move(cs));
      }
      if (extra == 0) break;
    }
  }
  return out;
}

LengthSet reduced_lengths(const NatSet& a) {
  std::map<NatSet, LengthSet> memo;
  return lengths_rec(a, ReducedPowerMonoid::is_identity(a), reduced_pairs, memo);
}

std::vector<MonIdeal> ideals_above(const MonIdeal& e) {
  constexpr Nat kNone = std::numeric_limits<Nat>::max();
  const Nat px = e.max_x();
  const Nat qy = e.max_y();
  // Staircase of e: least y over generators with x' <= x.
  std::vector<Nat> fe(px + 1, kNone);
  for (const auto& g : e.gens()) {
    for (Nat x = g.x; x <= px; ++x) fe[x] = std::min(fe[x], g.y);
  }
  std::vector<MonIdeal> out;
  std::vector<Nat> f(px + 1, kNone);
  auto rec = [&](auto&& self, Nat x, Nat cap) -> void {
    if (x > px) {
      std::vector<ExpPair> gens;
      for (Nat i = 0; i <= px; ++i) {
        if (f[i] != kNone && (i == 0 || f[i] != f[i - 1])) gens.push_back({i, f[i]});
      }
      out.push_back(MonIdeal::from_generators(std::move(gens)));
      return;
    }
    const Nat limit = std::min(cap, fe[x]);
    if (limit == kNone) {
      f[x] = kNone;
      self(self, x + 1, kNone);
    }
    for (Nat y = 0; y <= std::min(limit, qy); ++y) {
      f[x] = y;
      self(self, x + 1, y);
    }
  };
  rec(rec, 0, kNone);
  return out;
}

std::vector<std::pair<MonIdeal, MonIdeal>> ideal_pairs(const MonIdeal& e) {
  const auto above = ideals_above(e);
  std::vector<std::pair<MonIdeal, MonIdeal>> out;
  for (std::size_t i = 0; i < above.size(); ++i) {
    if (above[i].is_unit()) continue;
    for (std::size_t j = 0; j < above.size(); ++j) {
      if (above[j].is_unit() || above[j] < above[i]) continue;
      if (product(above[i], above[j]) == e) out.emplace_back(above[i], above[j]);
    }
  }
  return out;
}

LengthSet ideal_lengths(const MonIdeal& e) {
  std::map<MonIdeal, LengthSet> memo;
  return lengths_rec(e, e.is_unit(), ideal_pairs, memo);
}

}  // namespace monfact::oracle
