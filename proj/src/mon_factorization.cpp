#include "monfact/mon_factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "monfact/power_monoid.hpp"

namespace monfact {

namespace {

using Height = std::int64_t;
using Staircase = std::vector<Height>;  // f(x) = least y with X^x Y^y in the ideal

constexpr Nat kMaxBox = Nat{1} << 16;

// Staircase of an ideal containing X^p, over columns [0, p].
Staircase staircase_of(const MonIdeal& ideal, std::size_t p) {
  Staircase f(p + 1, std::numeric_limits<Height>::max());
  for (const auto& g : ideal.gens()) {
    for (std::size_t x = g.x; x <= p; ++x) f[x] = std::min<Height>(f[x], static_cast<Height>(g.y));
  }
  return f;
}

MonIdeal ideal_of(const Staircase& f) {
  std::vector<ExpPair> gens;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x == 0 || f[x] < f[x - 1]) gens.push_back({x, static_cast<Nat>(f[x])});
  }
  return MonIdeal::from_generators(std::move(gens));
}

Height at(const Staircase& f, std::size_t x) { return x < f.size() ? f[x] : 0; }

// Staircase of (e : a) over columns [0, len(e) - 1]; both ideals contain pure
// powers of X and Y.
Staircase colon_staircase(const Staircase& e, const Staircase& a) {
  Staircase out(e.size(), 0);
  for (std::size_t x1 = 0; x1 < a.size(); ++x1) {
    if (x1 > 0 && a[x1] == a[x1 - 1]) continue;  // only corners of a matter
    for (std::size_t x2 = 0; x2 < out.size(); ++x2) {
      out[x2] = std::max(out[x2], at(e, x1 + x2) - a[x1]);
    }
  }
  return out;
}

class ArtinianSearch {
 public:
  ArtinianSearch(const MonIdeal& e, SearchBudget& budget,
                 const std::function<bool(const MonIdeal&)>& emit)
      : budget_(budget), emit_(emit) {
    pe_ = e.max_x();
    qe_ = e.max_y();
    if (pe_ > kMaxBox || qe_ > kMaxBox) {
      throw DomainError("exponent box too large for factorization search");
    }
    fe_ = staircase_of(e, pe_);
    m_ = mdeg(e);
    std::vector<Nat> level;
    for (const auto& g : e.gens()) {
      if (g.degree() == m_) level.push_back(g.y);
    }
    const NatSet level_set = NatSet::from_elements(std::move(level));
    level_shift_ = level_set.min();
    level_pairs_ = ordered_factor_pairs(reduce(level_set).base, budget_);
  }

  void run() {
    for (Nat d = 1; d < m_ && !stopped_; ++d) {
      const Nat d2 = m_ - d;
      for (const auto& [ca, cb] : level_pairs_) {
        if (ca.max() > d || cb.max() > d2) continue;
        for (Nat sa = 0; sa <= level_shift_ && !stopped_; ++sa) {
          const Nat sb = level_shift_ - sa;
          if (sa + ca.max() > d || sb + cb.max() > d2) continue;
          branch(d, shifted(ca, sa), shifted(cb, sb));
        }
      }
    }
  }

 private:
  static NatSet shifted(const NatSet& s, Nat by) {
    std::vector<Nat> v;
    for (Nat x : s) v.push_back(x + by);
    return NatSet::from_elements(std::move(v));
  }

  // Range of the pure X (or Y) exponent of a factor whose minimal-degree
  // exponent set is `level` at degree `deg`, seen along the axis where
  // `on_axis` tells whether the axis monomial has that minimal degree.
  static std::pair<Nat, Nat> axis_range(bool on_axis, Nat deg, Nat total) {
    if (on_axis) return {deg, deg};
    return {deg + 1, total};
  }

  void branch(Nat d, const NatSet& level_a, const NatSet& level_b) {
    const Nat d2 = m_ - d;
    // X^{deg} has y = 0, Y^{deg} has y = deg.
    const auto [pa_lo, pa_hi] = axis_range(level_a.contains(0), d, pe_);
    const auto [pb_lo, pb_hi] = axis_range(level_b.contains(0), d2, pe_);
    const auto [qa_lo, qa_hi] = axis_range(level_a.contains(d), d, qe_);
    const auto [qb_lo, qb_hi] = axis_range(level_b.contains(d2), d2, qe_);
    for (Nat pa = pa_lo; pa <= std::min(pa_hi, pe_) && !stopped_; ++pa) {
      if (pa >= pe_) break;
      const Nat pb = pe_ - pa;
      if (pb < pb_lo || pb > pb_hi) continue;
      for (Nat qa = qa_lo; qa <= std::min(qa_hi, qe_) && !stopped_; ++qa) {
        if (qa >= qe_) break;
        const Nat qb = qe_ - qa;
        if (qb < qb_lo || qb > qb_hi) continue;
        explore(d, level_a, level_b, pa, qa, pb, qb);
      }
    }
  }

  static MonIdeal forced_part(Nat deg, const NatSet& level, Nat p, Nat q) {
    std::vector<ExpPair> gens{{p, 0}, {0, q}};
    for (Nat s : level) gens.push_back({deg - s, s});
    return MonIdeal::from_generators(std::move(gens));
  }

  void explore(Nat d, const NatSet& level_a, const NatSet& level_b, Nat pa, Nat qa, Nat pb,
               Nat qb) {
    budget_.charge();
    const MonIdeal a_forced = forced_part(d, level_a, pa, qa);
    b_forced_ = staircase_of(forced_part(m_ - d, level_b, pb, qb), pb);

    hi_ = staircase_of(a_forced, pa);
    for (std::size_t x = 0; x <= pa; ++x) hi_[x] = std::min(hi_[x], at(fe_, x));

    lo_ = colon_staircase(fe_, b_forced_);
    lo_.resize(pa + 1);
    for (std::size_t x = 0; x <= pa; ++x) {
      if (x < pa) lo_[x] = std::max<Height>(lo_[x], 1);
      if (x <= d) {
        const Nat y = d - x;
        lo_[x] = std::max<Height>(lo_[x], level_a.contains(y) ? static_cast<Height>(y)
                                                             : static_cast<Height>(y) + 1);
      }
      if (lo_[x] > hi_[x]) return;
    }
    if (lo_[0] > static_cast<Height>(qa) || hi_[0] < static_cast<Height>(qa) || lo_[pa] > 0) return;

    current_.assign(pa + 1, 0);
    current_[0] = static_cast<Height>(qa);
    current_[pa] = 0;
    if (!consistent(0)) return;
    dfs(1);
  }

  // The cofactor bound (e : a_known), where a_known is the smallest ideal
  // compatible with columns [0, col] and the forced generators, must still
  // contain the forced part of b and reproduce e on columns [0, col].
  bool consistent(std::size_t col) {
    const std::size_t pa = current_.size() - 1;
    Staircase known(pa + 1);
    for (std::size_t x = 0; x <= pa; ++x) {
      known[x] = x <= col ? current_[x] : std::min(current_[col], hi_[x]);
    }
    const Staircase b_max = colon_staircase(fe_, known);
    for (std::size_t x = 0; x < b_max.size(); ++x) {
      if (b_max[x] > at(b_forced_, x)) return false;
    }
    for (std::size_t x = 0; x <= col; ++x) {
      Height best = std::numeric_limits<Height>::max();
      for (std::size_t x1 = 0; x1 <= x; ++x1) best = std::min(best, current_[x1] + b_max[x - x1]);
      if (best > fe_[x]) return false;
    }
    return true;
  }

  void dfs(std::size_t col) {
    if (stopped_) return;
    const std::size_t pa = current_.size() - 1;
    if (col == pa) {
      if (!consistent(pa)) return;
      if (!emit_(ideal_of(current_))) stopped_ = true;
      return;
    }
    const Height top = std::min(hi_[col], current_[col - 1]);
    for (Height v = top; v >= lo_[col] && !stopped_; --v) {
      budget_.charge();
      current_[col] = v;
      if (consistent(col)) dfs(col + 1);
    }
  }

  SearchBudget& budget_;
  const std::function<bool(const MonIdeal&)>& emit_;
  Nat pe_ = 0, qe_ = 0, m_ = 0, level_shift_ = 0;
  Staircase fe_;
  std::vector<std::pair<NatSet, NatSet>> level_pairs_;
  Staircase b_forced_, hi_, lo_, current_;
  bool stopped_ = false;
};

}  // namespace

void for_each_artinian_candidate(const MonIdeal& e, SearchBudget& budget,
                                 const std::function<bool(const MonIdeal&)>& emit) {
  if (e.is_unit()) return;
  if (e.gens().back().x != 0 || e.gens().front().y != 0) {
    throw DomainError("expected an ideal containing pure powers of X and Y");
  }
  ArtinianSearch(e, budget, emit).run();
}

void MonomialIdealMonoid::for_each_candidate(const MonIdeal& e, SearchBudget& budget,
                                             const std::function<bool(const MonIdeal&)>& emit) {
  if (e.is_unit()) return;
  // e = X^u Y^v J with J containing pure powers of both variables.
  const Nat u = e.gens().back().x;
  const Nat v = e.gens().front().y;
  std::vector<ExpPair> reduced;
  for (const auto& g : e.gens()) reduced.push_back({g.x - u, g.y - v});
  const MonIdeal core = MonIdeal::from_generators(std::move(reduced));

  bool go = true;
  auto emit_shifts = [&](const MonIdeal& factor) {
    for (Nat u1 = 0; u1 <= u && go; ++u1) {
      for (Nat v1 = 0; v1 <= v && go; ++v1) {
        std::vector<ExpPair> gens;
        for (const auto& g : factor.gens()) gens.push_back({g.x + u1, g.y + v1});
        MonIdeal cand = MonIdeal::from_generators(std::move(gens));
        if (cand.is_unit() || cand == e) continue;
        go = emit(cand);
      }
    }
    return go;
  };

  if (!emit_shifts(MonIdeal::unit())) return;
  if (core.is_unit()) return;
  if (!emit_shifts(core)) return;
  for_each_artinian_candidate(core, budget, emit_shifts);
}

std::optional<NatSet> pure_level_set(const MonIdeal& e) {
  if (e.is_unit()) return std::nullopt;
  const Nat m = mdeg(e);
  std::vector<Nat> level;
  for (const auto& g : e.gens()) {
    if (g.degree() == m) level.push_back(g.y);
  }
  NatSet out = NatSet::from_elements(std::move(level));
  if (out.min() != 0 || out.max() != m) return std::nullopt;
  return out;
}

namespace {

MonIdeal level_ideal(const NatSet& level) {
  std::vector<ExpPair> gens;
  for (Nat y : level) gens.push_back({level.max() - y, y});
  return MonIdeal::from_generators(std::move(gens));
}

// Lengths of factorizations assembled from a few explicit splits per
// element; always a subset of the true set of lengths.
class WitnessLengths {
 public:
  explicit WitnessLengths(MonEngine& engine) : engine_(engine) {}

  LengthSet of(const MonIdeal& e) {
    if (auto it = memo_.find(e); it != memo_.end()) return it->second;
    LengthSet out;
    for (const auto& [a, b] : splits(e)) {
      const LengthSet la = of(a);
      const LengthSet lb = of(b);
      for (Nat x : la) {
        for (Nat y : lb) out.insert(x + y);
      }
    }
    if (out.empty()) out.insert(1);
    memo_.emplace(e, out);
    return out;
  }

  // Splits of e: one from the general search, plus for each factorization
  // S_a + S_b of the level set the pairs (a_min, e : a_min) and
  // (e : b_min, b_min), where a_min, b_min are generated by the level parts.
  std::vector<std::pair<MonIdeal, MonIdeal>> splits(const MonIdeal& e) {
    std::vector<std::pair<MonIdeal, MonIdeal>> out;
    const auto any = engine_.find_split(e);
    if (!any) return out;
    out.push_back(*any);
    const auto level = pure_level_set(e);
    if (!level) return out;
    for (const auto& [sa, sb] : ordered_factor_pairs(*level, engine_.budget())) {
      if (sa.max() == 0 || sb.max() == 0) continue;
      const MonIdeal a_min = level_ideal(sa);
      const MonIdeal b_min = level_ideal(sb);
      for (const auto& [a, b] : {std::pair{a_min, colon(e, a_min)}, std::pair{colon(e, b_min), b_min}}) {
        engine_.budget().charge();
        if (!a.is_unit() && !b.is_unit() && product(a, b) == e) out.emplace_back(a, b);
      }
    }
    return out;
  }

 private:
  MonEngine& engine_;
  std::map<MonIdeal, LengthSet> memo_;
};

}  // namespace

LengthsResult lengths_mon(const MonIdeal& e, BudgetLimits limits) {
  MonEngine engine(limits);
  if (e.is_unit()) return {{0}, true};
  try {
    if (engine.is_atom(e)) return {{1}, true};
    if (const auto level = pure_level_set(e)) {
      const LengthSet level_lengths = lengths_reduced(*level, limits);
      const Nat bound = *level_lengths.rbegin();
      const LengthSet found = WitnessLengths(engine).of(e);
      bool covered = true;
      for (Nat k = 2; k <= bound; ++k) covered = covered && found.count(k) > 0;
      if (covered) {
        LengthSet out;
        for (Nat k = 2; k <= bound; ++k) out.insert(k);
        return {out, true};
      }
    }
  } catch (const SearchInconclusive&) {
    return {{}, false};
  }
  return engine.lengths_bounded(e);
}

}  // namespace monfact
