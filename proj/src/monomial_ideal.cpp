#include "monfact/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "monfact/families.hpp"

namespace monfact {

MonIdeal MonIdeal::from_generators(std::vector<ExpPair> raw) {
  if (raw.empty()) throw DomainError("a monomial ideal needs at least one generator");
  std::sort(raw.begin(), raw.end());
  std::vector<ExpPair> kept;
  Nat lowest_y = std::numeric_limits<Nat>::max();
  // With x ascending, a pair survives iff its y is below every earlier y.
  for (const auto& p : raw) {
    if (p.y < lowest_y) {
      kept.push_back(p);
      lowest_y = p.y;
    }
  }
  std::reverse(kept.begin(), kept.end());
  return MonIdeal(std::move(kept));
}

bool contains_monomial(const MonIdeal& ideal, const ExpPair& m) {
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const ExpPair& g) { return g.divides(m); });
}

bool contains_ideal(const MonIdeal& ideal, const MonIdeal& sub) {
  return std::all_of(sub.gens().begin(), sub.gens().end(),
                     [&](const ExpPair& g) { return contains_monomial(ideal, g); });
}

MonIdeal product(const MonIdeal& a, const MonIdeal& b) {
  std::vector<ExpPair> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) raw.push_back({checked_add(g.x, h.x), checked_add(g.y, h.y)});
  }
  return MonIdeal::from_generators(std::move(raw));
}

MonIdeal intersection(const MonIdeal& a, const MonIdeal& b) {
  std::vector<ExpPair> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) raw.push_back({std::max(g.x, h.x), std::max(g.y, h.y)});
  }
  return MonIdeal::from_generators(std::move(raw));
}

MonIdeal colon(const MonIdeal& ideal, const MonIdeal& by) {
  auto by_monomial = [&](const ExpPair& m) {
    std::vector<ExpPair> raw;
    raw.reserve(ideal.size());
    for (const auto& g : ideal.gens()) {
      raw.push_back({g.x > m.x ? g.x - m.x : 0, g.y > m.y ? g.y - m.y : 0});
    }
    return MonIdeal::from_generators(std::move(raw));
  };
  MonIdeal out = by_monomial(by.gens().front());
  for (std::size_t i = 1; i < by.size(); ++i) out = intersection(out, by_monomial(by.gens()[i]));
  return out;
}

Nat mdeg(const MonIdeal& ideal) {
  Nat best = std::numeric_limits<Nat>::max();
  for (const auto& g : ideal.gens()) best = std::min(best, g.degree());
  return best;
}

MonIdeal phi(const NatSet& a) {
  std::vector<ExpPair> raw;
  raw.reserve(a.size());
  for (Nat x : a) raw.push_back({a.max() - x, x});
  return MonIdeal::from_generators(std::move(raw));
}

MonIdeal build_a(Nat k) {
  if (k < 1) throw DomainError("a_k needs k >= 1");
  std::vector<ExpPair> raw;
  for (Nat y = 0; y <= k; ++y) raw.push_back({k - y, y});
  return MonIdeal::from_generators(std::move(raw));
}

MonIdeal build_b(Nat i) {
  if (i < 1) throw DomainError("b_i needs i >= 1");
  return MonIdeal::from_generators({{i, 0}, {0, i}});
}

MonIdeal build_c(Nat k) {
  if (k >= 3 && k % 2 == 1) return phi(with_zero(build_delta_odd((k - 1) / 2)));
  if (k >= 4 && k % 2 == 0) return phi(with_zero(build_delta_even(k / 2)));
  throw DomainError("c_k needs k = 2i+1 with i >= 1 or k = 2i with i >= 2");
}

MonIdeal build_I_B(const SumSequence& seq) { return phi(build_B(seq)); }

MonIdeal build_I_C(const SumSequence& seq) { return phi(build_C(seq)); }

MonIdeal build_tilde_b(const SumSequence& seq, unsigned r) {
  const unsigned n = seq.n();
  if (n < 3 || r < 3 || r > n) {
    throw DomainError("tilde_b_r needs n >= 3 and 3 <= r <= n (got n=" + std::to_string(n) +
                      ", r=" + std::to_string(r) + ")");
  }
  MonIdeal base = build_b(seq.at(1));
  Nat tail = 0;  // a_3 + ... + a_r
  for (unsigned i = 3; i <= r; ++i) {
    base = product(base, build_b(seq.at(i)));
    tail = checked_add(tail, seq.at(i));
  }
  std::vector<ExpPair> gens(base.gens().begin(), base.gens().end());
  gens.push_back({tail - seq.at(2), seq.at(3) - seq.at(2)});
  return MonIdeal::from_generators(std::move(gens));
}

std::string to_string(const MonIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    std::string term;
    if (g.x > 0) term += g.x == 1 ? "X" : "X^" + std::to_string(g.x);
    if (g.y > 0) {
      if (!term.empty()) term += ' ';
      term += g.y == 1 ? "Y" : "Y^" + std::to_string(g.y);
    }
    out += term.empty() ? "1" : term;
  }
  return out;
}

}  // namespace monfact
