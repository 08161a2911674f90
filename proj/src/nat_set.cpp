#include "monfact/nat_set.hpp"

#include <algorithm>
#include <numeric>

#include "monfact/length_set.hpp"

namespace monfact {

NatSet NatSet::from_elements(std::vector<Nat> elements) {
  if (elements.empty()) throw DomainError("a NatSet must be nonempty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return NatSet(std::move(elements));
}

NatSet::NatSet(std::initializer_list<Nat> elements)
    : NatSet(from_elements(std::vector<Nat>(elements))) {}

bool NatSet::contains(Nat x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::string to_string(const NatSet& s) {
  std::string out;
  for (Nat x : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::set<Nat> delta_set(const LengthSet& lengths) {
  if (lengths.empty()) throw DomainError("delta set of an empty length set");
  std::set<Nat> out;
  for (auto it = std::next(lengths.begin()); it != lengths.end(); ++it) {
    out.insert(*it - *std::prev(it));
  }
  return out;
}

std::string Elasticity::to_string() const {
  if (infinite) return "inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Elasticity elasticity(const LengthSet& lengths) {
  if (lengths.empty()) throw DomainError("elasticity of an empty length set");
  const Nat lo = *lengths.begin(), hi = *lengths.rbegin();
  if (hi == 0) return {};
  if (lo == 0) return {0, 0, true};
  const Nat g = std::gcd(lo, hi);
  return {hi / g, lo / g, false};
}

}  // namespace monfact
