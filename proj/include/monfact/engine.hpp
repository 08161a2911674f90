#pragma once

// Generic atom testing and sets-of-lengths search over a reduced,
// unit-cancellative monoid with an additive grading.
//
// A Traits type supplies:
//   using Element;                      // canonical value, totally ordered
//   static Element identity();
//   static bool is_identity(const Element&);
//   static Element product(const Element&, const Element&);
//   static std::optional<Element> colon(const Element& whole, const Element& part);
//       largest c with part*c dividing whole, or nullopt if none exists
//   static Nat grade(const Element&);   // additive, 0 exactly on the identity
//   static std::string key(const Element&);
//   static void for_each_candidate(const Element&, SearchBudget&,
//                                  const std::function<bool(const Element&)>&);
//       streams proper candidate divisors; every genuine non-identity factor
//       other than the element itself must appear. Returning false stops.
//
// A candidate a is a left factor iff a * colon(e, a) == e; colon maximality
// makes this test complete.

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "monfact/budget.hpp"
#include "monfact/errors.hpp"
#include "monfact/length_set.hpp"

namespace monfact {

template <class E>
struct Factorization {
  std::vector<E> atoms;  // sorted by canonical key
  std::size_t length() const { return atoms.size(); }
  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

struct LengthsResult {
  LengthSet lengths;
  bool complete = true;  // false: budget ran out, lengths is a lower bound
};

template <class Traits>
class FactorizationEngine {
 public:
  using Element = typename Traits::Element;
  using Split = std::pair<Element, Element>;

  explicit FactorizationEngine(BudgetLimits limits = {}) : budget_(limits) {}

  SearchBudget& budget() { return budget_; }

  /// Every non-identity a != e with a * b == e for some non-identity b,
  /// ordered by (grade, key).
  std::vector<Element> left_factors(const Element& e) {
    require_proper(e);
    {
      std::lock_guard lock(memo_mu_);
      if (auto it = factor_memo_.find(e); it != factor_memo_.end()) return it->second;
    }
    std::vector<Element> out;
    Traits::for_each_candidate(e, budget_, [&](const Element& a) {
      budget_.charge();
      if (cofactor_of(e, a)) {
        budget_.charge_cached();
        out.push_back(a);
      }
      return true;
    });
    sort_canonical(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::lock_guard lock(memo_mu_);
    factor_memo_.emplace(e, out);
    return out;
  }

  /// All unordered (a, b) with a * b == e, both non-identity. Each pair is
  /// stored with (grade, key) of a not exceeding that of b; pairs are sorted.
  std::vector<Split> split(const Element& e) {
    const auto factors = left_factors(e);
    const Nat g = Traits::grade(e);
    std::vector<Split> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Nat ga = Traits::grade(factors[i]);
      if (2 * ga > g) break;
      for (std::size_t j = i; j < factors.size(); ++j) {
        const Nat gb = Traits::grade(factors[j]);
        if (ga + gb < g) continue;
        if (ga + gb > g) break;
        budget_.charge();
        if (Traits::product(factors[i], factors[j]) == e) {
          out.emplace_back(factors[i], factors[j]);
        }
      }
    }
    return out;
  }

  /// One split if any exists, stopping at the first left factor found.
  std::optional<Split> find_split(const Element& e) {
    require_proper(e);
    {
      std::lock_guard lock(memo_mu_);
      if (auto it = factor_memo_.find(e); it != factor_memo_.end()) {
        if (it->second.empty()) return std::nullopt;
        const Element& a = it->second.front();
        return ordered(a, *Traits::colon(e, a));
      }
    }
    std::optional<Split> found;
    Traits::for_each_candidate(e, budget_, [&](const Element& a) {
      budget_.charge();
      if (auto b = cofactor_of(e, a)) {
        found = ordered(a, *b);
        return false;
      }
      return true;
    });
    return found;
  }

  bool is_atom(const Element& e) { return !find_split(e).has_value(); }

  /// Complete set of lengths; throws SearchInconclusive on budget exhaustion.
  LengthSet lengths(const Element& e) {
    LengthSet sink;
    lengths_into(e, sink, /*top_level=*/true);
    return sink;
  }

  /// Like lengths(), but on budget exhaustion returns the lengths certified so
  /// far with complete = false.
  LengthsResult lengths_bounded(const Element& e) {
    LengthsResult result;
    try {
      lengths_into(e, result.lengths, /*top_level=*/true);
    } catch (const SearchInconclusive&) {
      result.complete = false;
    }
    return result;
  }

  /// All factorizations up to reordering, each a key-sorted list of atoms.
  std::vector<Factorization<Element>> factorizations(const Element& e) {
    if (Traits::is_identity(e)) return {Factorization<Element>{}};
    {
      std::lock_guard lock(memo_mu_);
      if (auto it = factorization_memo_.find(e); it != factorization_memo_.end()) {
        return it->second;
      }
    }
    std::vector<Factorization<Element>> out;
    const auto splits = split(e);
    if (splits.empty()) {
      out.push_back(Factorization<Element>{{e}});
    } else {
      std::map<std::vector<std::string>, Factorization<Element>> unique;
      for (const auto& [a, b] : splits) {
        const auto za = factorizations(a);
        const auto zb = factorizations(b);
        for (const auto& x : za) {
          for (const auto& y : zb) {
            budget_.charge();
            Factorization<Element> z;
            z.atoms = x.atoms;
            z.atoms.insert(z.atoms.end(), y.atoms.begin(), y.atoms.end());
            sort_canonical(z.atoms);
            std::vector<std::string> keys;
            keys.reserve(z.atoms.size());
            for (const auto& atom : z.atoms) keys.push_back(Traits::key(atom));
            unique.emplace(std::move(keys), std::move(z));
          }
        }
      }
      for (auto& [keys, z] : unique) out.push_back(std::move(z));
      std::stable_sort(out.begin(), out.end(),
                       [](const auto& x, const auto& y) { return x.length() < y.length(); });
    }
    std::lock_guard lock(memo_mu_);
    factorization_memo_.emplace(e, out);
    return out;
  }

 private:
  void require_proper(const Element& e) const {
    if (Traits::is_identity(e)) throw DomainError("the identity has no proper splits");
  }

  std::optional<Element> cofactor_of(const Element& e, const Element& a) const {
    if (Traits::is_identity(a) || a == e) return std::nullopt;
    auto b = Traits::colon(e, a);
    if (!b || Traits::is_identity(*b)) return std::nullopt;
    if (Traits::product(a, *b) != e) return std::nullopt;
    return b;
  }

  static bool canonical_less(const Element& x, const Element& y) {
    const Nat gx = Traits::grade(x), gy = Traits::grade(y);
    if (gx != gy) return gx < gy;
    return Traits::key(x) < Traits::key(y);
  }

  static void sort_canonical(std::vector<Element>& v) {
    std::vector<std::pair<std::pair<Nat, std::string>, Element>> tagged;
    tagged.reserve(v.size());
    for (auto& x : v) tagged.push_back({{Traits::grade(x), Traits::key(x)}, std::move(x)});
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    v.clear();
    for (auto& t : tagged) v.push_back(std::move(t.second));
  }

  static Split ordered(const Element& a, const Element& b) {
    return canonical_less(b, a) ? Split{b, a} : Split{a, b};
  }

  void lengths_into(const Element& e, LengthSet& sink, bool top_level) {
    if (Traits::is_identity(e)) {
      sink.insert(0);
      return;
    }
    {
      std::lock_guard lock(memo_mu_);
      if (auto it = length_memo_.find(e); it != length_memo_.end()) {
        sink.insert(it->second.begin(), it->second.end());
        return;
      }
    }
    const auto splits = split(e);
    LengthSet result;
    if (splits.empty()) result.insert(1);

    auto combine = [this](const Split& s) {
      LengthSet la, lb, out;
      lengths_into(s.first, la, false);
      lengths_into(s.second, lb, false);
      for (Nat x : la) {
        for (Nat y : lb) out.insert(x + y);
      }
      return out;
    };

    const unsigned width = budget_.limits().parallelism;
    if (top_level) sink.insert(result.begin(), result.end());
    if (top_level && width > 1 && splits.size() > 1) {
      std::mutex sink_mu;
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      auto worker = [&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= splits.size()) return;
          try {
            auto part = combine(splits[i]);
            std::lock_guard lock(sink_mu);
            result.insert(part.begin(), part.end());
            sink.insert(part.begin(), part.end());
          } catch (...) {
            std::lock_guard lock(sink_mu);
            if (!failure) failure = std::current_exception();
            next = splits.size();
            return;
          }
        }
      };
      std::vector<std::thread> pool;
      const std::size_t n = std::min<std::size_t>(width, splits.size());
      for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);
    } else {
      for (const auto& s : splits) {
        auto part = combine(s);
        result.insert(part.begin(), part.end());
        if (top_level) sink.insert(part.begin(), part.end());
      }
    }
    if (!top_level) sink.insert(result.begin(), result.end());
    std::lock_guard lock(memo_mu_);
    length_memo_.emplace(e, std::move(result));
  }

  SearchBudget budget_;
  std::mutex memo_mu_;
  std::map<Element, std::vector<Element>> factor_memo_;
  std::map<Element, LengthSet> length_memo_;
  std::map<Element, std::vector<Factorization<Element>>> factorization_memo_;
};

}  // namespace monfact
