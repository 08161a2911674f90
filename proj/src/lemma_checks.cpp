#include "monfact/lemma_checks.hpp"

#include <cstdint>
#include <set>
#include <sstream>

namespace monfact {

namespace {

using Mask = std::uint64_t;

std::string mask_text(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned i = 0; i < 64; ++i) {
    if (m >> i & 1u) {
      os << (first ? "" : ",") << i + 1;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

std::string pair_text(const char* what, Mask i, Mask j) {
  return std::string(what) + ": I=" + mask_text(i) + " J=" + mask_text(j);
}

Mask range_mask(unsigned lo, unsigned hi) {
  Mask m = 0;
  for (unsigned i = lo; i <= hi; ++i) m |= Mask{1} << (i - 1);
  return m;
}

std::set<Nat> sums_over(const SumSequence& seq, Mask universe) {
  std::set<Nat> out;
  for (Mask h = universe;; h = (h - 1) & universe) {
    out.insert(seq.subset_sum_mask(h));
    if (h == 0) break;
  }
  return out;
}

template <class F>
void for_submasks(Mask universe, F f) {
  for (Mask h = universe;; h = (h - 1) & universe) {
    f(h);
    if (h == 0) break;
  }
}

}  // namespace

std::optional<std::string> check_subset_sum_uniqueness(const SumSequence& seq) {
  std::optional<std::string> bad;
  for (unsigned k = 1; k <= seq.n() && !bad; ++k) {
    const Mask u = range_mask(1, k);
    const auto sums = sums_over(seq, u);
    for_submasks(u, [&](Mask i) {
      for_submasks(u, [&](Mask j) {
        const bool expressible = sums.count(seq.subset_sum_mask(i) + seq.subset_sum_mask(j)) > 0;
        if (!bad && expressible != ((i & j) == 0)) {
          bad = pair_text(("k=" + std::to_string(k)).c_str(), i, j);
        }
      });
    });
  }
  return bad;
}

std::optional<std::string> check_sums_in_A(const SumSequence& seq) {
  const NatSet a = build_A(seq);
  const Mask u = range_mask(1, seq.n() - 1);
  std::optional<std::string> bad;
  for_submasks(u, [&](Mask i) {
    for_submasks(u, [&](Mask j) {
      const bool in = a.contains(seq.subset_sum_mask(i) + seq.subset_sum_mask(j));
      if (!bad && in != ((i & j) == 0)) bad = pair_text("A_n", i, j);
    });
  });
  return bad;
}

std::optional<std::string> check_sums_in_B(const SumSequence& seq) {
  const NatSet b = build_B(seq);
  const unsigned n = seq.n();
  const Mask u = range_mask(1, n - 1);
  const Mask last = Mask{1} << n;  // index n+1
  std::optional<std::string> bad;
  for_submasks(u, [&](Mask i) {
    for_submasks(u, [&](Mask y) {
      for (Mask j : {y, y | last}) {
        const bool in = b.contains(seq.subset_sum_mask(i) + seq.subset_sum_mask(j));
        if (!bad && in != ((i & j) == 0)) bad = pair_text("B_n", i, j);
      }
    });
    const bool in = b.contains(seq.subset_sum_mask(range_mask(1, n)) + seq.subset_sum_mask(i));
    if (!bad && in != (i == 0)) bad = pair_text("B_n with [1,n]", range_mask(1, n), i);
  });
  return bad;
}

std::optional<std::string> check_sums_in_C(const SumSequence& seq) {
  const NatSet c = build_C(seq);
  const unsigned n = seq.n();
  const Mask u = range_mask(1, n + 1);
  const Mask first_n = range_mask(1, n);
  const Mask nth = Mask{1} << (n - 1);
  std::optional<std::string> bad;
  for_submasks(u, [&](Mask i) {
    for_submasks(u, [&](Mask j) {
      const bool in = c.contains(seq.subset_sum_mask(i) + seq.subset_sum_mask(j));
      const bool expected = (i & j) == 0 || ((i | j) == first_n && (i & j & nth) != 0);
      if (!bad && in != expected) bad = pair_text("C_n", i, j);
    });
  });
  return bad;
}

std::optional<std::string> check_difference_gap(const SumSequence& seq) {
  const unsigned n = seq.n();
  if (n < 4) throw DomainError("the difference gap statement needs n >= 4");
  std::optional<std::string> bad;
  for (unsigned r = 4; r <= n && !bad; ++r) {
    const Mask u = 1u | range_mask(3, r);
    for_submasks(u, [&](Mask i) {
      for_submasks(u, [&](Mask j) {
        const auto diff = static_cast<std::int64_t>(seq.subset_sum_mask(j)) -
                          static_cast<std::int64_t>(seq.subset_sum_mask(i));
        const auto a1 = static_cast<std::int64_t>(seq.at(1));
        const auto a3 = static_cast<std::int64_t>(seq.at(3));
        if (!bad && diff > a1 && diff != a3 - a1 && diff < a3) {
          bad = pair_text(("r=" + std::to_string(r)).c_str(), i, j);
        }
      });
    });
  }
  return bad;
}

}  // namespace monfact
