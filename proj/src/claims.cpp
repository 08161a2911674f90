#include "monfact/claims.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "monfact/graded_ideal.hpp"
#include "monfact/lemma_checks.hpp"
#include "monfact/mon_factorization.hpp"
#include "monfact/oracle.hpp"
#include "monfact/power_monoid.hpp"

namespace monfact {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Records the first failed expectation.
class Check {
 public:
  bool ok() const { return !failed_; }
  const std::string& witness() const { return witness_; }
  void expect(bool cond, const std::function<std::string()>& describe) {
    if (!cond && !failed_) {
      failed_ = true;
      witness_ = describe();
    }
  }

 private:
  bool failed_ = false;
  std::string witness_;
};

std::string show(const LengthSet& l) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Nat x : l) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string show(const MonIdeal& i) { return "<" + to_string(i) + ">"; }

LengthSet interval(Nat lo, Nat hi) {
  LengthSet out;
  for (Nat x = lo; x <= hi; ++x) out.insert(x);
  return out;
}

MonIdeal product_of(const std::vector<MonIdeal>& ideals) {
  MonIdeal out = MonIdeal::unit();
  for (const auto& i : ideals) out = product(out, i);
  return out;
}

MonIdeal random_ideal(std::mt19937_64& rng, Nat max_exp, unsigned max_gens) {
  std::uniform_int_distribution<Nat> exp(0, max_exp);
  std::uniform_int_distribution<unsigned> count(1, max_gens);
  std::vector<ExpPair> gens;
  for (unsigned k = count(rng); k > 0; --k) gens.push_back({exp(rng), exp(rng)});
  return MonIdeal::from_generators(std::move(gens));
}

NatSet random_set(std::mt19937_64& rng, Nat max_elem) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<Nat> any(0, max_elem);
  std::vector<Nat> v{any(rng)};
  for (Nat x = 0; x <= max_elem; ++x) {
    if (coin(rng)) v.push_back(x);
  }
  return NatSet::from_elements(std::move(v));
}

std::set<std::pair<std::string, std::string>> normalized(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : pairs) {
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

template <class E, class KeyFn>
std::set<std::pair<std::string, std::string>> keyed(const std::vector<std::pair<E, E>>& pairs,
                                                    KeyFn key) {
  std::vector<std::pair<std::string, std::string>> v;
  for (const auto& [a, b] : pairs) v.emplace_back(key(a), key(b));
  return normalized(v);
}

// ---- individual claims ----------------------------------------------------

void atoms_mon(Check& c, const VerifyOptions& o) {
  MonEngine engine(o.limits);
  auto expect_atom = [&](const MonIdeal& e, const std::string& name) {
    const auto split = engine.find_split(e);
    c.expect(!split, [&] {
      return name + " = " + show(split->first) + " * " + show(split->second);
    });
  };
  for (Nat i = 1; i <= 8; ++i) expect_atom(build_b(i), "b_" + std::to_string(i));
  for (Nat m = 1; m <= 8; ++m) {
    for (Nat n = 1; n <= 8; ++n) {
      expect_atom(MonIdeal::from_generators({{m, 0}, {0, n}}),
                  "<X^" + std::to_string(m) + ", Y^" + std::to_string(n) + ">");
    }
  }
  for (Nat k : {3, 4, 5, 6, 7}) expect_atom(build_c(k), "c_" + std::to_string(k));
  for (unsigned n : {2u, 3u}) {
    expect_atom(build_I_B(SumSequence::minimal(n)), "I_B (minimal n=" + std::to_string(n) + ")");
  }
  for (auto [n, r] : {std::pair{3u, 3u}, {4u, 3u}, {4u, 4u}}) {
    expect_atom(build_tilde_b(SumSequence::minimal(n), r),
                "tilde_b (minimal n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
}

void non_atoms_mon(Check& c, const VerifyOptions& o) {
  MonEngine engine(o.limits);
  auto expect_split = [&](const MonIdeal& e, const std::string& name) {
    const auto split = engine.find_split(e);
    c.expect(split.has_value(), [&] { return name + " reported as an atom"; });
    if (split) {
      c.expect(product(split->first, split->second) == e,
               [&] { return name + ": witness does not multiply back"; });
    }
  };
  for (Nat k = 2; k <= 6; ++k) expect_split(build_a(k), "a_" + std::to_string(k));
  for (Nat j = 1; j <= 4; ++j) {
    const MonIdeal e = phi(NatSet{0, j, 2 * j});
    const std::string name = "phi({0," + std::to_string(j) + "," + std::to_string(2 * j) + "})";
    c.expect(e == product(build_b(j), build_b(j)), [&] { return name + " != b_j^2"; });
    expect_split(e, name);
  }
  for (Nat m = 2; m <= 9; ++m) {
    for (Nat j = 1; j < m; ++j) {
      if (m == 2 * j) continue;
      const auto split = engine.find_split(phi(NatSet{0, j, m}));
      c.expect(!split, [&] {
        return "phi({0," + std::to_string(j) + "," + std::to_string(m) + "}) = " +
               show(split->first) + " * " + show(split->second);
      });
    }
  }
}

void lengths_mon(Check& c, const VerifyOptions& o) {
  MonEngine engine(o.limits);
  auto expect_lengths = [&](const MonIdeal& e, const LengthSet& want, const std::string& name) {
    const auto l = engine.lengths(e);
    c.expect(l == want, [&] { return "L(" + name + ") = " + show(l); });
    const auto bounded = lengths_mon(e, o.limits);
    if (!bounded.complete) throw SearchInconclusive("level-bounded lengths of " + name);
    c.expect(bounded.lengths == l,
             [&] { return "level-bounded L(" + name + ") = " + show(bounded.lengths); });
  };
  for (Nat k = 2; k <= 6; ++k) expect_lengths(build_a(k), interval(2, k), "a_" + std::to_string(k));
  expect_lengths(build_I_C(SumSequence::minimal(2)), LengthSet{2, 3}, "I_C, n=2");
}

void lengths_pfin0(Check& c, const VerifyOptions& o) {
  for (unsigned n : {2u, 3u, 4u}) {
    const auto seq = SumSequence::minimal(n);
    const auto l = lengths_reduced(build_C(seq), o.limits);
    c.expect(l == LengthSet{2, n + 1},
             [&] { return "L(C_n), n=" + std::to_string(n) + ": " + show(l); });
    c.expect(is_atom_reduced(build_B(seq), o.limits),
             [&] { return "B_n not an atom, n=" + std::to_string(n); });
  }
}

void product_identities(Check& c, const VerifyOptions&) {
  for (unsigned n : {2u, 3u, 4u}) {
    const auto seq = SumSequence::minimal(n);
    std::vector<MonIdeal> bs;
    for (unsigned i = 1; i <= n + 1; ++i) bs.push_back(build_b(seq.at(i)));
    const MonIdeal ic = build_I_C(seq);
    c.expect(ic == product_of(bs), [&] { return "I_C != prod b_{a_i}, n=" + std::to_string(n); });
    c.expect(ic == product(build_b(seq.at(n)), build_I_B(seq)),
             [&] { return "I_C != b_{a_n} I_B, n=" + std::to_string(n); });
  }
  for (unsigned n : {3u, 4u}) {
    const auto seq = SumSequence::minimal(n);
    for (unsigned r = 3; r <= n; ++r) {
      const MonIdeal lhs = product(build_b(seq.at(2)), build_tilde_b(seq, r));
      std::vector<MonIdeal> first_r, rest;
      for (unsigned i = 1; i <= r; ++i) first_r.push_back(build_b(seq.at(i)));
      for (unsigned i = r + 1; i <= n + 1; ++i) rest.push_back(build_b(seq.at(i)));
      const std::string tag = "n=" + std::to_string(n) + ", r=" + std::to_string(r);
      c.expect(lhs == product_of(first_r), [&] { return "b_{a_2} tilde_b_r != prod_{i<=r}, " + tag; });
      c.expect(build_I_C(seq) == product(lhs, product_of(rest)),
               [&] { return "I_C != b_{a_2} tilde_b_r prod_{i>r}, " + tag; });
    }
  }
  const MonIdeal a1 = build_a(1);
  c.expect(product(a1, build_a(2)) == product(a1, build_b(2)), [] { return "a_1 a_2 != a_1 b_2"; });
  c.expect(build_a(2) != build_b(2), [] { return "a_2 == b_2"; });
  c.expect(build_a(5) == product(a1, build_c(4)), [] { return "a_5 != a_1 c_4"; });
}

void graded_identities(Check& c, const VerifyOptions& o) {
  // <X^2, XY + Y^2> and <X^2, XY - Y^2>
  const GradedIdeal2 p({HomPoly::monomial(2, 0), HomPoly({0, 1, 1})});
  const GradedIdeal2 q({HomPoly::monomial(2, 0), HomPoly({0, 1, -1})});
  c.expect(equals(product(p, q), GradedIdeal2::from_monomial(build_c(4))),
           [] { return "<X^2, XY+Y^2><X^2, XY-Y^2> != c_4"; });
  std::mt19937_64 rng(o.seed ^ 0x6a09e667f3bcc908ULL);
  for (int k = 0; k < 20; ++k) {
    const MonIdeal i = random_ideal(rng, 6, 4);
    const MonIdeal j = random_ideal(rng, 6, 4);
    c.expect(min_degree_product_check(i, j), [&] { return "minimal-degree piece: " + show(i) + ", " + show(j); });
  }
  c.expect(min_degree_product_check(build_b(2), build_b(3)), [] { return "minimal-degree piece: b_2, b_3"; });
  c.expect(min_degree_product_check(build_c(4), build_a(1)), [] { return "minimal-degree piece: c_4, a_1"; });
}

void lemma_suites(Check& c, const VerifyOptions&) {
  auto run = [&](const char* name, const std::optional<std::string>& bad, unsigned n) {
    c.expect(!bad, [&] { return std::string(name) + " n=" + std::to_string(n) + " " + *bad; });
  };
  for (unsigned n = 2; n <= 5; ++n) {
    const auto seq = SumSequence::minimal(n);
    run("subset-sum uniqueness", check_subset_sum_uniqueness(seq), n);
    run("sums in A_n", check_sums_in_A(seq), n);
    if (n <= 4) {
      run("sums in B_n", check_sums_in_B(seq), n);
      run("sums in C_n", check_sums_in_C(seq), n);
    }
    if (n >= 4) run("difference gap", check_difference_gap(seq), n);
  }
}

void sum_free_pipeline(Check& c, const VerifyOptions& o) {
  MonEngine engine(o.limits);
  for (std::uint32_t mask = 1; mask < (1u << 12); ++mask) {
    std::vector<Nat> v{0};
    for (Nat i = 0; i < 12; ++i) {
      if (mask >> i & 1u) v.push_back(i + 1);
    }
    const NatSet a = NatSet::from_elements(std::vector<Nat>(v.begin() + 1, v.end()));
    if (!is_sum_free(a)) continue;
    const NatSet a0 = NatSet::from_elements(v);
    c.expect(is_atom_reduced(a0, o.limits), [&] { return "{0} u " + to_string(a) + " not a set atom"; });
    const auto split = engine.find_split(phi(a0));
    c.expect(!split, [&] {
      return "phi({0} u " + to_string(a) + ") = " + show(split->first) + " * " + show(split->second);
    });
  }
}

void oracle_equivalence(Check& c, const VerifyOptions& o) {
  const auto set_key = [](const NatSet& s) { return to_string(s); };
  const auto ideal_key = [](const MonIdeal& i) { return to_string(i); };
  for (std::uint32_t mask = 3; mask < (1u << 11); mask += 2) {
    std::vector<Nat> v;
    for (Nat i = 0; i < 11; ++i) {
      if (mask >> i & 1u) v.push_back(i);
    }
    const NatSet a = NatSet::from_elements(std::move(v));
    ReducedPowerEngine engine(o.limits);
    c.expect(keyed(engine.split(a), set_key) == keyed(oracle::reduced_pairs(a), set_key),
             [&] { return "split mismatch on " + to_string(a); });
    const auto l = engine.lengths(a);
    const auto expected = oracle::reduced_lengths(a);
    c.expect(l == expected, [&] { return "L(" + to_string(a) + ") = " + show(l) + ", oracle " + show(expected); });
  }
  std::mt19937_64 rng(o.seed ^ 0xbb67ae8584caa73bULL);
  for (int k = 0; k < 200;) {
    const MonIdeal e = random_ideal(rng, 4, 4);
    if (e.is_unit()) continue;
    ++k;
    MonEngine engine(o.limits);
    c.expect(keyed(engine.split(e), ideal_key) == keyed(oracle::ideal_pairs(e), ideal_key),
             [&] { return "split mismatch on " + show(e); });
    const auto l = engine.lengths(e);
    const auto expected = oracle::ideal_lengths(e);
    c.expect(l == expected, [&] { return "L(" + show(e) + ") = " + show(l) + ", oracle " + show(expected); });
  }
}

void phi_homomorphism(Check& c, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed ^ 0x3c6ef372fe94f82bULL);
  for (int k = 0; k < 500; ++k) {
    const NatSet a = random_set(rng, 10);
    const NatSet b = random_set(rng, 10);
    c.expect(phi(sumset(a, b)) == product(phi(a), phi(b)),
             [&] { return "phi(A+B) != phi(A)phi(B) for " + to_string(a) + " ; " + to_string(b); });
    c.expect((phi(a) == phi(b)) == (a == b),
             [&] { return "injectivity fails for " + to_string(a) + " ; " + to_string(b); });
  }
}

void stretch_lengths_ic3(Check& c, const VerifyOptions& o) {
  const auto r = lengths_mon(build_I_C(SumSequence::minimal(3)), o.limits);
  if (!r.complete) throw SearchInconclusive("lengths of I_C (n=3), certified so far " + show(r.lengths));
  c.expect(r.lengths == LengthSet{2, 3, 4}, [&] { return "L(I_C, n=3) = " + show(r.lengths); });
}

struct Entry {
  ClaimInfo info;
  void (*run)(Check&, const VerifyOptions&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"atoms-mon", "atoms of Mon(R): b_i, <X^m,Y^n>, c_k, I_B, tilde b_r", "core"}, atoms_mon},
      {{"non-atoms-mon", "non-atoms a_k and phi({0,j,2j}); phi({0,j,m}) atoms for m != 2j", "core"},
       non_atoms_mon},
      {{"lengths-mon", "sets of lengths in Mon(R): a_k and I_C (n=2)", "core"}, lengths_mon},
      {{"lengths-pfin0", "reduced power monoid: L(C_n) = {2,n+1}, B_n atoms", "core"}, lengths_pfin0},
      {{"product-identities", "monomial product identities for I_C, tilde b_r, a_1, c_4", "core"},
       product_identities},
      {{"graded-identities", "graded products over Q and minimal-degree pieces", "core"}, graded_identities},
      {{"lemma-suites", "subset-sum lemmas for the A_n, B_n, C_n families", "core"}, lemma_suites},
      {{"sum-free-pipeline", "sum-free A in [1,12]: {0} u A and phi({0} u A) are atoms", "core"},
       sum_free_pipeline},
      {{"oracle-equivalence", "search engines agree with brute-force enumeration", "core"},
       oracle_equivalence},
      {{"phi-homomorphism", "phi is an injective monoid homomorphism", "core"}, phi_homomorphism},
      {{"stretch-lengths-ic3", "L(I_C) = {2,3,4} for the minimal sequence with n=3", "stretch"},
       stretch_lengths_ic3},
  };
  return entries;
}

ClaimResult run_entry(const Entry& e, const VerifyOptions& o) {
  ClaimResult r{e.info.id, e.info.topic, Status::pass, 0, {}};
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    e.run(c, o);
    r.status = c.ok() ? Status::pass : Status::fail;
    r.witness = c.witness();
  } catch (const SearchInconclusive& ex) {
    r.status = c.ok() ? Status::inconclusive : Status::fail;
    r.witness = c.ok() ? ex.what() : c.witness();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<ClaimInfo> list_claims() {
  std::vector<ClaimInfo> out;
  for (const auto& e : registry()) out.push_back(e.info);
  return out;
}

std::vector<ClaimResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  if (suite != "core" && suite != "stretch" && suite != "all") {
    throw DomainError("unknown suite '" + suite + "' (expected core, stretch or all)");
  }
  std::vector<ClaimResult> out;
  for (const auto& e : registry()) {
    if (suite == "all" || e.info.suite == suite) out.push_back(run_entry(e, options));
  }
  return out;
}

ClaimResult run_claim(const std::string& id, const VerifyOptions& options) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return run_entry(e, options);
  }
  throw DomainError("unknown claim '" + id + "'");
}

}  // namespace monfact
