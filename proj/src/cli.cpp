#include "monfact/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <random>
#include <regex>
#include <sstream>

#include "monfact/families.hpp"
#include "monfact/length_set.hpp"
#include "monfact/mon_factorization.hpp"
#include "monfact/power_monoid.hpp"

namespace monfact::cli {

MonoidKind parse_monoid(const std::string& name) {
  if (name == "pfin") return MonoidKind::pfin;
  if (name == "pfin0") return MonoidKind::pfin0;
  if (name == "mon") return MonoidKind::mon;
  throw ParseError("unknown monoid '" + name + "' (expected pfin, pfin0 or mon)");
}

namespace {

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used != text.size() || text.front() == '-') throw ParseError("");
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw ParseError("expected a non-negative integer for " + what + ", got '" + text + "'");
  }
}

SumSequence sequence_from(const FamilyArgs& args, const std::string& family) {
  if (args.seq) return SumSequence::validate(*args.seq);
  if (args.minimal) return SumSequence::minimal(*args.minimal);
  throw ParseError(family + " needs --minimal n or --seq a1,a2,...");
}

// Family name with a numeric index: "a_5", "c4", "delta_odd_2".
std::optional<Target> indexed_family(const std::string& word) {
  static const std::regex pattern(R"(^(a|b|c|beta|delta_odd|delta_even)_?(\d+)$)");
  std::smatch m;
  if (!std::regex_match(word, m, pattern)) return std::nullopt;
  const std::string name = m[1];
  const Nat k = parse_unsigned(m[2], name);
  if (name == "a") return build_a(k);
  if (name == "b") return build_b(k);
  if (name == "c") return build_c(k);
  if (name == "beta") return build_beta(k);
  if (name == "delta_odd") return build_delta_odd(k);
  return build_delta_even(k);
}

std::string rest_after(const std::string& text, const std::string& word) {
  const auto pos = text.find(word);
  return text.substr(pos + word.size());
}

io::Json show_pair(const Target& a, const Target& b) {
  auto one = [](const Target& t) -> io::Json {
    if (const auto* s = std::get_if<NatSet>(&t)) return io::to_json(*s);
    return to_string(std::get<MonIdeal>(t));
  };
  return io::Json::array({one(a), one(b)});
}

const NatSet& require_set(const Target& t) {
  if (const auto* s = std::get_if<NatSet>(&t)) return *s;
  throw ParseError("this monoid needs a set target (use phi <set> to pass a set to mon)");
}

const MonIdeal& require_ideal(const Target& t) {
  if (const auto* i = std::get_if<MonIdeal>(&t)) return *i;
  throw ParseError("the mon monoid needs an ideal target (wrap sets as phi <set>)");
}

io::Json lengths_json(const LengthSet& l) {
  io::Json out;
  out["lengths"] = std::vector<Nat>(l.begin(), l.end());
  const auto delta = delta_set(l);
  out["delta"] = std::vector<Nat>(delta.begin(), delta.end());
  out["rho"] = l.empty() ? io::Json(nullptr) : io::Json(elasticity(l).to_string());
  return out;
}

// A split in the full power monoid: shift copies of {1} peel off first.
std::optional<std::pair<NatSet, NatSet>> split_pfin(const NatSet& a, const BudgetLimits& limits) {
  const ReducedForm r = reduce(a);
  if (r.shift == 0) {
    const auto pairs = decompose_reduced(a, limits);
    if (pairs.empty()) return std::nullopt;
    return pairs.front();
  }
  if (ReducedPowerMonoid::is_identity(r.base)) {
    if (r.shift == 1) return std::nullopt;
    return std::pair{NatSet{1}, NatSet{r.shift - 1}};
  }
  return std::pair{NatSet{r.shift}, r.base};
}

}  // namespace

Target parse_target(const std::string& text, const FamilyArgs& defaults) {
  const auto words = split_words(text);
  if (words.empty()) throw ParseError("empty target");
  const std::string& head = words.front();

  if (head == "phi") return phi(io::parse_natset(rest_after(text, "phi")));
  if (auto t = indexed_family(head); t && words.size() == 1) return *t;

  static const std::vector<std::string> seq_families{"I_B", "I_C", "tilde_b", "A", "B", "C"};
  if (std::find(seq_families.begin(), seq_families.end(), head) != seq_families.end()) {
    FamilyArgs args = defaults;
    for (std::size_t i = 1; i < words.size(); i += 2) {
      if (i + 1 >= words.size()) throw ParseError("missing value after " + words[i]);
      const std::string& key = words[i];
      const std::string& value = words[i + 1];
      if (key == "--minimal") {
        args.minimal = parse_unsigned(value, key);
        args.seq.reset();
      } else if (key == "--seq") {
        const SumSequence s = io::parse_sequence(value);
        args.seq = std::vector<Nat>(s.values().begin(), s.values().end());
      } else if (key == "--r") {
        args.r = parse_unsigned(value, key);
      } else {
        throw ParseError("unknown family option " + key);
      }
    }
    const SumSequence seq = sequence_from(args, head);
    if (head == "I_B") return build_I_B(seq);
    if (head == "I_C") return build_I_C(seq);
    if (head == "A") return build_A(seq);
    if (head == "B") return build_B(seq);
    if (head == "C") return build_C(seq);
    if (!args.r) throw ParseError("tilde_b needs --r k");
    return build_tilde_b(seq, *args.r);
  }

  const char first = head.front();
  if (first == '{' && text.find('"') != std::string::npos) return io::parse_ideal(text);
  if (first == '{' || first == '[' || std::isdigit(static_cast<unsigned char>(first))) {
    if (text.find_first_of("XYxy") == std::string::npos && head != "1") return io::parse_natset(text);
  }
  return io::parse_ideal(text);
}

CommandResult cmd_build(const Target& target) {
  if (const auto* s = std::get_if<NatSet>(&target)) {
    return {kExitOk, io::Json{{"set", io::to_json(*s)}}};
  }
  const auto& i = std::get<MonIdeal>(target);
  return {kExitOk, io::Json{{"ideal", to_string(i)}, {"gens", io::to_json(i)["gens"]}, {"mdeg", mdeg(i)}}};
}

CommandResult cmd_atom(const Target& target, MonoidKind monoid, const BudgetLimits& limits) {
  try {
    std::optional<std::pair<Target, Target>> witness;
    if (monoid == MonoidKind::mon) {
      const MonIdeal& e = require_ideal(target);
      if (e.is_unit()) throw DomainError("the unit ideal is not an atom candidate");
      MonEngine engine(limits);
      if (auto s = engine.find_split(e)) witness = std::pair<Target, Target>{s->first, s->second};
    } else {
      const NatSet& a = require_set(target);
      if (monoid == MonoidKind::pfin0) {
        if (a.min() != 0) throw DomainError("pfin0 elements must contain 0");
        if (ReducedPowerMonoid::is_identity(a)) throw DomainError("{0} is the identity");
        const auto pairs = decompose_reduced(a, limits);
        if (!pairs.empty()) witness = std::pair<Target, Target>{pairs.front().first, pairs.front().second};
      } else {
        if (a.size() == 1 && a.min() == 0) throw DomainError("{0} is the identity");
        if (auto s = split_pfin(a, limits)) witness = std::pair<Target, Target>{s->first, s->second};
      }
    }
    io::Json out{{"atom", !witness}};
    out["witness"] = witness ? show_pair(witness->first, witness->second) : io::Json(nullptr);
    return {kExitOk, out};
  } catch (const SearchInconclusive& e) {
    return {kExitInconclusive, io::Json{{"atom", "inconclusive"}, {"witness", nullptr}, {"reason", e.what()}}};
  }
}

CommandResult cmd_lengths(const Target& target, MonoidKind monoid, const BudgetLimits& limits) {
  try {
    if (monoid == MonoidKind::mon) {
      const auto r = lengths_mon(require_ideal(target), limits);
      io::Json out = lengths_json(r.lengths);
      if (!r.complete) {
        out["complete"] = false;
        return {kExitInconclusive, out};
      }
      return {kExitOk, out};
    }
    const NatSet& a = require_set(target);
    const LengthSet l = monoid == MonoidKind::pfin0 ? lengths_reduced(a, limits) : lengths_pfin(a, limits);
    return {kExitOk, lengths_json(l)};
  } catch (const SearchInconclusive& e) {
    io::Json out = lengths_json({});
    out["complete"] = false;
    out["reason"] = e.what();
    return {kExitInconclusive, out};
  }
}

io::Json to_json(const ClaimResult& r) {
  return io::Json{{"id", r.id},
                  {"topic", r.topic},
                  {"status", to_string(r.status)},
                  {"seconds", std::round(r.seconds * 1000) / 1000},
                  {"witness", r.witness.empty() ? io::Json(nullptr) : io::Json(r.witness)}};
}

std::string format_table(const std::vector<ClaimResult>& results) {
  std::ostringstream os;
  os << std::left << std::setw(22) << "claim" << std::setw(14) << "status" << std::right
     << std::setw(10) << "seconds" << "  topic\n";
  for (const auto& r : results) {
    os << std::left << std::setw(22) << r.id << std::setw(14) << to_string(r.status) << std::right
       << std::setw(10) << std::fixed << std::setprecision(3) << r.seconds << "  " << r.topic << '\n';
    if (!r.witness.empty()) os << "    " << r.witness << '\n';
  }
  return os.str();
}

CommandResult cmd_verify(const std::string& suite, const VerifyOptions& options) {
  const auto results = run_suite(suite, options);
  io::Json out = io::Json::array();
  int code = kExitOk;
  for (const auto& r : results) {
    out.push_back(to_json(r));
    if (r.status == Status::fail) code = kExitFailure;
    if (r.status == Status::inconclusive && code == kExitOk) code = kExitInconclusive;
  }
  return {code, out};
}

CommandResult cmd_list_claims() {
  io::Json out = io::Json::array();
  for (const auto& c : list_claims()) {
    out.push_back(io::Json{{"id", c.id}, {"suite", c.suite}, {"topic", c.topic}});
  }
  return {kExitOk, out};
}

CommandResult cmd_experiment(const std::string& name, const ExperimentParams& p) {
  if (p.max < 1 || p.max > 24) throw DomainError("--max must lie in [1, 24]");
  if (name == "atom-density") {
    if (p.samples == 0) throw DomainError("--samples must be positive");
    std::mt19937_64 rng(p.seed);
    std::bernoulli_distribution coin(0.5);
    std::uint64_t atoms = 0;
    for (std::uint64_t s = 0; s < p.samples; ++s) {
      std::vector<Nat> v{0};
      while (v.size() == 1) {
        v.resize(1);
        for (Nat x = 1; x <= p.max; ++x) {
          if (coin(rng)) v.push_back(x);
        }
      }
      if (is_atom_reduced(NatSet::from_elements(v), p.limits)) ++atoms;
    }
    return {kExitOk, io::Json{{"experiment", name},
                              {"max", p.max},
                              {"samples", p.samples},
                              {"seed", p.seed},
                              {"atoms", atoms},
                              {"fraction", static_cast<double>(atoms) / static_cast<double>(p.samples)}}};
  }
  if (name == "phi-transport") {
    MonEngine engine(p.limits);
    std::uint64_t checked = 0;
    io::Json counterexamples = io::Json::array();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.max); ++mask) {
      std::vector<Nat> v{0};
      for (Nat i = 0; i < p.max; ++i) {
        if (mask >> i & 1u) v.push_back(i + 1);
      }
      const NatSet a = NatSet::from_elements(std::move(v));
      if (!is_atom_reduced(a, p.limits)) continue;
      ++checked;
      if (auto s = engine.find_split(phi(a))) {
        counterexamples.push_back(io::Json{{"set", io::to_json(a)}, {"witness", show_pair(s->first, s->second)}});
      }
    }
    return {kExitOk, io::Json{{"experiment", name},
                              {"max", p.max},
                              {"checked", checked},
                              {"counterexamples", counterexamples}}};
  }
  throw ParseError("unknown experiment '" + name + "' (expected atom-density or phi-transport)");
}

}  // namespace monfact::cli
