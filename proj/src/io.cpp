#include "monfact/io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace monfact::io {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Nat parse_nat(const std::string& token) {
  const std::string t = strip(token);
  Nat value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("expected a natural number, got '" + token + "'");
  }
  return value;
}

std::vector<Nat> parse_list(const std::string& text, char open, char close) {
  std::string s = strip(text);
  if (!s.empty() && (s.front() == open || s.front() == '[')) {
    const char want = s.front() == open ? close : ']';
    if (s.back() != want) throw ParseError("unbalanced brackets in '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Nat> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_nat(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// One term such as "X^3 Y", "X*Y^2", "Y", "1".
ExpPair parse_term(const std::string& raw) {
  const std::string term = strip(raw);
  if (term.empty()) throw ParseError("empty monomial term");
  if (term == "1") return {0, 0};
  ExpPair out;
  bool seen_x = false, seen_y = false;
  std::size_t i = 0;
  while (i < term.size()) {
    const char c = term[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c != 'X' && c != 'Y' && c != 'x' && c != 'y') {
      throw ParseError("unexpected '" + std::string(1, c) + "' in monomial '" + term + "'");
    }
    const bool is_x = c == 'X' || c == 'x';
    ++i;
    Nat exp = 1;
    if (i < term.size() && term[i] == '^') {
      ++i;
      std::size_t j = i;
      while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) ++j;
      if (j == i) throw ParseError("missing exponent in '" + term + "'");
      exp = parse_nat(term.substr(i, j - i));
      i = j;
    }
    bool& seen = is_x ? seen_x : seen_y;
    if (seen) throw ParseError("variable repeated in monomial '" + term + "'");
    seen = true;
    (is_x ? out.x : out.y) = exp;
  }
  if (!seen_x && !seen_y) throw ParseError("no variables in monomial '" + term + "'");
  return out;
}

}  // namespace

NatSet parse_natset(const std::string& text) {
  return NatSet::from_elements(parse_list(text, '{', '}'));
}

Json to_json(const NatSet& s) { return Json(std::vector<Nat>(s.begin(), s.end())); }

NatSet natset_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a set must be a JSON array");
  std::vector<Nat> v;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw ParseError("set elements must be non-negative integers");
    v.push_back(x.get<Nat>());
  }
  return NatSet::from_elements(std::move(v));
}

SumSequence parse_sequence(const std::string& text) {
  return SumSequence::validate(parse_list(text, '(', ')'));
}

Json to_json(const SumSequence& seq) {
  return Json(std::vector<Nat>(seq.values().begin(), seq.values().end()));
}

MonIdeal parse_ideal(const std::string& text) {
  std::string s = strip(text);
  if (!s.empty() && s.front() == '{') return ideal_from_json(Json::parse(s));
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') s = s.substr(1, s.size() - 2);
  std::vector<ExpPair> gens;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    gens.push_back(parse_term(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return MonIdeal::from_generators(std::move(gens));
}

Json to_json(const MonIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back({g.x, g.y});
  return Json{{"gens", gens}};
}

MonIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gens") || !j["gens"].is_array()) {
    throw ParseError("an ideal must be {\"gens\": [[x, y], ...]}");
  }
  std::vector<ExpPair> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_array() || g.size() != 2 || !g[0].is_number_unsigned() || !g[1].is_number_unsigned()) {
      throw ParseError("each generator must be a pair of non-negative integers");
    }
    gens.push_back({g[0].get<Nat>(), g[1].get<Nat>()});
  }
  return MonIdeal::from_generators(std::move(gens));
}

Json to_json(const HomPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"deg", f.degree()}, {"coeffs", coeffs}};
}

HomPoly hompoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("deg") || !j.contains("coeffs")) {
    throw ParseError("a polynomial must be {\"deg\": t, \"coeffs\": [...]}");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw ParseError("coefficients are strings \"p/q\" or \"p\"");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  if (coeffs.size() != j["deg"].get<Nat>() + 1) {
    throw ParseError("a degree-t polynomial needs t+1 coefficients");
  }
  return HomPoly(std::move(coeffs));
}

Json to_json(const GradedIdeal2& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.gens) gens.push_back(to_json(g));
  return Json{{"gens", gens}};
}

GradedIdeal2 graded_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gens") || !j["gens"].is_array()) {
    throw ParseError("a graded ideal must be {\"gens\": [...]}");
  }
  std::vector<HomPoly> gens;
  for (const auto& g : j["gens"]) gens.push_back(hompoly_from_json(g));
  return GradedIdeal2(std::move(gens));
}

}  // namespace monfact::io
