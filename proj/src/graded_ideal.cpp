#include "monfact/graded_ideal.hpp"

#include <algorithm>
#include <cctype>

namespace monfact {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("bad rational '" + text + "'");
  const mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

HomPoly::HomPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a homogeneous polynomial needs coefficients");
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; })) {
    throw DomainError("the zero polynomial is not allowed");
  }
}

HomPoly HomPoly::monomial(Nat x, Nat y, Rational coeff) {
  std::vector<Rational> c(checked_add(x, y) + 1, 0);
  c[y] = std::move(coeff);
  return HomPoly(std::move(c));
}

HomPoly HomPoly::monic() const {
  const auto lead = *std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](const Rational& c) { return c != 0; });
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) c.emplace_back(v / lead);
  return HomPoly(std::move(c));
}

HomPoly operator*(const HomPoly& f, const HomPoly& g) {
  std::vector<Rational> c(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) c[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return HomPoly(std::move(c));
}

std::string to_string(const HomPoly& f) {
  std::string out;
  const Nat t = f.degree();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Rational& c = f.coeffs()[i];
    if (c == 0) continue;
    std::string mono;
    const Nat x = t - i, y = i;
    if (x > 0) mono += x == 1 ? "X" : "X^" + std::to_string(x);
    if (y > 0) mono += std::string(mono.empty() ? "" : " ") + (y == 1 ? "Y" : "Y^" + std::to_string(y));
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string term = (mag == 1 && !mono.empty()) ? mono
                                                   : to_string(mag) + (mono.empty() ? "" : " " + mono);
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

GradedIdeal2::GradedIdeal2(std::vector<HomPoly> generators) : gens(std::move(generators)) {
  if (gens.empty()) throw DomainError("a graded ideal needs at least one generator");
}

GradedIdeal2 GradedIdeal2::from_monomial(const MonIdeal& ideal) {
  std::vector<HomPoly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(HomPoly::monomial(g.x, g.y));
  return GradedIdeal2(std::move(gens));
}

Nat GradedIdeal2::max_degree() const {
  Nat d = 0;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return d;
}

std::vector<std::vector<Rational>> rref(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

GradedPiece graded_piece(const GradedIdeal2& ideal, Nat t) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : ideal.gens) {
    const Nat s = g.degree();
    if (s > t) continue;
    for (Nat j = 0; j <= t - s; ++j) {
      std::vector<Rational> row(t + 1, 0);
      // multiplying by X^(t-s-j) Y^j moves coefficient i to column i + j
      for (std::size_t i = 0; i <= s; ++i) row[i + j] = g.coeffs()[i];
      rows.push_back(std::move(row));
    }
  }
  return {t, rref(std::move(rows))};
}

GradedPiece product_space(const GradedPiece& p, const GradedPiece& q) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : p.rows) {
    for (const auto& g : q.rows) rows.push_back((HomPoly(f) * HomPoly(g)).coeffs());
  }
  return {p.degree + q.degree, rref(std::move(rows))};
}

GradedIdeal2 product(const GradedIdeal2& a, const GradedIdeal2& b) {
  std::vector<HomPoly> gens;
  for (const auto& f : a.gens) {
    for (const auto& g : b.gens) {
      HomPoly h = (f * g).monic();
      if (std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(std::move(h));
    }
  }
  return GradedIdeal2(std::move(gens));
}

bool equals(const GradedIdeal2& a, const GradedIdeal2& b) {
  const Nat top = std::max(a.max_degree(), b.max_degree());
  for (Nat t = 0; t <= top; ++t) {
    if (graded_piece(a, t) != graded_piece(b, t)) return false;
  }
  return true;
}

bool min_degree_product_check(const MonIdeal& i, const MonIdeal& j) {
  const GradedIdeal2 gi = GradedIdeal2::from_monomial(i);
  const GradedIdeal2 gj = GradedIdeal2::from_monomial(j);
  const Nat d = mdeg(i), e = mdeg(j);
  const GradedPiece lhs = graded_piece(product(gi, gj), d + e);
  const GradedPiece rhs = product_space(graded_piece(gi, d), graded_piece(gj, e));
  return lhs == rhs;
}

}  // namespace monfact
