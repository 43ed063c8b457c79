#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace zdring {

/// Variable indices are 0-based: x1 (alias x) is 0, x2 (y) is 1, x3 (z) is 2.
using Variable = std::uint32_t;
/// A monomial of the free ring: a nonempty sequence of variables.
using Word = std::vector<Variable>;

/// Orders words by length, then lexicographically.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of Z<X> without constant term. Zero coefficients are never
/// stored; arithmetic throws Error on 64-bit overflow.
class NcPoly {
 public:
  using Terms = std::map<Word, std::int64_t, WordOrder>;

  NcPoly() = default;
  explicit NcPoly(Terms terms);

  static NcPoly variable(Variable v);
  static NcPoly monomial(std::int64_t coefficient, Word word);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(const Word& w) const;
  std::set<Variable> variables() const;
  std::size_t degree() const;

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  NcPoly operator-() const;
  friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(std::int64_t c, const NcPoly& p);

 private:
  Terms terms_;
};

NcPoly add(const NcPoly& p, const NcPoly& q);
NcPoly mul(const NcPoly& p, const NcPoly& q);
NcPoly scale(std::int64_t c, const NcPoly& p);
/// [p, q] = pq - qp.
NcPoly commutator(const NcPoly& p, const NcPoly& q);
/// p^k for k >= 1.
NcPoly power(const NcPoly& p, std::size_t k);

/// Homomorphic image of p under x_v -> bindings[v]. Every variable of p must
/// be bound (UnboundVariable otherwise).
NcPoly substitute(const NcPoly& p, const std::map<Variable, NcPoly>& bindings);

/// Minimum word length; throws ZeroPolynomial for p = 0.
std::size_t lower_degree(const NcPoly& p);

/// True iff setting any single occurring variable to 0 kills p.
bool essentially_depends(const NcPoly& p);

/// Parses the polynomial grammar: integer coefficients, variables x, y, z
/// and x1, x2, ..., juxtaposition or '*' for products, '^' for powers,
/// [a, b] for commutators, parentheses, '+' and '-'. Nonzero constant terms
/// are rejected. Throws ParseError with the byte offset.
NcPoly parse_poly(std::string_view text);

/// Inverse of parse_poly: terms in (degree, lexicographic) order.
std::string render(const NcPoly& p);
std::string variable_name(Variable v);

/// Plain-text suite: one polynomial per line, '#' starts a comment, blank
/// lines ignored. ParseError positions refer to the offending line.
std::vector<NcPoly> parse_suite(std::string_view text);

}  // namespace zdring
