#include "zdring/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "zdring/errors.hpp"

namespace zdring {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("polynomial coefficient overflow");
  return r;
}

// Term map that may carry a constant (empty word) during parsing.
using RawTerms = std::map<Word, std::int64_t, WordOrder>;

void accumulate(RawTerms& into, const Word& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = into.emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) into.erase(it);
  }
}

RawTerms raw_add(const RawTerms& a, const RawTerms& b, std::int64_t sign = 1) {
  RawTerms out = a;
  for (const auto& [w, c] : b) accumulate(out, w, checked_mul(sign, c));
  return out;
}

RawTerms raw_mul(const RawTerms& a, const RawTerms& b) {
  RawTerms out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      accumulate(out, w, checked_mul(ca, cb));
    }
  return out;
}

}  // namespace

NcPoly::NcPoly(Terms terms) {
  for (auto& [w, c] : terms) {
    if (w.empty()) throw Error("polynomials in Z<X> have no constant term");
    if (c != 0) terms_.emplace(w, c);
  }
}

NcPoly NcPoly::variable(Variable v) { return monomial(1, Word{v}); }

NcPoly NcPoly::monomial(std::int64_t coefficient, Word word) {
  Terms t;
  t.emplace(std::move(word), coefficient);
  return NcPoly(std::move(t));
}

std::int64_t NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::set<Variable> NcPoly::variables() const {
  std::set<Variable> vars;
  for (const auto& [w, c] : terms_) vars.insert(w.begin(), w.end());
  return vars;
}

std::size_t NcPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

NcPoly NcPoly::operator-() const { return scale(-1, *this); }

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  out.terms_ = raw_add(a.terms_, b.terms_);
  return out;
}

NcPoly operator-(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  out.terms_ = raw_add(a.terms_, b.terms_, -1);
  return out;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  out.terms_ = raw_mul(a.terms_, b.terms_);
  return out;
}

NcPoly operator*(std::int64_t c, const NcPoly& p) {
  NcPoly out;
  if (c == 0) return out;
  for (const auto& [w, coef] : p.terms_) out.terms_.emplace(w, checked_mul(c, coef));
  return out;
}

NcPoly add(const NcPoly& p, const NcPoly& q) { return p + q; }
NcPoly mul(const NcPoly& p, const NcPoly& q) { return p * q; }
NcPoly scale(std::int64_t c, const NcPoly& p) { return c * p; }
NcPoly commutator(const NcPoly& p, const NcPoly& q) { return p * q - q * p; }

NcPoly power(const NcPoly& p, std::size_t k) {
  if (k == 0) throw Error("power of a constant-free polynomial needs k >= 1");
  NcPoly out = p;
  for (std::size_t i = 1; i < k; ++i) out = out * p;
  return out;
}

NcPoly substitute(const NcPoly& p, const std::map<Variable, NcPoly>& bindings) {
  NcPoly out;
  for (const auto& [word, c] : p.terms()) {
    NcPoly term;
    bool first = true;
    for (Variable v : word) {
      auto it = bindings.find(v);
      if (it == bindings.end()) throw UnboundVariable("variable " + variable_name(v) + " is not bound");
      term = first ? it->second : term * it->second;
      first = false;
    }
    out = out + c * term;
  }
  return out;
}

std::size_t lower_degree(const NcPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("lower degree of the zero polynomial is undefined");
  return p.terms().begin()->first.size();
}

bool essentially_depends(const NcPoly& p) {
  const auto vars = p.variables();
  for (const auto& [word, c] : p.terms())
    for (Variable v : vars)
      if (std::find(word.begin(), word.end(), v) == word.end()) return false;
  return true;
}

std::string variable_name(Variable v) {
  switch (v) {
    case 0: return "x";
    case 1: return "y";
    case 2: return "z";
    default: return "x" + std::to_string(v + 1);
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RawTerms parse_all() {
    RawTerms out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == '(' || c == '[';
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = checked_add(checked_mul(value, 10), text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  RawTerms expr() {
    RawTerms out;
    std::int64_t sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    out = raw_add(out, term(), sign);
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      out = raw_add(out, term(), c == '-' ? -1 : 1);
    }
    return out;
  }

  RawTerms term() {
    RawTerms out = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        out = raw_mul(out, factor());
      } else if (starts_factor(c)) {
        out = raw_mul(out, factor());
      } else {
        break;
      }
    }
    return out;
  }

  RawTerms factor() {
    RawTerms base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::int64_t k = number();
      if (k < 1) fail("exponent must be at least 1");
      RawTerms out = base;
      for (std::int64_t i = 1; i < k; ++i) out = raw_mul(out, base);
      return out;
    }
    return base;
  }

  RawTerms primary() {
    const char c = peek();
    RawTerms out;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      accumulate(out, Word{}, number());
      return out;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      Variable v = c == 'x' ? 0 : (c == 'y' ? 1 : 2);
      if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::size_t at = pos_;
        const std::int64_t idx = number();
        if (idx < 1) throw ParseError("variable index must be at least 1", at);
        v = static_cast<Variable>(idx - 1);
      }
      accumulate(out, Word{v}, 1);
      return out;
    }
    if (c == '(') {
      ++pos_;
      out = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return out;
    }
    if (c == '[') {
      ++pos_;
      RawTerms a = expr();
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos_;
      RawTerms b = expr();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return raw_add(raw_mul(a, b), raw_mul(b, a), -1);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_poly(std::string_view text) {
  RawTerms raw = Parser(text).parse_all();
  auto constant = raw.find(Word{});
  if (constant != raw.end()) throw ParseError("constant terms are not allowed", 0);
  NcPoly::Terms terms(raw.begin(), raw.end());
  return NcPoly(std::move(terms));
}

std::string render(const NcPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, c] : p.terms()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += std::to_string(mag);
    for (std::size_t i = 0; i < word.size();) {
      std::size_t j = i;
      while (j < word.size() && word[j] == word[i]) ++j;
      out += variable_name(word[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

std::vector<NcPoly> parse_suite(std::string_view text) {
  std::vector<NcPoly> out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        out.push_back(parse_poly(line));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.detail(), start + e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace zdring
