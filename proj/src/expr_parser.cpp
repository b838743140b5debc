#include "stdbasis/expr_parser.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "stdbasis/errors.hpp"

namespace stdbasis {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      advance();
    }
    terms.push_back(parse_term(negate));
    while (true) {
      skip_space();
      const char c = peek();
      if (c == '\0') break;
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      advance();
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ < text_.size() && static_cast<unsigned char>(text_[pos_]) >= 0x80) {
      throw ParseError("non-ASCII character", line_, pos_ - line_start_ + 1);
    }
    throw ParseError(what, line_, pos_ - line_start_ + 1);
  }

  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_variable() const { return peek() == 'X' || peek() == 'x'; }

  // Decimal integer reduced mod p as it is read, so any length is accepted.
  std::uint32_t coefficient() {
    const PrimeField& F = ring_.field();
    std::uint32_t v = 0;
    while (at_digit()) {
      v = F.add(F.mul(v, 10 % F.characteristic()),
                static_cast<std::uint32_t>(peek() - '0') % F.characteristic());
      advance();
    }
    return v;
  }

  std::int64_t bounded_integer(const char* what) {
    skip_space();
    if (!at_digit()) fail(std::string("expected ") + what);
    std::int64_t v = 0;
    while (at_digit()) {
      v = v * 10 + (peek() - '0');
      if (v > std::numeric_limits<Monomial::Exponent>::max()) fail(std::string(what) + " too large");
      advance();
    }
    return v;
  }

  void varpow(std::vector<Monomial::Exponent>& exps) {
    skip_space();
    if (!at_variable()) fail("expected a variable 'X<index>'");
    advance();
    skip_space();
    const std::size_t col = pos_ - line_start_ + 1;
    const std::size_t line = line_;
    const std::int64_t index = bounded_integer("variable index");
    if (index < 1 || static_cast<std::size_t>(index) > ring_.nvars()) {
      throw ParseError("variable index " + std::to_string(index) + " out of range [1, " +
                           std::to_string(ring_.nvars()) + "]",
                       line, col);
    }
    std::int64_t power = 1;
    skip_space();
    if (peek() == '^') {
      advance();
      power = bounded_integer("exponent");
    }
    auto& e = exps[static_cast<std::size_t>(index - 1)];
    if (power > std::numeric_limits<Monomial::Exponent>::max() - e) fail("exponent too large");
    e += static_cast<Monomial::Exponent>(power);
  }

  Term parse_term(bool negate) {
    skip_space();
    std::uint32_t coeff = 1;
    std::vector<Monomial::Exponent> exps(ring_.nvars(), 0);
    bool need_var = true;
    if (at_digit()) {
      coeff = coefficient();
      need_var = false;
      skip_space();
      if (peek() == '*') {
        advance();
        need_var = true;
      }
    }
    if (need_var || at_variable()) {
      varpow(exps);
      while (true) {
        skip_space();
        if (peek() == '*') {
          advance();
          varpow(exps);
        } else if (at_variable()) {
          varpow(exps);
        } else {
          break;
        }
      }
    }
    FieldElement c = ring_.field().element(coeff);
    if (negate) c = -c;
    return {c, Monomial(std::span<const Monomial::Exponent>(exps))};
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse();
}

Polynomial parse_poly(std::string_view text, std::size_t nvars, std::uint32_t p, OrderKind order) {
  return parse_poly(text, Ring(p, nvars, order));
}

std::string print_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += 'X';
    out += std::to_string(i + 1);
    if (m[i] != 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::string print_poly(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += '+';
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff.value());
      continue;
    }
    if (t.coeff.value() != 1) out += std::to_string(t.coeff.value());
    out += print_monomial(t.mono);
  }
  return out;
}

}  // namespace stdbasis
