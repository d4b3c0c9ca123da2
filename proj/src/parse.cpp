#include "specht/parse.hpp"

#include <cctype>
#include <cstddef>

#include "specht/errors.hpp"

namespace specht {

namespace {

// Recursive descent over the grammar
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)*
//   atom   := 'x' nat | nat | '(' expr ')'
// with arbitrary whitespace between tokens.
class Parser {
 public:
  Parser(const std::string& text, int n, const Field& K,
         const MonomialOrder& order)
      : text_(text), n_(n), field_(K), order_(order) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Reads a decimal literal; |max_digits| guards exponents.
  mpz_class nat(int max_digits = 0) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    if (max_digits > 0 &&
        pos_ - start > static_cast<std::size_t>(max_digits))
      fail("integer too large here");
    return mpz_class(text_.substr(start, pos_ - start), 10);
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a variable index after 'x'");
      mpz_class k = nat(9);
      if (k < 1 || k > n_) fail("variable index out of range");
      return Polynomial::variable(static_cast<int>(k.get_si()), n_, field_,
                                  order_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(Scalar::of_integer(nat(), field_), n_,
                                  order_);
    }
    fail("expected a variable, integer, or '('");
  }

  Polynomial factor() {
    Polynomial base = atom();
    while (peek() == '^') {
      ++pos_;
      mpz_class e = nat(6);
      Polynomial pw = Polynomial::constant(Scalar::one(field_), n_, order_);
      for (mpz_class i = 0; i < e; ++i) pw = pw * base;
      base = pw;
    }
    return base;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (peek() == '*') {
      ++pos_;
      p = p * factor();
    }
    return p;
  }

  Polynomial expr() {
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = (c == '-');
      ++pos_;
    }
    Polynomial p = term();
    if (neg) p = -p;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial q = term();
      p = (c == '+') ? p + q : p - q;
    }
    return p;
  }

  const std::string& text_;
  int n_;
  const Field& field_;
  const MonomialOrder& order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int n, const Field& K,
                            const MonomialOrder& order) {
  if (n < 0) throw DomainError("ambient must be >= 0");
  if (order.ambient() != n) throw DomainError("order ambient mismatch");
  return Parser(text, n, K, order).run();
}

Polynomial parse_polynomial(const std::string& text, int n, const Field& K) {
  return parse_polynomial(text, n, K, MonomialOrder::default_lex(n));
}

Polynomial parse_polynomial(const std::string& text, int n) {
  return parse_polynomial(text, n, Field::rationals());
}

}  // namespace specht
