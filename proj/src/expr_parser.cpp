#include "tk/expr_parser.hpp"

#include "tk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace tk {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& allowed)
      : text_(text), allowed_(allowed) {}

  LaurentPoly parse() {
    skip();
    if (at_end()) fail("empty expression");
    LaurentPoly result = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return result;
  }

 private:
  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      skip();
      if (at_end()) return acc;
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    skip();
    bool negate = false;
    if (!at_end() && peek() == '-') {
      negate = true;
      ++pos_;
    }
    LaurentPoly acc = factor();
    for (;;) {
      skip();
      if (at_end() || peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return negate ? -acc : acc;
  }

  LaurentPoly factor() {
    skip();
    if (at_end()) fail("expected a number, variable or '('");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      skip();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return maybe_power(inner);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(allowed_.begin(), allowed_.end(), name) == allowed_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return maybe_power(LaurentPoly::variable(name));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  LaurentPoly maybe_power(const LaurentPoly& base) {
    skip();
    if (at_end() || peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    std::int64_t n = signed_int();
    try {
      return pow(base, n);
    } catch (const Error& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  LaurentPoly rational() {
    Integer num = digits();
    skip();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      Integer den = digits();
      if (den == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      return LaurentPoly::constant(Rational(num, den));
    }
    return LaurentPoly::constant(Rational(num));
  }

  std::int64_t signed_int() {
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    Integer n = digits();
    if (n > std::numeric_limits<std::int64_t>::max()) {
      pos_ = start;
      fail("exponent out of range");
    }
    auto v = static_cast<std::int64_t>(n);
    return negative ? -v : v;
  }

  Integer digits() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("parse error at offset " + std::to_string(pos_ + 1) + ": " + message, pos_ + 1);
  }

  std::string_view text_;
  const std::vector<std::string>& allowed_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_expression(std::string_view text, const std::vector<std::string>& allowed) {
  return ExprParser(text, allowed).parse();
}

}  // namespace tk
