#include "tk/beta_poly.hpp"

#include "tk/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace tk {

Integer structure_constant(unsigned k, unsigned i, unsigned j) {
  if (k < std::max(i, j) || k > i + j) return 0;
  return factorial(k) / (factorial(k - j) * factorial(k - i) * factorial(i + j - k));
}

BetaPoly::BetaPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Key{0, 0}, c);
}

BetaPoly BetaPoly::term(const Integer& c, std::int64_t t_exponent, unsigned index) {
  BetaPoly out;
  out.add({t_exponent, index}, c);
  return out;
}

BetaPoly BetaPoly::from_terms(const Terms& terms) {
  BetaPoly out;
  for (const auto& [k, c] : terms) out.add(k, c);
  return out;
}

Integer BetaPoly::coefficient(std::int64_t t_exponent, unsigned index) const {
  auto it = terms_.find({t_exponent, index});
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned BetaPoly::max_index() const {
  unsigned m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

void BetaPoly::add(const Key& key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BetaPoly BetaPoly::operator-() const {
  BetaPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) { return multiply(a, b); }

BetaPoly beta_product(unsigned i, unsigned j) { return multiply(BetaPoly::beta(i), BetaPoly::beta(j)); }

BetaPoly multiply(const BetaPoly& x, const BetaPoly& y, const StructureConstants& constants) {
  BetaPoly::Terms acc;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const std::int64_t m = checked_add(kx.first, ky.first);
      const unsigned i = kx.second;
      const unsigned j = ky.second;
      for (unsigned k = std::max(i, j); k <= i + j; ++k) {
        Integer c = constants(k, i, j);
        if (c != 0) acc[{m, k}] += cx * cy * c;
      }
    }
  }
  return BetaPoly::from_terms(acc);
}

std::string BetaPoly::str() const {
  if (terms_.empty()) return "0";
  // Order by beta index, then t-exponent.
  std::vector<std::pair<Key, Integer>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.second, a.first.first) < std::make_pair(b.first.second, b.first.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : items) {
    const auto [m, i] = key;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> parts;
    if (mag != 1 || (m == 0 && i == 0)) parts.push_back(mag.str());
    if (m == 1) parts.push_back("t");
    else if (m != 0) parts.push_back("t^" + std::to_string(m));
    if (i != 0) parts.push_back("b" + std::to_string(i));
    for (std::size_t p = 0; p < parts.size(); ++p) os << (p ? " " : "") << parts[p];
  }
  return os.str();
}

std::string coefficient_text(const BetaPoly& x) { return x.str(); }

namespace {

class BetaParser {
 public:
  explicit BetaParser(std::string_view text) : text_(text) {}

  BetaPoly parse() {
    skip();
    if (at_end()) fail("empty coefficient");
    BetaPoly acc;
    bool first = true;
    while (true) {
      skip();
      if (at_end()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      BetaPoly m = monomial();
      acc += negative ? -m : m;
      first = false;
    }
    return acc;
  }

 private:
  BetaPoly monomial() {
    Integer coeff = 1;
    std::int64_t t_exp = 0;
    int beta = -1;
    int factors = 0;
    while (true) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        if (factors == 0) fail("unexpected '*'");
        ++pos_;
        skip();
        if (at_end()) fail("expected a factor after '*'");
        c = peek();
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != 't' && c != 'b') fail("expected a factor after '*'");
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= digits();
      } else if (c == 't') {
        ++pos_;
        std::int64_t e = 1;
        skip();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip();
          e = signed_int();
        }
        t_exp = checked_add(t_exp, e);
      } else if (c == 'b') {
        ++pos_;
        if (beta >= 0) fail("at most one beta factor per monomial");
        Integer idx = digits();
        if (idx > 1000000) fail("beta index out of range");
        beta = static_cast<int>(idx);
      } else {
        break;
      }
      ++factors;
    }
    if (factors == 0) fail("expected a monomial");
    return BetaPoly::term(coeff, t_exp, beta < 0 ? 0u : static_cast<unsigned>(beta));
  }

  std::int64_t signed_int() {
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    Integer n = digits();
    if (n > std::numeric_limits<std::int64_t>::max()) fail("exponent out of range");
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
  std::size_t pos_ = 0;
};

}  // namespace

BetaPoly parse_beta_poly(std::string_view text) { return BetaParser(text).parse(); }

}  // namespace tk
