#include "identities/literal.hpp"

#include "numerics/error.hpp"

#include <cctype>

namespace lamzeta {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PiLiteral parse() {
    skip_space();
    PiLiteral out;
    if (peek() == '-') {
      ++pos_;
      out.coeff = -1;
    } else if (peek() == '+') {
      ++pos_;
    }
    out = multiply(out, factor());
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
        out = multiply(out, factor());
      } else if (peek() == '/') {
        ++pos_;
        const PiLiteral d = factor();
        if (d.coeff == 0) fail("division by zero");
        out.coeff /= d.coeff;
        out.pi_power -= d.pi_power;
      } else {
        out = multiply(out, factor());
      }
    }
    return out;
  }

 private:
  static PiLiteral multiply(PiLiteral a, const PiLiteral& b) {
    a.coeff *= b.coeff;
    a.pi_power += b.pi_power;
    return a;
  }

  PiLiteral factor() {
    skip_space();
    PiLiteral base;
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      base.pi_power = 1;
    } else if (peek() == '(') {
      ++pos_;
      Parser inner(read_until_close());
      base = inner.parse();
    } else {
      base.coeff = number();
    }
    skip_space();
    if (peek() == '^') {
      ++pos_;
      const Rational e = exponent();
      if (base.pi_power != 0 && base.coeff != 1) fail("exponent applies to a product; use parentheses around pi only");
      if (base.coeff != 1) {
        if (!is_integer(e)) fail("only pi may carry a fractional exponent");
        const std::int64_t k = to_int64(e);
        if (base.coeff == 0 && k < 0) fail("division by zero");
        Rational c = 1;
        for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) c *= base.coeff;
        base.coeff = k < 0 ? Rational(1 / c) : c;
      }
      base.pi_power *= e;
    }
    return base;
  }

  Rational exponent() {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      Parser inner(read_until_close());
      const PiLiteral e = inner.parse();
      if (e.pi_power != 0) fail("exponent must be rational");
      return e.coeff;
    }
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const Rational v = number();
    return negative ? Rational(-v) : v;
  }

  Rational number() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    if (pos_ == start) fail("expected a number or 'pi'");
    return parse_decimal_rational(text_.substr(start, pos_ - start));
  }

  std::string_view read_until_close() {
    const std::size_t start = pos_;
    int depth = 1;
    while (!at_end()) {
      if (peek() == '(') ++depth;
      if (peek() == ')' && --depth == 0) {
        const auto inner = text_.substr(start, pos_ - start);
        ++pos_;
        return inner;
      }
      ++pos_;
    }
    fail("unbalanced parenthesis");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse literal '" + std::string(text_) + "': " + why);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BigReal PiLiteral::value() const {
  BigReal v = to_big(coeff);
  if (pi_power != 0) v *= pow_rational(pi_value(), pi_power);
  return v;
}

std::string PiLiteral::to_string() const {
  std::string out = coeff.str();
  if (pi_power == 0) return out;
  out = (coeff == 1 ? "" : out + "*") + "pi";
  if (pi_power != 1) out += "^(" + pi_power.str() + ")";
  return out;
}

PiLiteral parse_pi_literal(std::string_view text) {
  if (text.empty()) throw UsageError("empty numeric literal");
  return Parser(text).parse();
}

}  // namespace lamzeta
