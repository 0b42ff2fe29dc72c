// Polynomial text: parser and canonical printer.

#include <cctype>

#include "versal/errors.hpp"
#include "versal/polynomial.hpp"

namespace versal {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring, std::size_t line)
      : text_(text), ring_(ring), line_(line) {}

  Polynomial parse() {
    skipSpace();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = parseSum();
    skipSpace();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, pos_ + 1);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // A leading sign is allowed only at the start of a sum.
  Polynomial parseSum() {
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Polynomial acc = parseProduct();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = parseProduct();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  Polynomial parseProduct() {
    Polynomial acc = parsePower();
    while (peek() == '*') {
      ++pos_;
      acc = acc * parsePower();
    }
    char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
      fail("expected operator ('*' is required between factors)");
    return acc;
  }

  Polynomial parsePower() {
    Polynomial base = parseAtom();
    if (peek() != '^') return base;
    ++pos_;
    skipSpace();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected non-negative integer exponent");
    Integer e = readInteger();
    if (e > 0xffff) fail("exponent too large");
    unsigned long n = e.get_ui();
    Polynomial result = Polynomial::constant(ring_, 1);
    Polynomial sq = base;
    while (n) {
      if (n & 1) result = result * sq;
      n >>= 1;
      if (n) sq = sq * sq;
    }
    return result;
  }

  Integer readInteger() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial parseAtom() {
    char c = peek();
    if (c == '\0') fail("unexpected end of expression");
    if (c == '(') {
      ++pos_;
      Polynomial inner = parseSum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = readInteger();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        skipSpace();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected integer denominator");
        den = readInteger();
        if (den == 0) fail("zero denominator");
      }
      Scalar q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->indexOf(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parseExpr(std::string_view text, const RingPtr& ring, std::size_t line) {
  return ExprParser(text, ring, line).parse();
}

std::string printExpr(const Polynomial& p) {
  if (p.isZero()) return "0";
  const Ring& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Scalar c = t.coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ring.varName(v);
      if (t.mono[v] > 1) factors += "^" + std::to_string(t.mono[v]);
    }
    if (factors.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += factors;
    } else {
      out += c.get_str() + "*" + factors;
    }
  }
  return out;
}

}  // namespace versal
