#include "germforge/parse.hpp"

#include <cctype>

#include "germforge/errors.hpp"

namespace germforge {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingContext& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a non-negative integer");
      Integer e = digits();
      if (e > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(digits());
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        fail("non-rational literal (decimal or exponent notation)");
      if (accept('/')) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("'/' must join two integer literals");
        Integer den = digits();
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
        value.canonicalize();
      }
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingContext& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingContext& ring) {
  return Parser(text, ring).parse();
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

}  // namespace germforge
