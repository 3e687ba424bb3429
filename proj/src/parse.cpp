#include <cctype>

#include "arcsect/mpoly.hpp"

namespace arcsect {

namespace {

struct Parser {
  const std::string& src;
  const std::vector<std::string>& vars;
  size_t pos = 0;

  Parser(const std::string& s, const std::vector<std::string>& v)
      : src(s), vars(v) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  MPoly parse_expr() {
    MPoly acc = parse_term();
    while (true) {
      if (accept('+'))
        acc += parse_term();
      else if (accept('-'))
        acc -= parse_term();
      else
        break;
    }
    return acc;
  }

  MPoly parse_term() {
    MPoly acc = parse_factor();
    while (true) {
      if (accept('*')) {
        acc = acc * parse_factor();
      } else if (accept('/')) {
        size_t at = pos;
        MPoly d = parse_factor();
        if (!d.is_constant()) {
          pos = at;
          fail("division by a non-constant expression");
        }
        Rational c = d.constant_value();
        if (c == 0) {
          pos = at;
          fail("division by zero");
        }
        acc = acc.scaled(1 / c);
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly parse_factor() {
    if (accept('-')) return -parse_factor();
    if (accept('+')) return parse_factor();
    MPoly base = parse_atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      size_t at = pos;
      MPoly e = parse_atom();
      if (!e.is_constant()) {
        pos = at;
        fail("exponent must be a constant");
      }
      Rational q = e.constant_value();
      if (q.get_den() != 1 || q < 0) {
        pos = at;
        fail("exponent must be a non-negative integer");
      }
      if (q > 64) {
        pos = at;
        fail("exponent too large");
      }
      return base.pow(static_cast<int>(q.get_num().get_si()));
    }
    return base;
  }

  MPoly parse_atom() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of expression");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      MPoly inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        ++pos;
      return MPoly::constant(Rational(Int(src.substr(start, pos - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      std::string name = src.substr(start, pos - start);
      for (const auto& v : vars)
        if (v == name) return MPoly::var(name);
      pos = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

MPoly parse_poly(const std::string& src, const std::vector<std::string>& vars) {
  Parser p(src, vars);
  MPoly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) p.fail("trailing input");
  return r;
}

}  // namespace arcsect
