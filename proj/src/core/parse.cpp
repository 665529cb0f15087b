#include "parse.hpp"

#include <cctype>

#include "errors.hpp"

namespace ultk {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char get() {
    skip_ws();
    return text[pos++];
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
};

class Parser {
public:
  Parser(const std::string& text, const PolyContextPtr& ctx) : cur_{text}, ctx_(ctx) {}

  Polynomial run() {
    Polynomial p = expr();
    if (!cur_.eof()) {
      cur_.fail("unexpected trailing input", cur_.pos);
    }
    return p;
  }

private:
  Cursor cur_;
  const PolyContextPtr& ctx_;

  static bool starts_factor(char c) {
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Polynomial expr() {
    bool negate = false;
    if (cur_.peek() == '-' || cur_.peek() == '+') {
      negate = cur_.get() == '-';
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      char c = cur_.peek();
      if (c == '+' || c == '-') {
        cur_.get();
        Polynomial t = term();
        acc = c == '+' ? acc + t : acc - t;
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = cur_.peek();
      if (c == '*') {
        cur_.get();
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();  // implicit product
      } else if (c == '/') {
        cur_.fail("division is only allowed inside a coefficient literal a/b", cur_.pos);
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (cur_.peek() == '^') {
      cur_.get();
      std::size_t at = cur_.pos;
      mpz_class e = integer_literal("exponent");
      if (e < 0 || !e.fits_uint_p()) cur_.fail("exponent out of range", at);
      base = base.pow(static_cast<std::uint32_t>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    char c = cur_.peek();
    std::size_t at = cur_.pos;
    if (c == '(') {
      cur_.get();
      Polynomial inner = expr();
      if (cur_.peek() != ')') cur_.fail("expected ')'", cur_.pos);
      cur_.get();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer_literal("number");
      if (cur_.peek() == '/') {
        cur_.get();
        std::size_t dat = cur_.pos;
        mpz_class den = integer_literal("denominator");
        if (den == 0) cur_.fail("zero denominator in coefficient literal", dat);
        return Polynomial::constant(ctx_, ctx_->field.from_fraction(num, den));
      }
      return Polynomial::constant(ctx_, ctx_->field.from_integer(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      auto idx = ctx_->table.index_of(name);
      if (!idx) cur_.fail("unknown variable '" + name + "'", at);
      return Polynomial::variable(ctx_, *idx);
    }
    if (c == '\0') cur_.fail("unexpected end of input", cur_.pos);
    cur_.fail(std::string("unexpected character '") + c + "'", cur_.pos);
  }

  mpz_class integer_literal(const std::string& what) {
    cur_.skip_ws();
    std::size_t at = cur_.pos;
    std::string digits;
    while (cur_.pos < cur_.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur_.text[cur_.pos]))) {
      digits += cur_.text[cur_.pos++];
    }
    if (digits.empty()) cur_.fail("expected " + what, at);
    return mpz_class(digits);
  }

  std::string identifier() {
    cur_.skip_ws();
    std::string name;
    while (cur_.pos < cur_.text.size()) {
      char c = cur_.text[cur_.pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        name += c;
        ++cur_.pos;
      } else {
        break;
      }
    }
    return name;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyContextPtr& ctx) {
  return Parser(text, ctx).run();
}

}  // namespace ultk
