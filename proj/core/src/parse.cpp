#include "koszul/parse.hpp"

#include <cctype>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const RingPtr& ring) : s_(s), ring_(ring) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = product();
    for (;;) {
      if (eat('+')) {
        acc += product();
      } else if (eat('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Poly product() {
    Poly acc = unary();
    while (eat('*')) acc *= unary();
    return acc;
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 5) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      mpz_class den = 1;
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string d = read_digits();
        if (d.empty()) {
          pos_ = save;
          fail("expected denominator");
        }
        den = mpz_class(d);
        if (den == 0) fail("zero denominator");
      } else {
        pos_ = save;
      }
      Rational q(num, den);
      q.canonicalize();
      return Poly::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(ring_, idx);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

}  // namespace koszul
