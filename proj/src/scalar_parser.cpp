#include "branchlaw/scalar_parser.hpp"

#include <cctype>
#include <string>

#include "branchlaw/error.hpp"

namespace branchlaw {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Cyclotomic parse() {
    Cyclotomic value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  long small_integer() {
    const Integer z = integer();
    if (!z.fits_slong_p()) fail("integer too large");
    return z.get_si();
  }

  Cyclotomic expr() {
    Cyclotomic value = term();
    for (;;) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  Cyclotomic term() {
    Cyclotomic value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const Cyclotomic d = unary();
        if (d.is_zero()) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  Cyclotomic unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Cyclotomic power() {
    Cyclotomic base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const long n = small_integer();
    if (negative && base.is_zero()) fail("zero to a negative power");
    return base.pow(negative ? -n : n);
  }

  Cyclotomic primary() {
    if (accept('(')) {
      Cyclotomic value = expr();
      expect(')');
      return value;
    }
    if (accept_word("E(")) {
      const long m = small_integer();
      if (m < 1) fail("E(m) needs m >= 1");
      expect(')');
      return Cyclotomic::root_of_unity(m, 1);
    }
    if (accept_word("Sqrt(")) {
      const long n = small_integer();
      expect(')');
      try {
        return sqrt_integer(n);
      } catch (const ArithmeticError& e) {
        fail(e.what());
      }
    }
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return Cyclotomic(integer());
    }
    fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace branchlaw
