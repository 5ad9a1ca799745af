#include "fanowalls/cli/expr.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "fanowalls/kulattice.hpp"

namespace fanowalls::cli {

namespace {

using numclass::ChernCharacter;

// A parsed subexpression is either a scalar or a class.
struct Value {
  Rational scalar{1};
  std::optional<ChernCharacter> cls;
};

class Parser {
 public:
  Parser(const numclass::FanoContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  ChernCharacter run() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    if (!v.cls) throw ParseError("expression is a number, expected a class", 0);
    return *v.cls;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  Value add(Value a, const Value& b, int sign, std::size_t at) {
    if (a.cls.has_value() != b.cls.has_value()) throw ParseError("cannot add a number and a class", at);
    if (a.cls) {
      *a.cls += Rational(sign) * *b.cls;
    } else {
      a.scalar += sign * b.scalar;
    }
    return a;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('+')) {
        v = add(v, term(), 1, at);
      } else if (accept('-')) {
        v = add(v, term(), -1, at);
      } else {
        return v;
      }
    }
  }

  Value term() {
    int sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    Value v = factor();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (!accept('*')) break;
      Value w = factor();
      if (v.cls && w.cls) throw ParseError("cannot multiply two classes", at);
      if (w.cls) {
        v.cls = v.scalar * *w.cls;
      } else if (v.cls) {
        v.cls = w.scalar * *v.cls;
      } else {
        v.scalar *= w.scalar;
      }
      if (v.cls) v.scalar = 1;
    }
    if (sign < 0) {
      if (v.cls) {
        v.cls = -*v.cls;
      } else {
        v.scalar = -v.scalar;
      }
    }
    return v;
  }

  Rational integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) {
      pos_ = start;
      fail("expected an integer");
    }
    return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
  }

  Rational number() {
    const std::size_t start = pos_;
    Rational n = integer();
    if (accept('/')) {
      const Rational den = integer();
      if (sgn(den) == 0) throw ParseError("zero denominator", start);
      n /= den;
    }
    return n;
  }

  Value factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Value{number(), std::nullopt};
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (accept_word("k1")) return Value{1, kulattice::kappa1(ctx_)};
    if (accept_word("k2")) return Value{1, kulattice::kappa2(ctx_)};
    if (accept_word("pt")) return Value{1, numclass::point_class(ctx_)};
    if (accept_word("O")) {
      expect('(');
      const Rational k = integer();
      expect(')');
      return Value{1, numclass::line_bundle(static_cast<int>(k.get_num().get_si()))};
    }
    if (accept_word("ch")) {
      expect('(');
      ChernCharacter e;
      for (int i = 0; i < 4; ++i) {
        if (i > 0) expect(',');
        skip();
        int sign = 1;
        if (accept('-')) sign = -1;
        e[i] = sign * number();
      }
      expect(')');
      return Value{1, e};
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const numclass::FanoContext& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

numclass::ChernCharacter parse_class(const numclass::FanoContext& ctx, std::string_view text) {
  return Parser(ctx, text).run();
}

}  // namespace fanowalls::cli
