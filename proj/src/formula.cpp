#include "spectre/formula.hpp"

#include <cctype>

#include "spectre/errors.hpp"

namespace spectre {

namespace {

class Parser {
 public:
  Parser(const std::string& s, Env env) : s_(s), env_(std::move(env)) {}

  Rat expr() {
    Rat v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  MixedSpectrum spectrum() {
    skip();
    if (i_ < s_.size() && s_[i_] == '0' && rest_blank(i_ + 1)) {
      i_ = s_.size();
      return {};
    }
    MixedSpectrum out;
    long sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    for (;;) {
      MixedSpectrum t = spec_term();
      out += sign == 1 ? t : -1 * t;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else break;
    }
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return out;
  }

  void finish() {
    skip();
    if (i_ != s_.size()) fail("trailing input");
  }

 private:
  const std::string& s_;
  Env env_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(i_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(const std::string& w) {
    skip();
    if (s_.compare(i_, w.size(), w) != 0) return false;
    i_ += w.size();
    return true;
  }
  bool rest_blank(size_t j) const {
    for (; j < s_.size(); ++j)
      if (!std::isspace(static_cast<unsigned char>(s_[j]))) return false;
    return true;
  }

  Rat term() {
    Rat v = factor();
    for (;;) {
      if (eat('*')) v *= factor();
      else if (eat('/')) {
        Rat d = factor();
        if (d == 0) fail("division by zero");
        v /= d;
      } else return v;
    }
  }

  Rat factor() {
    char c = peek();
    if (c == '-') {
      ++i_;
      return -factor();
    }
    if (c == '(') {
      ++i_;
      Rat v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Rat v(Int(s_.substr(i_, j - i_)));
      i_ = j;
      // implicit product, as in "2q"
      if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(')) v *= factor();
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      std::string name = s_.substr(i_, j - i_);
      auto it = env_.find(name);
      if (it == env_.end()) fail("unbound parameter '" + name + "'");
      i_ = j;
      return it->second;
    }
    fail("expected a number, parameter or '('");
  }

  long integer_expr() {
    Rat v = expr();
    if (!is_integer(v)) fail("expected an integer");
    return to_long(v.get_num());
  }

  MixedSpectrum spec_term() {
    long k = 1;
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      k = std::stol(s_.substr(i_, j - i_));
      i_ = j;
    }
    if (eat_word("sum")) {
      expect('(');
      skip();
      size_t j = i_;
      while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
      std::string var = s_.substr(i_, j - i_);
      if (var.empty()) fail("expected a summation variable");
      i_ = j;
      expect('=');
      long lo = integer_expr();
      if (!eat_word("..")) fail("expected '..'");
      long hi = integer_expr();
      expect(')');
      size_t body = i_;
      MixedSpectrum out;
      Env saved = env_;
      for (long v = lo; v <= hi; ++v) {
        env_[var] = Rat(v);
        i_ = body;
        out += spec_term();
      }
      if (lo > hi) {
        env_[var] = Rat(0);
        i_ = body;
        skip_term();
      }
      env_ = saved;
      return k * out;
    }
    expect('[');
    expect('(');
    Rat a = expr();
    expect(',');
    long w = integer_expr();
    expect(')');
    expect(']');
    return MixedSpectrum::single(a, static_cast<int>(w), k);
  }

  void skip_term() {
    // advance past one bracketed term or nested sum without evaluating it
    int depth = 0;
    skip();
    if (eat_word("sum")) {
      expect('(');
      depth = 1;
      while (i_ < s_.size() && depth > 0) {
        if (s_[i_] == '(') ++depth;
        if (s_[i_] == ')') --depth;
        ++i_;
      }
      skip_term();
      return;
    }
    expect('[');
    depth = 1;
    while (i_ < s_.size() && depth > 0) {
      if (s_[i_] == '[') ++depth;
      if (s_[i_] == ']') --depth;
      ++i_;
    }
    if (depth != 0) fail("unterminated term");
  }
};

}  // namespace

Rat eval_expr(const std::string& expr, const Env& env) {
  Parser p(expr, env);
  Rat v = p.expr();
  p.finish();
  return v;
}

MixedSpectrum eval_spectrum_formula(const std::string& formula, const Env& env) {
  Parser p(formula, env);
  return p.spectrum();
}

}  // namespace spectre
