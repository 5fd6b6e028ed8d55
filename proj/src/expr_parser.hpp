#pragma once

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>

#include "qflag/scalars.hpp"

namespace qflag::detail {

// Recursive-descent parser for sums of products of atoms with integer powers,
// integers, q, v and bracketed scalars "[...]". Letters are resolved by the
// `atom` hook, which consumes input through the cursor it is given.
template <class Elem>
class ExprParser {
 public:
  struct Cursor {
    const std::string& s;
    size_t& pos;
    bool eat(const std::string& tok) {
      if (s.compare(pos, tok.size(), tok) != 0) return false;
      pos += tok.size();
      return true;
    }
  };
  struct Hooks {
    std::function<Elem(const Elem&, const Elem&)> multiply;
    std::function<Elem(const Elem&, int)> power;
    std::function<Elem(const QScalar&)> scalar;
    // returns false if the input at the cursor is not an atom
    std::function<bool(Cursor&, Elem&)> atom;
  };

  ExprParser(Hooks h, const std::string& s) : h_(std::move(h)), s_(s) {}

  Elem parse() {
    Elem r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("expression '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Elem expr() {
    bool neg = eat('-');
    if (!neg) eat('+');
    Elem r = term();
    if (neg) r = -r;
    while (true) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }
  Elem term() {
    Elem r = factor();
    while (eat('*')) r = h_.multiply(r, factor());
    return r;
  }
  int integer() {
    skip();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  Elem factor() {
    Elem base = atom();
    if (eat('^')) base = h_.power(base, integer());
    return base;
  }
  Elem atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Elem r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '[') {
      size_t close = s_.find(']', pos_);
      if (close == std::string::npos) fail("unterminated '['");
      QScalar v = QScalar::parse(s_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return h_.scalar(v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return h_.scalar(QScalar(integer()));
    Elem r;
    Cursor cur{s_, pos_};
    if (h_.atom(cur, r)) return r;
    fail(std::string("unknown symbol '") + c + "'");
  }

  Hooks h_;
  std::string s_;
  size_t pos_ = 0;
};

}  // namespace qflag::detail
