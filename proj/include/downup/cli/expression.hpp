#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "downup/cli/spec_file.hpp"
#include "downup/freealg/poly.hpp"

namespace downup::cli {

/// Generator name accepted by the expression parser.
struct Symbol {
  std::string name;
  freealg::Letter letter;
};

/// Recursive-descent parser for
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := ('+' | '-') factor | atom ('^' integer)?
///   atom   := integer ('/' integer)? | symbol | '(' expr ')'
/// Whitespace is ignored. Errors carry the 1-based column.
class ExpressionParser {
public:
  ExpressionParser(const std::string& text, std::vector<Symbol> symbols)
      : text_(text), symbols_(std::move(symbols)) {}

  freealg::FreePoly parse() {
    auto out = expr();
    skip();
    if (pos_ < text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

private:
  using FreePoly = freealg::FreePoly;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, static_cast<int>(pos_) + 1, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FreePoly expr() {
    FreePoly out = term();
    for (;;) {
      if (eat('+'))
        out += term();
      else if (eat('-'))
        out -= term();
      else
        return out;
    }
  }

  FreePoly term() {
    FreePoly out = factor();
    while (eat('*'))
      out = out * factor();
    return out;
  }

  FreePoly factor() {
    if (eat('-'))
      return Scalar(-1) * factor();
    if (eat('+'))
      return factor();
    FreePoly base = atom();
    if (eat('^')) {
      skip();
      std::string digits = integer();
      if (digits.empty())
        fail("expected a nonnegative integer exponent");
      if (digits.size() > 4)
        fail("exponent too large");
      return freealg::pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  FreePoly atom() {
    skip();
    if (pos_ == text_.size())
      fail("unexpected end of expression");
    if (eat('(')) {
      FreePoly inner = expr();
      if (!eat(')'))
        fail("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = integer();
      std::size_t save = pos_;
      if (eat('/')) {
        skip();
        std::string den = integer();
        if (den.empty()) {
          pos_ = save;
          fail("expected a denominator after '/'");
        }
        if (den.find_first_not_of('0') == std::string::npos)
          fail("division by zero");
        literal += "/" + den;
      }
      return FreePoly(parse_scalar(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      for (const auto& s : symbols_)
        if (s.name == name)
          return FreePoly::generator(s.letter);
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string text_;
  std::vector<Symbol> symbols_;
  std::size_t pos_ = 0;
};

/// Symbols X1, X2, X3 and, when `with_t`, T.
inline std::vector<Symbol> gdu_symbols(bool with_t) {
  std::vector<Symbol> out{{"X1", gdu::X1}, {"X2", gdu::X2}, {"X3", gdu::X3}};
  if (with_t)
    out.push_back({"T", gdu::T});
  return out;
}

inline freealg::FreePoly parse_expression(const std::string& text, bool with_t = false) {
  return ExpressionParser(text, gdu_symbols(with_t)).parse();
}

}  // namespace downup::cli
