#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "downup/errors.hpp"

namespace downup {

/// Exact rational coefficient. gmpxx keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0)
    throw InputError("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }
inline bool is_one(const Scalar& s) { return s == 1; }

inline std::string to_string(const Scalar& s) { return s.get_str(); }

/// Parses "p", "-p", "p/q" with optional surrounding whitespace. Decimal
/// points and exponents are rejected.
inline std::optional<Scalar> try_parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty())
    return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t to = from;
    while (to < text.size() && std::isdigit(static_cast<unsigned char>(text[to])))
      ++to;
    return to;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos)
    return std::nullopt;
  Integer num(std::string(text.substr(pos, num_end - pos)));
  Integer den = 1;
  if (num_end != text.size()) {
    if (text[num_end] != '/')
      return std::nullopt;
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size())
      return std::nullopt;
    den = Integer(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
    if (den == 0)
      return std::nullopt;
  }
  Scalar s(negative ? Integer(-num) : num, den);
  s.canonicalize();
  return s;
}

inline Scalar parse_scalar(std::string_view text) {
  auto s = try_parse_scalar(text);
  if (!s)
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  return *s;
}

/// Exact square root when both numerator and denominator are perfect squares.
inline std::optional<Scalar> rational_sqrt(const Scalar& s) {
  if (sgn(s) < 0)
    return std::nullopt;
  const Integer& num = s.get_num();
  const Integer& den = s.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Scalar root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

}  // namespace downup
