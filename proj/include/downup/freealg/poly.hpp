#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "downup/errors.hpp"
#include "downup/freealg/order.hpp"
#include "downup/freealg/word.hpp"
#include "downup/scalar.hpp"

namespace downup::freealg {

/// Finite rational combination of words. Zero coefficients are never stored,
/// so equal polynomials have identical term maps.
class FreePoly {
public:
  using Terms = std::map<Word, Scalar>;

  FreePoly() = default;
  FreePoly(const Scalar& c) { add_term(Word{}, c); }
  FreePoly(const Word& w, const Scalar& c = 1) { add_term(w, c); }

  static FreePoly generator(Letter g) { return FreePoly(Word{g}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Word& w, const Scalar& c) {
    if (downup::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (downup::is_zero(it->second))
        terms_.erase(it);
    }
  }

  FreePoly& operator+=(const FreePoly& rhs) {
    for (const auto& [w, c] : rhs.terms_)
      add_term(w, c);
    return *this;
  }
  FreePoly& operator-=(const FreePoly& rhs) {
    for (const auto& [w, c] : rhs.terms_)
      add_term(w, -c);
    return *this;
  }
  FreePoly& operator*=(const Scalar& s) {
    if (downup::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_)
      c *= s;
    return *this;
  }

  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator-(FreePoly a) { return a *= Scalar(-1); }
  friend FreePoly operator*(FreePoly a, const Scalar& s) { return a *= s; }
  friend FreePoly operator*(const Scalar& s, FreePoly a) { return a *= s; }

  friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    FreePoly out;
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_)
        out.add_term(u * v, c * d);
    return out;
  }

  /// left * this * right
  FreePoly sandwich(const Word& left, const Word& right) const {
    FreePoly out;
    for (const auto& [w, c] : terms_)
      out.terms_.emplace(left * w * right, c);
    return out;
  }

  friend bool operator==(const FreePoly&, const FreePoly&) = default;

private:
  Terms terms_;
};

inline FreePoly pow(const FreePoly& p, unsigned k) {
  FreePoly out(Scalar(1));
  for (unsigned i = 0; i < k; ++i)
    out = out * p;
  return out;
}

/// Largest word of a nonzero polynomial and its coefficient.
inline std::pair<Word, Scalar> leading(const FreePoly& poly, const WeightedOrder& order) {
  if (poly.is_zero())
    throw InputError("leading term of the zero polynomial");
  auto best = poly.begin();
  for (auto it = std::next(best); it != poly.end(); ++it)
    if (order.less(best->first, it->first))
      best = it;
  return {best->first, best->second};
}

inline Word leading_word(const FreePoly& poly, const WeightedOrder& order) {
  return leading(poly, order).first;
}

inline int degree(const FreePoly& poly, const WeightedOrder& order) {
  if (poly.is_zero())
    throw InputError("degree of the zero polynomial");
  int d = 0;
  for (const auto& [w, c] : poly)
    d = std::max(d, order.degree(w));
  return d;
}

inline bool is_homogeneous(const FreePoly& poly, const WeightedOrder& order) {
  if (poly.is_zero())
    return true;
  int d = order.degree(poly.begin()->first);
  for (const auto& [w, c] : poly)
    if (order.degree(w) != d)
      return false;
  return true;
}

/// Splits a polynomial into weighted-homogeneous components, keyed by degree.
inline std::map<int, FreePoly> homogeneous_components(const FreePoly& poly,
                                                      const WeightedOrder& order) {
  std::map<int, FreePoly> parts;
  for (const auto& [w, c] : poly)
    parts[order.degree(w)].add_term(w, c);
  return parts;
}

/// Sum of the terms of maximal weighted degree.
inline FreePoly leading_homogeneous(const FreePoly& poly, const WeightedOrder& order) {
  if (poly.is_zero())
    throw InputError("leading homogeneous part of the zero polynomial");
  return homogeneous_components(poly, order).rbegin()->second;
}

inline FreePoly make_monic(FreePoly poly, const WeightedOrder& order) {
  Scalar lc = leading(poly, order).second;
  if (!is_one(lc))
    poly *= Scalar(1 / lc);
  return poly;
}

enum class RenderStyle {
  Ascii,   // X1*X3 - 2*X3, X1^2
  Pretty,  // X1·X3 − 2·X3, X1^2
};

inline std::string render_word(const Word& w, std::span<const std::string> names,
                               RenderStyle style = RenderStyle::Ascii) {
  if (w.empty())
    return "1";
  const char* sep = style == RenderStyle::Ascii ? "*" : "·";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i])
      ++j;
    if (!out.empty())
      out += sep;
    out += w[i] < names.size() ? names[w[i]] : "?" + std::to_string(int(w[i]));
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Terms from largest to smallest under `order`.
inline std::vector<std::pair<Word, Scalar>> sorted_terms(const FreePoly& poly,
                                                         const WeightedOrder& order) {
  std::vector<std::pair<Word, Scalar>> terms(poly.begin(), poly.end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return terms;
}

template <class Key>
std::string render_terms(const std::vector<std::pair<Key, Scalar>>& terms,
                         auto&& render_monomial, RenderStyle style) {
  if (terms.empty())
    return "0";
  const char* sep = style == RenderStyle::Ascii ? "*" : "·";
  const char* minus = style == RenderStyle::Ascii ? "-" : "−";
  std::string out;
  for (const auto& [m, c] : terms) {
    bool negative = sgn(c) < 0;
    Scalar mag = abs(c);
    if (out.empty())
      out += negative ? minus : "";
    else
      out += negative ? std::string(" ") + minus + " " : " + ";
    std::string mono = render_monomial(m);
    if (mono == "1")
      out += to_string(mag);
    else if (is_one(mag))
      out += mono;
    else
      out += to_string(mag) + sep + mono;
  }
  return out;
}

inline std::string render(const FreePoly& poly, const WeightedOrder& order,
                          std::span<const std::string> names,
                          RenderStyle style = RenderStyle::Ascii) {
  return render_terms(sorted_terms(poly, order),
                      [&](const Word& w) { return render_word(w, names, style); }, style);
}

/// Relation layout: the leading term, then the term on the reversed leading
/// word (if any), then the remaining terms from largest to smallest.
/// X3*X2 - 3*X2*X3 + X1^2 rather than X3*X2 + X1^2 - 3*X2*X3.
inline std::string render_relation(const FreePoly& poly, const WeightedOrder& order,
                                   std::span<const std::string> names,
                                   RenderStyle style = RenderStyle::Ascii) {
  auto terms = sorted_terms(poly, order);
  if (terms.size() > 2) {
    std::vector<Letter> rev(terms.front().first.begin(), terms.front().first.end());
    std::reverse(rev.begin(), rev.end());
    const Word swapped(std::move(rev));
    auto it = std::find_if(terms.begin() + 1, terms.end(), [&](const auto& t) { return t.first == swapped; });
    if (it != terms.end())
      std::rotate(terms.begin() + 1, it, it + 1);
  }
  return render_terms(terms, [&](const Word& w) { return render_word(w, names, style); }, style);
}

}  // namespace downup::freealg
