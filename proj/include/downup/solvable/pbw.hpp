#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "downup/errors.hpp"
#include "downup/freealg/poly.hpp"
#include "downup/scalar.hpp"

namespace downup::solvable {

/// Exponent vector of the PBW monomial a_1^{e_1} ... a_n^{e_n}, in the
/// algebra's fixed generator order.
using Exponent = std::vector<unsigned>;

inline Exponent unit_exponent(std::size_t n, std::size_t k) {
  Exponent e(n, 0);
  e[k] = 1;
  return e;
}

inline Exponent add(const Exponent& a, const Exponent& b) {
  Exponent out(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += b[i];
  return out;
}

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

/// b - a, assuming divides(a, b).
inline Exponent quotient(const Exponent& b, const Exponent& a) {
  Exponent out(b);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] -= a[i];
  return out;
}

inline Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::max(a[i], b[i]);
  return out;
}

inline bool is_identity(const Exponent& e) {
  for (unsigned x : e)
    if (x != 0)
      return false;
  return true;
}

/// Generator positions listed in order with multiplicity, i.e. the word
/// a_1^{e_1} ... a_n^{e_n} spelled out.
inline std::vector<std::size_t> spell(const Exponent& e) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    out.insert(out.end(), e[i], i);
  return out;
}

enum class PbwOrderKind {
  GradedLex,  // weighted degree, then lex on the spelled-out word
  Lex,        // lex on the spelled-out word only (not a monomial ordering)
};

/// Ordering on PBW monomials. Generator position k has precedence rank k,
/// so the spelled-out word comparison matches the free-algebra graded lex
/// order on normal words.
class PbwOrder {
public:
  PbwOrder() = default;
  PbwOrder(std::vector<int> weights, PbwOrderKind kind = PbwOrderKind::GradedLex)
      : weights_(std::move(weights)), kind_(kind) {
    for (int w : weights_)
      if (w < 1)
        throw InputError("PBW weights must be positive");
  }

  std::size_t size() const { return weights_.size(); }
  const std::vector<int>& weights() const { return weights_; }
  PbwOrderKind kind() const { return kind_; }

  int degree(const Exponent& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      d += weights_[i] * static_cast<int>(e[i]);
    return d;
  }

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const {
    if (kind_ == PbwOrderKind::GradedLex)
      if (auto c = degree(a) <=> degree(b); c != 0)
        return c;
    // Walk both spelled words in lockstep.
    std::size_t ia = 0, ib = 0;
    unsigned ra = 0, rb = 0;  // letters consumed at the current position
    auto next = [](const Exponent& e, std::size_t& i, unsigned& r) -> std::ptrdiff_t {
      while (i < e.size() && r == e[i]) {
        ++i;
        r = 0;
      }
      if (i == e.size())
        return -1;
      ++r;
      return static_cast<std::ptrdiff_t>(i);
    };
    for (;;) {
      auto x = next(a, ia, ra);
      auto y = next(b, ib, rb);
      if (x < 0 || y < 0)
        return (x < 0 ? 0 : 1) <=> (y < 0 ? 0 : 1);
      if (x != y)
        return x <=> y;
    }
  }

  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

private:
  std::vector<int> weights_;
  PbwOrderKind kind_ = PbwOrderKind::GradedLex;
};

/// Finite combination of PBW monomials; no zero coefficients stored.
class PbwPoly {
public:
  using Terms = std::map<Exponent, Scalar>;

  PbwPoly() = default;
  PbwPoly(const Exponent& e, const Scalar& c = 1) { add_term(e, c); }

  static PbwPoly constant(std::size_t n, const Scalar& c) { return PbwPoly(Exponent(n, 0), c); }
  static PbwPoly generator(std::size_t n, std::size_t k) { return PbwPoly(unit_exponent(n, k)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Exponent& e, const Scalar& c) {
    if (downup::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (downup::is_zero(it->second))
        terms_.erase(it);
    }
  }

  PbwPoly& operator+=(const PbwPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
      add_term(e, c);
    return *this;
  }
  PbwPoly& operator-=(const PbwPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
      add_term(e, -c);
    return *this;
  }
  PbwPoly& operator*=(const Scalar& s) {
    if (downup::is_zero(s))
      terms_.clear();
    for (auto& [e, c] : terms_)
      c *= s;
    return *this;
  }
  friend PbwPoly operator+(PbwPoly a, const PbwPoly& b) { return a += b; }
  friend PbwPoly operator-(PbwPoly a, const PbwPoly& b) { return a -= b; }
  friend PbwPoly operator*(PbwPoly a, const Scalar& s) { return a *= s; }
  friend PbwPoly operator*(const Scalar& s, PbwPoly a) { return a *= s; }

  friend bool operator==(const PbwPoly&, const PbwPoly&) = default;

private:
  Terms terms_;
};

inline std::pair<Exponent, Scalar> leading(const PbwPoly& p, const PbwOrder& order) {
  if (p.is_zero())
    throw InputError("leading term of the zero PBW polynomial");
  auto best = p.begin();
  for (auto it = std::next(best); it != p.end(); ++it)
    if (order.less(best->first, it->first))
      best = it;
  return {best->first, best->second};
}

inline std::string render_exponent(const Exponent& e, std::span<const std::string> names,
                                   freealg::RenderStyle style = freealg::RenderStyle::Ascii) {
  const char* sep = style == freealg::RenderStyle::Ascii ? "*" : "·";
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0)
      continue;
    if (!out.empty())
      out += sep;
    out += names[i];
    if (e[i] > 1)
      out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string render(const PbwPoly& p, const PbwOrder& order, std::span<const std::string> names,
                          freealg::RenderStyle style = freealg::RenderStyle::Ascii) {
  std::vector<std::pair<Exponent, Scalar>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return freealg::render_terms(terms, [&](const Exponent& e) { return render_exponent(e, names, style); },
                               style);
}

}  // namespace downup::solvable
