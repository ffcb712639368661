#pragma once

// Test-only reference implementations. None of these call normal_form,
// is_groebner, hilbert or the Ufnarovski code they are used to check.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "downup/downup.hpp"

namespace oracle {

using downup::Integer;
using downup::Scalar;
using downup::freealg::FreePoly;
using downup::freealg::Letter;
using downup::freealg::WeightedOrder;
using downup::freealg::Word;

/// Row-echelon span of sparse vectors. Rows are indexed by their largest
/// key under `Less`, so membership only needs leading-key elimination.
template <class Key, class Less>
class LinearSpan {
public:
  struct Desc {
    Less less;
    bool operator()(const Key& a, const Key& b) const { return less(b, a); }
  };
  using Vector = std::map<Key, Scalar, Desc>;

  explicit LinearSpan(Less less) : less_(less), rows_(Desc{less}) {}

  Vector make_vector() const { return Vector(Desc{less_}); }

  /// Eliminates leading keys that are pivots; returns the residue.
  Vector reduce(Vector v) const {
    while (!v.empty()) {
      auto lead = v.begin();
      auto row = rows_.find(lead->first);
      if (row == rows_.end())
        break;
      Scalar factor = lead->second;
      for (const auto& [k, c] : row->second) {
        auto [it, inserted] = v.try_emplace(k, -factor * c);
        if (!inserted) {
          it->second -= factor * c;
          if (it->second == 0)
            v.erase(it);
        }
      }
    }
    return v;
  }

  bool insert(Vector v) {
    v = reduce(std::move(v));
    if (v.empty())
      return false;
    Scalar lc = v.begin()->second;
    for (auto& [k, c] : v)
      c /= lc;
    Key pivot = v.begin()->first;
    rows_.emplace(std::move(pivot), std::move(v));
    return true;
  }

  bool contains(Vector v) const { return reduce(std::move(v)).empty(); }
  std::size_t dimension() const { return rows_.size(); }

private:
  Less less_;
  std::map<Key, Vector, Desc> rows_;
};

struct WordLess {
  const WeightedOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

using WordSpan = LinearSpan<Word, WordLess>;

inline WordSpan::Vector to_vector(const WordSpan& span, const FreePoly& p) {
  auto v = span.make_vector();
  for (const auto& [w, c] : p)
    v.emplace(w, c);
  return v;
}

/// Every word of weighted degree <= max_degree, shortest first.
inline std::vector<Word> words_up_to(const WeightedOrder& order, int max_degree) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    int d = order.degree(out[k]);
    for (Letter x = 0; x < order.generator_count(); ++x)
      if (d + order.weight(x) <= max_degree)
        out.push_back(out[k] * Word{x});
  }
  return out;
}

/// span{ p g q : g in rels, deg(p g q) <= D }.
inline WordSpan ideal_span(const std::vector<FreePoly>& rels, const WeightedOrder& order, int D) {
  WordSpan span(WordLess{&order});
  const auto words = words_up_to(order, D);
  for (int total = 0; total <= D; ++total) {
    for (const auto& g : rels) {
      int dg = downup::freealg::degree(g, order);
      for (const auto& p : words) {
        int dp = order.degree(p);
        if (dp + dg > total)
          continue;
        for (const auto& q : words) {
          if (dp + dg + order.degree(q) != total)
            continue;
          span.insert(to_vector(span, g.sandwich(p, q)));
        }
      }
    }
  }
  return span;
}

/// Words of degree <= D containing no leading word of `rels`, by filtering
/// the full word list.
inline long count_normal_words_naive(const std::vector<FreePoly>& rels, const WeightedOrder& order, int D) {
  std::vector<Word> lms;
  for (const auto& g : rels)
    lms.push_back(downup::freealg::leading_word(g, order));
  long count = 0;
  for (const auto& w : words_up_to(order, D)) {
    bool normal = true;
    for (const auto& lm : lms)
      normal = normal && !w.contains(lm);
    count += normal;
  }
  return count;
}

/// A relation set is a Groebner basis (for compositions of degree <= D)
/// iff the ideal span has exactly one dimension per reducible word.
inline bool groebner_by_dimension(const std::vector<FreePoly>& rels, const WeightedOrder& order, int D) {
  const long all = static_cast<long>(words_up_to(order, D).size());
  const long normal = count_normal_words_naive(rels, order, D);
  return static_cast<long>(ideal_span(rels, order, D).dimension()) == all - normal;
}

/// All irreducible results reachable by rewriting any term at any position
/// with any relation. Relations are made monic first.
inline std::vector<FreePoly> all_normal_forms(const FreePoly& start, const std::vector<FreePoly>& rels_in,
                                              const WeightedOrder& order) {
  std::vector<std::pair<Word, FreePoly>> rels;
  for (const auto& g : rels_in) {
    auto [lm, lc] = downup::freealg::leading(g, order);
    rels.emplace_back(lm, g * Scalar(1 / lc));
  }
  const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  auto key = [&](const FreePoly& p) {
    std::string s;
    for (const auto& [w, c] : p) {
      for (Letter x : w)
        s += char('a' + x);
      s += ":" + c.get_str() + ";";
    }
    return s;
  };
  std::set<std::string> seen;
  std::map<std::string, FreePoly> results;
  std::function<void(const FreePoly&)> explore = [&](const FreePoly& p) {
    if (!seen.insert(key(p)).second)
      return;
    bool reducible = false;
    for (const auto& [w, c] : p) {
      for (const auto& [lm, g] : rels) {
        for (std::size_t pos = 0; pos + lm.size() <= w.size(); ++pos) {
          if (!w.occurs_at(lm, pos))
            continue;
          reducible = true;
          FreePoly next = p - c * g.sandwich(w.prefix(pos), w.suffix(w.size() - pos - lm.size()));
          explore(next);
        }
      }
    }
    if (!reducible)
      results.emplace(key(p), p);
  };
  explore(start);
  std::vector<FreePoly> out;
  for (auto& [k, p] : results)
    out.push_back(p);
  return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t generators, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(generators) - 1);
  std::vector<Letter> out(len(rng));
  for (auto& x : out)
    x = static_cast<Letter>(letter(rng));
  return Word(std::move(out));
}

inline FreePoly random_poly(std::mt19937_64& rng, const WeightedOrder& order, int max_degree,
                            std::size_t terms) {
  const auto words = words_up_to(order, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  FreePoly out;
  for (std::size_t k = 0; k < terms; ++k)
    out.add_term(words[pick(rng)], downup::gdu::random_scalar(rng, 3, 3, true));
  return out;
}

/// C(n, k) for small arguments.
inline long binomial(long n, long k) {
  if (k < 0 || k > n)
    return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// #{(i, j, l) : w (i + l) + j == q}, by direct enumeration.
inline long triples_of_degree(int w, int q) {
  long count = 0;
  for (int i = 0; i <= q; ++i)
    for (int j = 0; j <= q; ++j)
      for (int l = 0; l <= q; ++l)
        count += (w * (i + l) + j == q);
  return count;
}

/// Coefficients of 1/((1-t)^2 (1-t^n)^2) by enumerating (a, b, c, d) with
/// a + b + n c + n d == q.
inline long weighted_four_series(int n, int q) {
  long count = 0;
  for (int c = 0; n * c <= q; ++c)
    for (int d = 0; n * (c + d) <= q; ++d)
      count += q - n * (c + d) + 1;
  return count;
}

// ---- PBW side ----

using downup::solvable::Exponent;
using downup::solvable::PbwOrder;
using downup::solvable::PbwPoly;
using downup::solvable::SolvableAlgebra;

struct ExponentLess {
  const PbwOrder* order;
  bool operator()(const Exponent& a, const Exponent& b) const { return order->less(a, b); }
};

using ExponentSpan = LinearSpan<Exponent, ExponentLess>;

inline ExponentSpan::Vector to_vector(const ExponentSpan& span, const PbwPoly& p) {
  auto v = span.make_vector();
  for (const auto& [e, c] : p)
    v.emplace(e, c);
  return v;
}

/// Exponents of weighted degree <= D, by nested enumeration.
inline std::vector<Exponent> exponents_up_to(const PbwOrder& order, int D) {
  std::vector<Exponent> out{Exponent(order.size(), 0)};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t i = 0; i < order.size(); ++i) {
      // Only extend at or after the last nonzero position so each
      // exponent is produced once.
      bool later_nonzero = false;
      for (std::size_t t = i + 1; t < order.size(); ++t)
        later_nonzero = later_nonzero || out[k][t] > 0;
      if (later_nonzero || order.degree(out[k]) + order.weights()[i] > D)
        continue;
      Exponent e = out[k];
      ++e[i];
      out.push_back(e);
    }
  return out;
}

/// span{ m * g : g in gens, m a PBW monomial, deg(m) + deg(g) <= D }.
inline ExponentSpan left_ideal_span(const SolvableAlgebra& alg, const std::vector<PbwPoly>& gens, int D) {
  const PbwOrder& order = alg.order();
  ExponentSpan span(ExponentLess{&order});
  downup::solvable::Multiplier mul(alg);
  for (const auto& m : exponents_up_to(order, D))
    for (const auto& g : gens) {
      int dg = 0;
      for (const auto& [e, c] : g)
        dg = std::max(dg, order.degree(e));
      if (order.degree(m) + dg <= D)
        span.insert(to_vector(span, mul.times(m, g)));
    }
  return span;
}

inline PbwPoly random_pbw(std::mt19937_64& rng, const PbwOrder& order, int max_degree, std::size_t terms) {
  const auto monos = exponents_up_to(order, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  PbwPoly out;
  for (std::size_t k = 0; k < terms; ++k)
    out.add_term(monos[pick(rng)], downup::gdu::random_scalar(rng, 3, 3, true));
  return out;
}

}  // namespace oracle
