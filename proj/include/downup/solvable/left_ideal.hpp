#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

#include "downup/solvable/algebra.hpp"

namespace downup::solvable {

namespace detail {

struct DescendingExponent {
  const PbwOrder* order;
  bool operator()(const Exponent& a, const Exponent& b) const { return order->less(b, a); }
};

inline PbwPoly monic(PbwPoly p, const PbwOrder& order) {
  Scalar lc = leading(p, order).second;
  return p * Scalar(1 / lc);
}

/// a^delta * g, checked to have leading monomial delta + LM(g).
inline PbwPoly shifted(Multiplier& mul, const Exponent& delta, const PbwPoly& g, const PbwOrder& order) {
  PbwPoly q = mul.times(delta, g);
  Exponent expect = add(delta, leading(g, order).first);
  if (q.is_zero() || leading(q, order).first != expect)
    throw InternalError("leading monomials are not multiplicative; algebra is not solvable");
  return q;
}

inline PbwPoly reduce_left(Multiplier& mul, const PbwPoly& p, const std::vector<PbwPoly>& basis,
                           const PbwOrder& order) {
  std::vector<Exponent> lms;
  for (const auto& g : basis)
    lms.push_back(leading(g, order).first);
  std::map<Exponent, Scalar, DescendingExponent> work(p.begin(), p.end(), DescendingExponent{&order});
  PbwPoly rem;
  while (!work.empty()) {
    auto top = work.begin();
    Exponent e = top->first;
    Scalar c = top->second;
    work.erase(top);
    std::size_t hit = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (divides(lms[k], e)) {
        hit = k;
        break;
      }
    if (hit == basis.size()) {
      rem.add_term(e, c);
      continue;
    }
    PbwPoly q = shifted(mul, quotient(e, lms[hit]), basis[hit], order);
    Scalar factor = c / q.coefficient(e);
    for (const auto& [qe, qc] : q) {
      if (qe == e)
        continue;
      Scalar delta = -factor * qc;
      auto [it, inserted] = work.try_emplace(qe, delta);
      if (!inserted) {
        it->second += delta;
        if (is_zero(it->second))
          work.erase(it);
      }
    }
  }
  return rem;
}

}  // namespace detail

/// Remainder of left division of p by `basis`: no term of the result is a
/// multiple of a basis leading monomial.
inline PbwPoly nf_left(const SolvableAlgebra& alg, const PbwPoly& p, const std::vector<PbwPoly>& basis) {
  Multiplier mul(alg);
  return detail::reduce_left(mul, p, basis, alg.order());
}

/// Left Groebner basis of the left ideal generated by `gens`: monic,
/// inter-reduced, sorted by leading monomial (smallest first).
inline std::vector<PbwPoly> left_buchberger(const SolvableAlgebra& alg, const std::vector<PbwPoly>& gens) {
  const PbwOrder& order = alg.order();
  Multiplier mul(alg);
  std::vector<PbwPoly> basis;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;

  auto insert = [&](PbwPoly p) {
    p = detail::reduce_left(mul, p, basis, order);
    if (p.is_zero())
      return;
    basis.push_back(detail::monic(std::move(p), order));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      pairs.emplace_back(k, basis.size() - 1);
  };
  for (const auto& g : gens)
    if (!g.is_zero())
      insert(g);

  while (!pairs.empty()) {
    auto [a, b] = pairs.front();
    pairs.pop_front();
    const Exponent la = leading(basis[a], order).first;
    const Exponent lb = leading(basis[b], order).first;
    const Exponent top = lcm(la, lb);
    PbwPoly sa = detail::shifted(mul, quotient(top, la), basis[a], order);
    PbwPoly sb = detail::shifted(mul, quotient(top, lb), basis[b], order);
    PbwPoly s = sa * Scalar(1 / sa.coefficient(top)) - sb * Scalar(1 / sb.coefficient(top));
    insert(std::move(s));
  }

  // Drop elements whose leading monomial is a multiple of another's.
  std::vector<PbwPoly> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Exponent lk = leading(basis[k], order).first;
    bool redundant = false;
    for (std::size_t t = 0; t < basis.size() && !redundant; ++t) {
      if (t == k)
        continue;
      const Exponent lt = leading(basis[t], order).first;
      redundant = divides(lt, lk) && (lt != lk || t < k);
    }
    if (!redundant)
      minimal.push_back(basis[k]);
  }
  // Tail-reduce each element against the others.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<PbwPoly> others;
    for (std::size_t t = 0; t < minimal.size(); ++t)
      if (t != k)
        others.push_back(minimal[t]);
    auto [lm, lc] = leading(minimal[k], order);
    PbwPoly tail = minimal[k];
    tail.add_term(lm, -lc);
    PbwPoly reduced = detail::reduce_left(mul, tail, others, order);
    reduced.add_term(lm, lc);
    minimal[k] = detail::monic(std::move(reduced), order);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const PbwPoly& x, const PbwPoly& y) {
    return order.less(leading(x, order).first, leading(y, order).first);
  });
  return minimal;
}

}  // namespace downup::solvable
