#pragma once

#include <string>
#include <vector>

#include "downup/gdu/pbw.hpp"
#include "downup/gdu/to_solvable.hpp"
#include "downup/graded/assoc.hpp"
#include "downup/solvable/algebra.hpp"

namespace downup::graded {

using gdu::T;
using gdu::X1;
using gdu::X2;
using gdu::X3;

/// sum_i T^{q_m - q_i} h_i for the homogeneous components h_i of f, with
/// the T-power placed on the left. `order` must include T with weight 1.
inline FreePoly homogenize_poly(const FreePoly& f, const WeightedOrder& order, Letter t) {
  if (f.is_zero())
    throw InputError("homogenization of the zero polynomial");
  if (order.weight(t) != 1)
    throw InputError("homogenizing variable must have weight 1");
  auto parts = freealg::homogeneous_components(f, order);
  const int top = parts.rbegin()->first;
  FreePoly out;
  for (const auto& [q, h] : parts)
    out += h.sandwich(Word::power(t, static_cast<std::size_t>(top - q)), Word{});
  return out;
}

/// Substitutes T -> 1.
inline FreePoly dehomogenize(const FreePoly& f, Letter t) {
  FreePoly out;
  for (const auto& [w, c] : f) {
    std::vector<Letter> kept;
    for (Letter g : w)
      if (g != t)
        kept.push_back(g);
    out.add_term(Word(std::move(kept)), c);
  }
  return out;
}

inline const std::vector<std::string>& homogenized_names() {
  static const std::vector<std::string> names{"X1", "X2", "X3", "T"};
  return names;
}

/// H(A) = K<X1, X2, X3, T> / <~G>, with T < X2 < X1 < X3 graded lex, T of
/// weight 1 and the X weights of A's scheme.
class HomogenizedAlgebra {
public:
  struct Named {
    FreePoly g31, g12, g32;
    FreePoly commutator[3];  // X_i T - T X_i for X1, X2, X3
  };

  explicit HomogenizedAlgebra(const gdu::GDUAlgebra& alg) : params_(alg.params()), scheme_(alg.scheme()) {
    alg.require_nonconstant_f("homogenization");
    const auto& w = alg.order().weights();
    order_ = WeightedOrder({w[X1], w[X2], w[X3], 1}, {T, X2, X1, X3});
    const auto& g = alg.named_relations();
    named_.g31 = homogenize_poly(g.g31, order_, T);
    named_.g12 = homogenize_poly(g.g12, order_, T);
    named_.g32 = homogenize_poly(g.g32, order_, T);
    const FreePoly t = FreePoly::generator(T);
    for (Letter xi : {X1, X2, X3})
      named_.commutator[xi] = FreePoly::generator(xi) * t - t * FreePoly::generator(xi);
    relations_ = RelationSet(order_, {named_.g31, named_.g12, named_.g32, named_.commutator[0],
                                      named_.commutator[1], named_.commutator[2]});
    certificate_ = freealg::is_groebner(relations_);
    if (!certificate_)
      throw InternalError("homogenized relations failed the Groebner check: remainder " +
                          freealg::render(certificate_.witness->remainder, order_, homogenized_names()));
  }

  const gdu::GDUParams& params() const { return params_; }
  gdu::WeightScheme scheme() const { return scheme_; }
  const WeightedOrder& order() const { return order_; }
  const RelationSet& relations() const { return relations_; }
  const Named& named_relations() const { return named_; }
  const freealg::GroebnerCertificate& certificate() const { return certificate_; }
  int outer_weight() const { return order_.weight(X2); }

  /// The term of ~g12 below X2X1 is gamma*T*X2; a commonly printed form
  /// has T*X3 there instead. Only visible when gamma != 0.
  bool g12_differs_from_printed_form() const { return !is_zero(params_.gamma); }

  std::string g12_discrepancy_note() const {
    return "~g12 computed from the homogenization definition is " +
           freealg::render(named_.g12, order_, homogenized_names()) +
           "; the printed form with gamma*T*X3 in place of gamma*T*X2 does not follow from it" +
           (g12_differs_from_printed_form() ? "" : " (gamma = 0 here, so both agree)");
  }

private:
  gdu::GDUParams params_;
  gdu::WeightScheme scheme_;
  WeightedOrder order_;
  Named named_;
  RelationSet relations_;
  freealg::GroebnerCertificate certificate_;
};

inline HomogenizedAlgebra homogenize_algebra(const gdu::GDUAlgebra& alg) { return HomogenizedAlgebra(alg); }

struct ReesRow {
  int degree;
  Integer homogenized;  // dim H(A)_q
  long filtered;        // dim F_q A
};

struct ReesCheck {
  bool holds = true;
  std::vector<ReesRow> rows;
  explicit operator bool() const { return holds; }
};

/// Compares dim H(A)_q with dim F_q A for q <= d.
inline ReesCheck rees_dims(const gdu::GDUAlgebra& alg, const HomogenizedAlgebra& H, int d) {
  if (d < 0)
    throw InputError("degree must be >= 0");
  HilbertData h = hilbert(leading_algebra(H.relations()), d);
  ReesCheck check;
  for (int q = 0; q <= d; ++q) {
    ReesRow row{q, h.coefficients[q], filtered_dimension(alg.outer_weight(), q)};
    check.holds = check.holds && row.homogenized == row.filtered;
    check.rows.push_back(row);
  }
  return check;
}

/// True iff every weight is 1 and every relation is homogeneous of degree 2.
inline bool quadratic_check(const RelationSet& rels) {
  const auto& order = rels.order();
  for (int w : order.weights())
    if (w != 1)
      return false;
  for (const auto& r : rels)
    if (!freealg::is_homogeneous(r, order) || freealg::degree(r, order) != 2)
      return false;
  return true;
}

/// Reads a commutation table off quadratic-leading relations X_j X_i - ...
/// whose lower terms are ordered PBW words. `bijection` lists the letter at
/// each PBW position, smallest first.
inline solvable::SolvableAlgebra commutation_table_from_relations(const RelationSet& rels,
                                                                  const gdu::PbwBijection& bijection,
                                                                  std::vector<std::string> names,
                                                                  solvable::PbwOrder order) {
  const auto& letters = bijection.letters();
  auto position = [&](Letter g) {
    for (std::size_t k = 0; k < letters.size(); ++k)
      if (letters[k] == g)
        return k;
    throw InputError("letter outside the PBW alphabet");
  };
  std::vector<solvable::CommutationRule> rules;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const Word& lm = rels.leading_word_of(r);
    if (lm.size() != 2)
      throw InputError("commutation relations need two-letter leading words");
    std::size_t j = position(lm[0]), i = position(lm[1]);
    if (i >= j)
      throw InputError("leading word is already ordered");
    Word swapped{lm[1], lm[0]};
    FreePoly rest = rels[r];
    rest.add_term(lm, -1);
    Scalar lambda = -rest.coefficient(swapped);
    rest.add_term(swapped, lambda);
    rules.push_back({j, i, lambda, bijection.to_pbw(rest) * Scalar(-1)});
  }
  return solvable::SolvableAlgebra(std::move(names), std::move(order), std::move(rules));
}

inline const std::vector<std::string>& homogenized_pbw_names() {
  static const std::vector<std::string> names{"T", "X2", "X1", "X3"};
  return names;
}

/// Positions (T, a2, a1, a3).
inline gdu::PbwBijection homogenized_bijection() { return gdu::PbwBijection({T, X2, X1, X3}); }

/// Solvable structure of H(A) on (T, a2, a1, a3), T central, ordered by
/// graded lex with weights (1, n, 1, n).
inline solvable::SolvableAlgebra solvable_homogenized(const HomogenizedAlgebra& H) {
  if (is_zero(H.params().lambda) || is_zero(H.params().omega))
    throw PreconditionError("the solvable structure needs lambda*omega != 0");
  const int n = H.params().degree_f();
  return commutation_table_from_relations(H.relations(), homogenized_bijection(), homogenized_pbw_names(),
                                          solvable::PbwOrder({1, n, 1, n}));
}

}  // namespace downup::graded
