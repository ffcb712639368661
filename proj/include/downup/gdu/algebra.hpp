#pragma once

#include <string>
#include <vector>

#include "downup/freealg/groebner.hpp"
#include "downup/gdu/params.hpp"

namespace downup::gdu {

using freealg::FreePoly;
using freealg::Letter;
using freealg::RelationSet;
using freealg::WeightedOrder;
using freealg::Word;

// Free-algebra letters. T only appears in homogenized algebras.
inline constexpr Letter X1 = 0;
inline constexpr Letter X2 = 1;
inline constexpr Letter X3 = 2;
inline constexpr Letter T = 3;

inline const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"X1", "X2", "X3"};
  return names;
}

inline FreePoly x(Letter g) { return FreePoly::generator(g); }

/// f(X1) = sum a_i X1^i as a free polynomial.
inline FreePoly f_poly(const GDUParams& p) {
  FreePoly out;
  for (std::size_t i = 0; i < p.f_coeffs.size(); ++i)
    out.add_term(Word::power(X1, i), p.f_coeffs[i]);
  return out;
}

/// Weights of (X1, X2, X3) under a scheme.
inline std::vector<int> scheme_weights(WeightScheme scheme, int n) {
  if (scheme == WeightScheme::AllOnes)
    return {1, 1, 1};
  return {1, n, n};
}

/// Graded lex with X2 < X1 < X3.
inline WeightedOrder gdu_order(WeightScheme scheme, int n) {
  return WeightedOrder(scheme_weights(scheme, n), {X2, X1, X3});
}

struct DefiningRelations {
  FreePoly g31;  // X3X1 - lambda X1X3 + gamma X3
  FreePoly g12;  // X1X2 - lambda X2X1 + gamma X2
  FreePoly g32;  // X3X2 - omega X2X3 + f(X1)
};

inline DefiningRelations defining_relations(const GDUParams& p) {
  return {
      x(X3) * x(X1) - p.lambda * (x(X1) * x(X3)) + p.gamma * x(X3),
      x(X1) * x(X2) - p.lambda * (x(X2) * x(X1)) + p.gamma * x(X2),
      x(X3) * x(X2) - p.omega * (x(X2) * x(X3)) + f_poly(p),
  };
}

/// A generalized down-up algebra, certified to have its defining relations
/// form a Groebner basis.
class GDUAlgebra {
public:
  GDUAlgebra(GDUParams params, WeightScheme scheme, std::string label = {},
             std::vector<std::string> notes = {})
      : params_(std::move(params)), scheme_(scheme), label_(std::move(label)), notes_(std::move(notes)) {
    params_.validate();
    const int n = params_.degree_f();
    if (scheme_ == WeightScheme::AllOnes && n > 2)
      throw InputError("all-ones weights need deg f <= 2 (got " + std::to_string(n) + ")");
    if (scheme_ == WeightScheme::DegF && n < 1)
      throw InputError("deg-f weights need deg f >= 1");
    named_ = defining_relations(params_);
    order_ = gdu_order(scheme_, n);
    relations_ = RelationSet(order_, {named_.g31, named_.g12, named_.g32});
    certificate_ = freealg::is_groebner(relations_);
    if (!certificate_)
      throw InternalError("defining relations failed the Groebner check: remainder " +
                          freealg::render(certificate_.witness->remainder, order_, generator_names()));
  }

  const GDUParams& params() const { return params_; }
  WeightScheme scheme() const { return scheme_; }
  int degree_f() const { return params_.degree_f(); }
  /// Weight of X2 and X3 under the scheme.
  int outer_weight() const { return order_.weight(X2); }
  const WeightedOrder& order() const { return order_; }
  const RelationSet& relations() const { return relations_; }
  const DefiningRelations& named_relations() const { return named_; }
  const freealg::GroebnerCertificate& certificate() const { return certificate_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& notes() const { return notes_; }

  bool lambda_omega_nonzero() const { return !is_zero(params_.lambda) && !is_zero(params_.omega); }

  /// Solvable and graded constructions need deg f >= 1.
  void require_nonconstant_f(const char* what) const {
    if (degree_f() < 1)
      throw PreconditionError(std::string(what) + " needs deg f >= 1");
  }

private:
  GDUParams params_;
  WeightScheme scheme_;
  std::string label_;
  std::vector<std::string> notes_;
  DefiningRelations named_;
  WeightedOrder order_;
  RelationSet relations_;
  freealg::GroebnerCertificate certificate_;
};

inline GDUAlgebra build(const GDUParams& params, WeightScheme scheme) {
  return GDUAlgebra(params, scheme);
}

}  // namespace downup::gdu
