#pragma once

#include "downup/gdu/algebra.hpp"
#include "downup/solvable/algebra.hpp"

namespace downup::gdu {

/// PBW positions for the solvable structure: 0 = a2, 1 = a1, 2 = a3.
inline constexpr std::size_t A2 = 0;
inline constexpr std::size_t A1 = 1;
inline constexpr std::size_t A3 = 2;

inline const std::vector<std::string>& pbw_names() {
  static const std::vector<std::string> names{"X2", "X1", "X3"};
  return names;
}

/// f(a1) in PBW coordinates with `size` positions, a1 at `a1_pos`.
inline solvable::PbwPoly f_pbw(const GDUParams& p, std::size_t size, std::size_t a1_pos) {
  solvable::PbwPoly out;
  for (std::size_t i = 0; i < p.f_coeffs.size(); ++i) {
    solvable::Exponent e(size, 0);
    e[a1_pos] = static_cast<unsigned>(i);
    out.add_term(e, p.f_coeffs[i]);
  }
  return out;
}

/// Commutation table of A in generator order (a2, a1, a3):
///   a1 a2 = lambda a2 a1 - gamma a2
///   a3 a2 = omega  a2 a3 - f(a1)
///   a3 a1 = lambda a1 a3 - gamma a3
/// ordered by graded lex with weights (n, 1, n), n = deg f. These weights
/// are used for both schemes: with all-ones weights a1^2 would outrank a2 a3.
/// No lambda*omega gate; verify_solvable is what rejects degenerate tables.
inline solvable::SolvableAlgebra commutation_table(const GDUAlgebra& alg) {
  alg.require_nonconstant_f("the commutation table");
  const auto& p = alg.params();
  const int n = alg.degree_f();
  using solvable::PbwPoly;
  std::vector<solvable::CommutationRule> rules{
      {A1, A2, p.lambda, PbwPoly::generator(3, A2) * Scalar(-p.gamma)},
      {A3, A2, p.omega, f_pbw(p, 3, A1) * Scalar(-1)},
      {A3, A1, p.lambda, PbwPoly::generator(3, A3) * Scalar(-p.gamma)},
  };
  return solvable::SolvableAlgebra(pbw_names(), solvable::PbwOrder({n, 1, n}), std::move(rules));
}

inline solvable::SolvableAlgebra to_solvable(const GDUAlgebra& alg) {
  alg.require_nonconstant_f("the solvable structure");
  if (!alg.lambda_omega_nonzero())
    throw PreconditionError("the solvable structure needs lambda*omega != 0");
  return commutation_table(alg);
}

}  // namespace downup::gdu
