#pragma once

#include <string>
#include <vector>

#include "downup/errors.hpp"
#include "downup/scalar.hpp"

namespace downup::gdu {

/// Parameters of L(f, lambda, omega, gamma). f_coeffs[i] is the coefficient
/// of X1^i, constant first.
struct GDUParams {
  Scalar lambda;
  Scalar omega;
  Scalar gamma;
  std::vector<Scalar> f_coeffs{Scalar(0)};

  int degree_f() const { return static_cast<int>(f_coeffs.size()) - 1; }

  void validate() const {
    if (f_coeffs.empty())
      throw InputError("f needs at least one coefficient");
    if (degree_f() >= 1 && is_zero(f_coeffs.back()))
      throw InputError("leading coefficient of f must be nonzero");
  }

  friend bool operator==(const GDUParams&, const GDUParams&) = default;
};

enum class WeightScheme {
  AllOnes,  // deg X1 = deg X2 = deg X3 = 1, needs deg f <= 2
  DegF,     // deg X1 = 1, deg X2 = deg X3 = deg f, needs deg f >= 1
};

inline std::string to_string(WeightScheme s) {
  return s == WeightScheme::AllOnes ? "all-ones" : "deg-f";
}

inline WeightScheme parse_scheme(const std::string& s) {
  if (s == "all-ones")
    return WeightScheme::AllOnes;
  if (s == "deg-f")
    return WeightScheme::DegF;
  throw InputError("unknown weight scheme '" + s + "' (expected all-ones or deg-f)");
}

/// Weight scheme used when none is given: all-ones whenever it applies.
inline WeightScheme default_scheme(const GDUParams& p) {
  return p.degree_f() <= 2 ? WeightScheme::AllOnes : WeightScheme::DegF;
}

}  // namespace downup::gdu
