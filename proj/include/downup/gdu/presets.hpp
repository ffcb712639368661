#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "downup/gdu/algebra.hpp"

namespace downup::gdu {

struct PresetInfo {
  std::string name;
  std::string arguments;
  std::string summary;
};

inline const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> catalog{
      {"sl2", "", "enveloping algebra U(sl2): lambda=omega=1, gamma=2, f=-X1"},
      {"smith", "c0, c1, ...", "Smith's algebras with [X1,X3]=X3, [X1,X2]=-X2, [X3,X2]=f(X1)"},
      {"woronowicz", "zeta", "Woronowicz deformation: lambda=zeta^4, omega=zeta^2, gamma=-(1+zeta^2), f=-zeta*X1"},
      {"conformal", "b [, lambda, omega, gamma]", "Le Bruyn conformal sl2: f=b*X1^2+X1, defaults lambda=omega=gamma=1"},
      {"down_up", "alpha, beta, gamma", "down-up algebra A(alpha,beta,gamma): lambda+omega=alpha, lambda*omega=-beta, f=X1"},
  };
  return catalog;
}

namespace detail {

inline void expect_args(const std::string& name, const std::vector<Scalar>& args, std::size_t lo,
                        std::size_t hi) {
  if (args.size() < lo || args.size() > hi)
    throw InputError("preset " + name + " takes " +
                     (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                     " argument(s), got " + std::to_string(args.size()));
}

inline std::vector<Scalar> trim(std::vector<Scalar> coeffs) {
  while (coeffs.size() > 1 && is_zero(coeffs.back()))
    coeffs.pop_back();
  return coeffs;
}

}  // namespace detail

/// Parameter translation for a named family. The scheme defaults to
/// all-ones when deg f <= 2.
inline GDUParams preset_params(const std::string& name, const std::vector<Scalar>& args,
                               std::vector<std::string>* notes = nullptr) {
  auto note = [&](std::string s) {
    if (notes)
      notes->push_back(std::move(s));
  };
  GDUParams p;
  if (name == "sl2") {
    detail::expect_args(name, args, 0, 0);
    p = {1, 1, 2, {0, -1}};
  } else if (name == "smith") {
    detail::expect_args(name, args, 1, 64);
    std::vector<Scalar> f = detail::trim(args);
    for (auto& c : f)
      c = -c;
    p = {1, 1, 1, f};
    note("smith: X1X3-X3X1=X3, X1X2-X2X1=-X2, X3X2-X2X3=f(X1) rewritten as lambda=omega=1, gamma=1 "
         "with the sign of f reversed");
  } else if (name == "woronowicz") {
    detail::expect_args(name, args, 1, 1);
    const Scalar& z = args[0];
    if (is_zero(z))
      throw InputError("woronowicz needs zeta != 0");
    Scalar z2 = z * z;
    p = {z2 * z2, z2, -(1 + z2), {0, -z}};
    note("woronowicz: f = a*X1^2 + b*X1 + c read with a = c = 0, b = -zeta");
  } else if (name == "conformal") {
    detail::expect_args(name, args, 1, 4);
    Scalar b = args[0];
    Scalar lambda = args.size() > 1 ? args[1] : Scalar(1);
    Scalar omega = args.size() > 2 ? args[2] : Scalar(1);
    Scalar gamma = args.size() > 3 ? args[3] : Scalar(1);
    if (is_zero(lambda * gamma * omega * b))
      throw InputError("conformal needs lambda*gamma*omega*b != 0");
    p = {lambda, omega, gamma, {0, 1, b}};
  } else if (name == "down_up") {
    detail::expect_args(name, args, 3, 3);
    const Scalar &alpha = args[0], &beta = args[1];
    Scalar disc = alpha * alpha + 4 * beta;
    auto root = rational_sqrt(disc);
    if (!root)
      throw InputError("down_up: z^2 - alpha*z - beta has no rational roots; not supported over the rationals");
    p = {(alpha + *root) / 2, (alpha - *root) / 2, args[2], {0, 1}};
    note("down_up: lambda, omega are the roots of z^2 - alpha*z - beta, lambda the larger");
  } else {
    throw InputError("unknown preset '" + name + "'");
  }
  return p;
}

inline GDUAlgebra preset(const std::string& name, const std::vector<Scalar>& args,
                         std::optional<WeightScheme> scheme = std::nullopt) {
  std::vector<std::string> notes;
  GDUParams p = preset_params(name, args, &notes);
  std::string label = name;
  if (!args.empty()) {
    label += "(";
    for (std::size_t i = 0; i < args.size(); ++i)
      label += (i ? ", " : "") + downup::to_string(args[i]);
    label += ")";
  }
  return GDUAlgebra(p, scheme.value_or(default_scheme(p)), label, std::move(notes));
}

/// Small random rational in [-range, range] with denominator up to max_den.
inline Scalar random_scalar(std::mt19937_64& rng, int range = 5, int max_den = 4, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-range * max_den, range * max_den);
  std::uniform_int_distribution<int> den(1, max_den);
  for (;;) {
    Scalar s(num(rng), den(rng));
    s.canonicalize();
    if (!nonzero || !is_zero(s))
      return s;
  }
}

/// Random parameters with deg f = degree; lambda and omega nonzero.
inline GDUParams random_params(std::mt19937_64& rng, int degree) {
  GDUParams p;
  p.lambda = random_scalar(rng, 5, 4, true);
  p.omega = random_scalar(rng, 5, 4, true);
  p.gamma = random_scalar(rng);
  p.f_coeffs.clear();
  for (int i = 0; i <= degree; ++i)
    p.f_coeffs.push_back(random_scalar(rng, 5, 4, i == degree && degree >= 1));
  return p;
}

}  // namespace downup::gdu
