#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "downup/solvable/pbw.hpp"

namespace downup::solvable {

/// a_j a_i = lambda * a_i a_j + lower, for generator positions i < j.
struct CommutationRule {
  std::size_t j = 0;
  std::size_t i = 0;
  Scalar lambda;
  PbwPoly lower;
};

/// An algebra given by a PBW basis in a fixed generator order, an ordering
/// on that basis, and one commutation rule per pair of generators.
class SolvableAlgebra {
public:
  SolvableAlgebra() = default;

  SolvableAlgebra(std::vector<std::string> names, PbwOrder order, std::vector<CommutationRule> rules)
      : names_(std::move(names)), order_(std::move(order)) {
    const std::size_t n = names_.size();
    if (order_.size() != n)
      throw InputError("ordering and generator list disagree in size");
    table_.assign(n * n, std::nullopt);
    for (auto& r : rules) {
      if (!(r.i < r.j && r.j < n))
        throw InputError("commutation rule needs positions i < j < n");
      for (const auto& [e, c] : r.lower)
        if (e.size() != n)
          throw InputError("commutation rule uses a malformed exponent");
      if (table_[r.j * n + r.i])
        throw InputError("duplicate commutation rule");
      table_[r.j * n + r.i] = std::move(r);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const PbwOrder& order() const { return order_; }

  /// Rule for a_j a_i (i < j), if present.
  const CommutationRule* rule(std::size_t j, std::size_t i) const {
    const auto& r = table_[j * size() + i];
    return r ? &*r : nullptr;
  }

  std::vector<CommutationRule> rules() const {
    std::vector<CommutationRule> out;
    for (const auto& r : table_)
      if (r)
        out.push_back(*r);
    return out;
  }

  /// Same algebra, different ordering on the basis.
  SolvableAlgebra with_order(PbwOrder order) const {
    return SolvableAlgebra(names_, std::move(order), rules());
  }

private:
  std::vector<std::string> names_;
  PbwOrder order_;
  std::vector<std::optional<CommutationRule>> table_;
};

/// Product engine with a memo table for (monomial, generator) products.
/// The cache is private to one instance; create one per computation.
class Multiplier {
public:
  explicit Multiplier(const SolvableAlgebra& alg) : alg_(alg) {}

  PbwPoly times_generator(const Exponent& u, std::size_t k) {
    auto key = std::make_pair(u, k);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    if (++depth_ > kMaxDepth)
      throw InternalError("commutation rules do not terminate");
    const std::size_t n = alg_.size();
    std::size_t j = n;
    for (std::size_t t = n; t-- > k + 1;)
      if (u[t] > 0) {
        j = t;
        break;
      }
    PbwPoly out;
    if (j == n) {
      Exponent e(u);
      ++e[k];
      out.add_term(e, 1);
    } else {
      const CommutationRule* rule = alg_.rule(j, k);
      if (!rule)
        throw InputError("missing commutation rule for " + alg_.names()[j] + "*" + alg_.names()[k]);
      Exponent rest(u);
      --rest[j];
      // u * a_k = rest * (a_j a_k) = lambda (rest * a_k) * a_j + rest * lower
      PbwPoly moved = times_generator(rest, k);
      out = times_generator(moved, j) * rule->lambda;
      out += times(rest, rule->lower);
    }
    --depth_;
    memo_.emplace(std::move(key), out);
    return out;
  }

  PbwPoly times_generator(const PbwPoly& p, std::size_t k) {
    PbwPoly out;
    for (const auto& [e, c] : p)
      out += times_generator(e, k) * c;
    return out;
  }

  PbwPoly times(const Exponent& u, const Exponent& v) {
    PbwPoly acc(u);
    for (std::size_t k : spell(v))
      acc = times_generator(acc, k);
    return acc;
  }

  PbwPoly times(const Exponent& u, const PbwPoly& q) {
    PbwPoly out;
    for (const auto& [v, d] : q)
      out += times(u, v) * d;
    return out;
  }

  PbwPoly times(const PbwPoly& p, const PbwPoly& q) {
    PbwPoly out;
    for (const auto& [u, c] : p)
      for (const auto& [v, d] : q)
        out += times(u, v) * (c * d);
    return out;
  }

private:
  static constexpr int kMaxDepth = 100000;
  const SolvableAlgebra& alg_;
  std::map<std::pair<Exponent, std::size_t>, PbwPoly> memo_;
  int depth_ = 0;
};

inline PbwPoly multiply(const SolvableAlgebra& alg, const PbwPoly& p, const PbwPoly& q) {
  return Multiplier(alg).times(p, q);
}

struct SolvableCheck {
  bool holds = true;
  std::vector<std::string> diagnostics;
  explicit operator bool() const { return holds; }
};

/// Every pair i < j has a rule with lambda != 0 and LM(lower) < a_i a_j.
inline SolvableCheck verify_solvable(const SolvableAlgebra& alg) {
  SolvableCheck check;
  const auto& names = alg.names();
  const std::size_t n = alg.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      std::string pair = names[j] + "*" + names[i];
      const CommutationRule* r = alg.rule(j, i);
      if (!r) {
        check.holds = false;
        check.diagnostics.push_back(pair + ": no commutation rule");
        continue;
      }
      if (is_zero(r->lambda)) {
        check.holds = false;
        check.diagnostics.push_back(pair + ": coefficient of " + names[i] + "*" + names[j] +
                                    " is zero");
      }
      if (!r->lower.is_zero()) {
        Exponent target = add(unit_exponent(n, i), unit_exponent(n, j));
        Exponent lm = leading(r->lower, alg.order()).first;
        if (!alg.order().less(lm, target)) {
          check.holds = false;
          check.diagnostics.push_back(pair + ": lower part has leading monomial " +
                                      render_exponent(lm, names) + " not below " +
                                      render_exponent(target, names));
        }
      }
    }
  }
  return check;
}

/// One failed instance of the monomial-ordering conditions. For condition 1
/// alpha/beta are the incomparable pair; for condition 2 beta should lie
/// below gamma = LM(alpha*beta*eta); for condition 3 alpha < beta but
/// lhs = LM(gamma*alpha*eta) is not below rhs = LM(gamma*beta*eta).
struct OrderingViolation {
  int condition = 0;
  Exponent alpha, beta, gamma, eta;
  Exponent lhs, rhs;

  std::string describe(std::span<const std::string> names) const {
    auto r = [&](const Exponent& e) { return render_exponent(e, names); };
    switch (condition) {
      case 1:
        return "condition 1: " + r(alpha) + " and " + r(beta) + " are not strictly comparable";
      case 2:
        return "condition 2: LM(" + r(alpha) + " * " + r(beta) + " * " + r(eta) + ") = " + r(gamma) +
               " but " + r(beta) + " is not below it";
      default:
        return "condition 3: " + r(alpha) + " < " + r(beta) + " but LM(" + r(gamma) + " * " +
               r(alpha) + " * " + r(eta) + ") = " + r(lhs) + " is not below LM(" + r(gamma) +
               " * " + r(beta) + " * " + r(eta) + ") = " + r(rhs);
    }
  }
};

struct OrderingCheck {
  bool holds = true;
  std::size_t instances = 0;
  std::optional<OrderingViolation> violation;
  std::vector<std::string> notes;
  explicit operator bool() const { return holds; }
};

/// All exponents of weighted degree <= bound under `order`.
inline std::vector<Exponent> monomials_up_to(const PbwOrder& order, int bound) {
  std::vector<Exponent> out;
  Exponent e(order.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int budget) -> void {
    if (pos == e.size()) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; static_cast<int>(k) * order.weights()[pos] <= budget; ++k) {
      e[pos] = k;
      self(self, pos + 1, budget - static_cast<int>(k) * order.weights()[pos]);
    }
    e[pos] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

/// Bounded exhaustive check of the three monomial-ordering conditions for
/// `order`, using the algebra's multiplication for the products. Products
/// are only formed when every factor has degree summing to <= bound.
inline OrderingCheck verify_ordering_axioms(const SolvableAlgebra& alg, const PbwOrder& order,
                                            int bound) {
  if (bound < 2)
    throw InputError("ordering check needs bound >= 2");
  OrderingCheck check;
  const std::vector<Exponent> monos = monomials_up_to(order, bound);
  const std::size_t m = monos.size();

  // (1) strict total order on the bounded set; ranks must form a permutation
  // consistent with every pairwise comparison.
  std::vector<std::size_t> rank(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && order.less(monos[b], monos[a]))
        ++rank[a];
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      ++check.instances;
      auto ab = order.compare(monos[a], monos[b]);
      auto ba = order.compare(monos[b], monos[a]);
      bool consistent = ab != 0 && (ab < 0) == (ba > 0) && (ab < 0) == (rank[a] < rank[b]);
      if (!consistent) {
        check.holds = false;
        check.violation = OrderingViolation{1, monos[a], monos[b], {}, {}, {}, {}};
        return check;
      }
    }
  }

  Multiplier mul(alg);
  std::map<std::tuple<Exponent, Exponent, Exponent>, std::optional<Exponent>> lm_cache;
  bool noted_degenerate = false;
  auto triple_lm = [&](const Exponent& x, const Exponent& y, const Exponent& z) -> std::optional<Exponent> {
    auto key = std::make_tuple(x, y, z);
    if (auto it = lm_cache.find(key); it != lm_cache.end())
      return it->second;
    PbwPoly prod = mul.times(mul.times(x, y), PbwPoly(z));
    std::optional<Exponent> lm;
    if (!prod.is_zero())
      lm = leading(prod, order).first;
    else if (!noted_degenerate) {
      noted_degenerate = true;
      check.notes.push_back("zero products met; degenerate branches skipped");
    }
    lm_cache.emplace(std::move(key), lm);
    return lm;
  };

  // (2) gamma = LM(alpha beta eta) != 1 and beta != gamma  =>  beta < gamma
  for (const auto& alpha : monos) {
    for (const auto& beta : monos) {
      for (const auto& eta : monos) {
        if (order.degree(alpha) + order.degree(beta) + order.degree(eta) > bound)
          continue;
        ++check.instances;
        auto gamma = triple_lm(alpha, beta, eta);
        if (!gamma || is_identity(*gamma) || *gamma == beta)
          continue;
        if (!order.less(beta, *gamma)) {
          check.holds = false;
          check.violation = OrderingViolation{2, alpha, beta, *gamma, eta, {}, {}};
          return check;
        }
      }
    }
  }

  // (3) alpha < beta  =>  LM(gamma alpha eta) < LM(gamma beta eta)
  for (const auto& gamma : monos) {
    for (const auto& eta : monos) {
      int outer = order.degree(gamma) + order.degree(eta);
      if (outer > bound)
        continue;
      for (const auto& alpha : monos) {
        if (outer + order.degree(alpha) > bound)
          continue;
        for (const auto& beta : monos) {
          if (outer + order.degree(beta) > bound || !order.less(alpha, beta))
            continue;
          ++check.instances;
          auto lhs = triple_lm(gamma, alpha, eta);
          auto rhs = triple_lm(gamma, beta, eta);
          if (!lhs || !rhs || is_identity(*rhs))
            continue;
          if (!order.less(*lhs, *rhs)) {
            check.holds = false;
            check.violation = OrderingViolation{3, alpha, beta, gamma, eta, *lhs, *rhs};
            return check;
          }
        }
      }
    }
  }
  return check;
}

inline OrderingCheck verify_ordering_axioms(const SolvableAlgebra& alg, int bound) {
  return verify_ordering_axioms(alg, alg.order(), bound);
}

}  // namespace downup::solvable
