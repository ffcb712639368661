#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "downup/errors.hpp"
#include "downup/freealg/word.hpp"

namespace downup::freealg {

/// Graded lexicographic ordering on words: weighted degree first, then
/// left-to-right comparison of letters by precedence rank.
class WeightedOrder {
public:
  WeightedOrder() = default;

  /// `precedence` lists generator indices from smallest to largest.
  WeightedOrder(std::vector<int> weights, std::vector<Letter> precedence)
      : weights_(std::move(weights)), rank_(weights_.size(), 0) {
    if (precedence.size() != weights_.size())
      throw InputError("precedence must be a permutation of the generators");
    std::vector<bool> seen(weights_.size(), false);
    for (std::size_t r = 0; r < precedence.size(); ++r) {
      Letter g = precedence[r];
      if (g >= weights_.size() || seen[g])
        throw InputError("precedence must be a permutation of the generators");
      seen[g] = true;
      rank_[g] = static_cast<int>(r);
    }
    for (int w : weights_)
      if (w < 1)
        throw InputError("generator weights must be positive");
    precedence_ = std::move(precedence);
  }

  /// Weights all 1, precedence by index.
  static WeightedOrder deglex(std::size_t generators) {
    std::vector<Letter> prec(generators);
    std::iota(prec.begin(), prec.end(), Letter{0});
    return WeightedOrder(std::vector<int>(generators, 1), prec);
  }

  std::size_t generator_count() const { return weights_.size(); }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<Letter>& precedence() const { return precedence_; }
  int weight(Letter g) const { return weights_[check(g)]; }
  int rank(Letter g) const { return rank_[check(g)]; }

  int degree(const Word& w) const {
    int d = 0;
    for (Letter g : w)
      d += weight(g);
    return d;
  }

  std::strong_ordering compare(const Word& u, const Word& v) const {
    if (auto c = degree(u) <=> degree(v); c != 0)
      return c;
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] != v[i])
        return rank_[u[i]] <=> rank_[v[i]];
    // Equal degree with a proper prefix cannot happen for positive weights.
    return u.size() <=> v.size();
  }

  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

  friend bool operator==(const WeightedOrder&, const WeightedOrder&) = default;

private:
  std::size_t check(Letter g) const {
    if (g >= weights_.size())
      throw InputError("unknown generator index " + std::to_string(int(g)));
    return g;
  }

  std::vector<int> weights_;
  std::vector<int> rank_;
  std::vector<Letter> precedence_;
};

inline std::strong_ordering compare_words(const WeightedOrder& order, const Word& u, const Word& v) {
  return order.compare(u, v);
}

/// Comparator placing the largest word first.
struct DescendingBy {
  const WeightedOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(b, a); }
};

}  // namespace downup::freealg
