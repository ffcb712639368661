#pragma once

#include <functional>
#include <vector>

#include "downup/freealg/order.hpp"

namespace downup::freealg {

/// Depth-first enumeration of words of weighted degree <= max_degree that
/// contain none of `obstructions`. Only suffixes need checking when a letter
/// is appended, so the search never visits a reducible prefix.
inline void for_each_normal_word(const std::vector<Word>& obstructions, const WeightedOrder& order,
                                 int max_degree, const std::function<void(const Word&, int)>& visit) {
  std::vector<Letter> stack;
  std::function<void(int)> dfs = [&](int deg) {
    Word w(stack);
    visit(w, deg);
    for (Letter x = 0; x < order.generator_count(); ++x) {
      int nd = deg + order.weight(x);
      if (nd > max_degree)
        continue;
      stack.push_back(x);
      Word ext(stack);
      bool ok = true;
      for (const auto& ob : obstructions) {
        if (ob.size() <= ext.size() && ext.occurs_at(ob, ext.size() - ob.size())) {
          ok = false;
          break;
        }
      }
      if (ok)
        dfs(nd);
      stack.pop_back();
    }
  };
  dfs(0);
}

/// counts[q] = number of obstruction-free words of weighted degree q.
inline std::vector<long> count_normal_words(const std::vector<Word>& obstructions,
                                                 const WeightedOrder& order, int max_degree) {
  std::vector<long> counts(static_cast<std::size_t>(max_degree) + 1, 0);
  for_each_normal_word(obstructions, order, max_degree,
                       [&](const Word&, int deg) { ++counts[static_cast<std::size_t>(deg)]; });
  return counts;
}

}  // namespace downup::freealg
