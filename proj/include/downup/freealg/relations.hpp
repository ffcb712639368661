#pragma once

#include <algorithm>
#include <vector>

#include "downup/errors.hpp"
#include "downup/freealg/poly.hpp"

namespace downup::freealg {

/// A finite list of monic relations under a fixed ordering, kept sorted by
/// leading word (smallest first).
class RelationSet {
public:
  RelationSet() = default;

  RelationSet(WeightedOrder order, const std::vector<FreePoly>& relations)
      : order_(std::move(order)) {
    for (const auto& r : relations) {
      for (const auto& [w, c] : r)
        for (Letter g : w)
          if (g >= order_.generator_count())
            throw InputError("relation uses an unknown generator index " + std::to_string(int(g)));
      if (r.is_zero())
        throw InputError("zero relation");
      FreePoly monic = make_monic(r, order_);
      if (leading_word(monic, order_).empty())
        throw InputError("relation with constant leading term generates the unit ideal");
      relations_.push_back(std::move(monic));
    }
    std::stable_sort(relations_.begin(), relations_.end(), [&](const FreePoly& a, const FreePoly& b) {
      return order_.less(leading_word(a, order_), leading_word(b, order_));
    });
    for (const auto& r : relations_)
      leading_.push_back(leading_word(r, order_));
  }

  const WeightedOrder& order() const { return order_; }
  std::size_t size() const { return relations_.size(); }
  bool empty() const { return relations_.empty(); }
  const FreePoly& operator[](std::size_t i) const { return relations_[i]; }
  const std::vector<FreePoly>& relations() const { return relations_; }
  const Word& leading_word_of(std::size_t i) const { return leading_[i]; }
  const std::vector<Word>& leading_words() const { return leading_; }
  auto begin() const { return relations_.begin(); }
  auto end() const { return relations_.end(); }

  int max_degree() const {
    int d = 0;
    for (const auto& w : leading_)
      d = std::max(d, order_.degree(w));
    return d;
  }

  friend bool operator==(const RelationSet& a, const RelationSet& b) {
    return a.order_ == b.order_ && a.relations_ == b.relations_;
  }

private:
  WeightedOrder order_;
  std::vector<FreePoly> relations_;
  std::vector<Word> leading_;
};

}  // namespace downup::freealg
