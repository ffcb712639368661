#pragma once

#include <map>
#include <optional>

#include "downup/freealg/relations.hpp"

namespace downup::freealg {

/// Where to rewrite inside the largest reducible term.
enum class RewritePosition {
  /// Leftmost occurrence of the largest applicable leading word.
  LeftmostLargest,
  /// Occurrence starting furthest to the right, any leading word.
  Rightmost,
};

namespace detail {

struct Occurrence {
  std::size_t relation;
  std::size_t position;
};

inline std::optional<Occurrence> find_reducer(const Word& w, const RelationSet& rels,
                                              RewritePosition where) {
  std::optional<Occurrence> best;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const Word& lm = rels.leading_word_of(i);
    if (lm.size() > w.size())
      continue;
    auto pos = where == RewritePosition::LeftmostLargest ? w.find(lm) : w.rfind(lm);
    if (!pos)
      continue;
    if (!best) {
      best = Occurrence{i, *pos};
      continue;
    }
    const Word& current = rels.leading_word_of(best->relation);
    if (where == RewritePosition::LeftmostLargest) {
      if (rels.order().less(current, lm))
        best = Occurrence{i, *pos};
    } else if (*pos > best->position ||
               (*pos == best->position && rels.order().less(current, lm))) {
      best = Occurrence{i, *pos};
    }
  }
  return best;
}

}  // namespace detail

/// Rewrites `poly` modulo `rels` until no term contains a leading word.
/// The largest reducible term is always rewritten first; each step replaces
/// it by strictly smaller words, so the loop terminates.
inline FreePoly normal_form(const FreePoly& poly, const RelationSet& rels,
                            RewritePosition where = RewritePosition::LeftmostLargest) {
  const WeightedOrder& order = rels.order();
  std::map<Word, Scalar, DescendingBy> work(poly.begin(), poly.end(), DescendingBy{&order});
  FreePoly result;
  while (!work.empty()) {
    auto top = work.begin();
    Word w = top->first;
    Scalar c = top->second;
    work.erase(top);
    auto hit = detail::find_reducer(w, rels, where);
    if (!hit) {
      result.add_term(w, c);
      continue;
    }
    const FreePoly& g = rels[hit->relation];
    const Word& lm = rels.leading_word_of(hit->relation);
    Word left = w.prefix(hit->position);
    Word right = w.subword(hit->position + lm.size(), w.size() - hit->position - lm.size());
    for (const auto& [gw, gc] : g) {
      if (gw == lm)
        continue;
      Word nw = left * gw * right;
      Scalar delta = -c * gc;
      auto [it, inserted] = work.try_emplace(std::move(nw), delta);
      if (!inserted) {
        it->second += delta;
        if (is_zero(it->second))
          work.erase(it);
      }
    }
  }
  return result;
}

inline bool is_normal_word(const Word& w, const RelationSet& rels) {
  for (const auto& lm : rels.leading_words())
    if (w.contains(lm))
      return false;
  return true;
}

}  // namespace downup::freealg
