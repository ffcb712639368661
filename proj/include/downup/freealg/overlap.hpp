#pragma once

#include <vector>

#include "downup/freealg/poly.hpp"

namespace downup::freealg {

enum class OverlapKind { Proper, Inclusion };

/// Composition of two relations at an ambiguous word.
struct SElement {
  OverlapKind kind;
  Word ambiguity;  // the word both sides rewrite
  Word left;       // p in  g*s - p*h  (proper)  or  g - p*h*s  (inclusion)
  Word right;      // s
  FreePoly element;
};

/// All compositions of g (on the left) with h:
///  - proper overlaps LM(g)*s = p*LM(h) with the shared part nonempty and
///    shorter than both words, giving g*s - p*h;
///  - inclusions LM(g) = p*LM(h)*s, giving g - p*h*s.
/// The trivial inclusion of a relation in itself is skipped.
inline std::vector<SElement> overlaps(const FreePoly& g_in, const FreePoly& h_in,
                                      const WeightedOrder& order) {
  if (g_in.is_zero() || h_in.is_zero())
    throw InputError("overlaps of a zero polynomial");
  const FreePoly g = make_monic(g_in, order);
  const FreePoly h = make_monic(h_in, order);
  const Word a = leading_word(g, order);
  const Word b = leading_word(h, order);
  std::vector<SElement> out;

  const std::size_t shortest = std::min(a.size(), b.size());
  for (std::size_t k = 1; k < shortest; ++k) {
    if (a.suffix(k) != b.prefix(k))
      continue;
    Word s = b.suffix(b.size() - k);
    Word p = a.prefix(a.size() - k);
    FreePoly e = g.sandwich(Word{}, s) - h.sandwich(p, Word{});
    out.push_back({OverlapKind::Proper, a * s, p, s, std::move(e)});
  }

  const bool same = g == h;
  for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
    if (!a.occurs_at(b, pos))
      continue;
    if (same && b.size() == a.size())
      continue;
    Word p = a.prefix(pos);
    Word s = a.suffix(a.size() - pos - b.size());
    FreePoly e = g - h.sandwich(p, s);
    out.push_back({OverlapKind::Inclusion, a, p, s, std::move(e)});
  }
  return out;
}

}  // namespace downup::freealg
