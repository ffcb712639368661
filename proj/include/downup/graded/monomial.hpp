#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "downup/freealg/order.hpp"
#include "downup/scalar.hpp"

namespace downup::graded {

using freealg::Letter;
using freealg::WeightedOrder;
using freealg::Word;

/// K<X> modulo a set of words. Obstructions are kept inter-reduced: none is
/// a subword of another.
class MonomialAlgebra {
public:
  MonomialAlgebra(WeightedOrder order, std::vector<Word> obstructions) : order_(std::move(order)) {
    std::sort(obstructions.begin(), obstructions.end());
    obstructions.erase(std::unique(obstructions.begin(), obstructions.end()), obstructions.end());
    for (const auto& w : obstructions) {
      if (w.empty())
        throw InputError("empty obstruction");
      for (Letter g : w)
        order_.weight(g);  // validates the index
      bool redundant = false;
      for (const auto& v : obstructions)
        if (v != w && w.contains(v))
          redundant = true;
      if (!redundant)
        obstructions_.push_back(w);
    }
  }

  const WeightedOrder& order() const { return order_; }
  const std::vector<Word>& obstructions() const { return obstructions_; }
  std::size_t generator_count() const { return order_.generator_count(); }

  std::size_t max_length() const {
    std::size_t L = 0;
    for (const auto& w : obstructions_)
      L = std::max(L, w.size());
    return L;
  }

  /// True when no obstruction ends at the last letter of w.
  bool suffix_free(const Word& w) const {
    for (const auto& ob : obstructions_)
      if (ob.size() <= w.size() && w.occurs_at(ob, w.size() - ob.size()))
        return false;
    return true;
  }

  bool is_normal(const Word& w) const {
    for (const auto& ob : obstructions_)
      if (w.contains(ob))
        return false;
    return true;
  }

private:
  WeightedOrder order_;
  std::vector<Word> obstructions_;
};

struct HilbertData {
  std::vector<Integer> coefficients;  // h_0 .. h_N
};

/// Directed graph on normal words of length L-1 (L the longest
/// obstruction). u -> v labelled y when u*y is normal and v is its
/// length-(L-1) suffix. With L <= 1 there is one vertex (the empty word)
/// and one loop per allowed letter.
struct UfnGraph {
  struct Edge {
    std::size_t target;
    Letter label;
  };
  std::vector<Word> vertices;
  std::vector<std::vector<Edge>> edges;
};

inline UfnGraph ufn_graph(const MonomialAlgebra& mono) {
  const std::size_t L = mono.max_length();
  const std::size_t len = L > 0 ? L - 1 : 0;
  const auto n = static_cast<Letter>(mono.generator_count());
  UfnGraph g;
  // All normal words of length `len`, built letter by letter.
  std::vector<Word> layer{Word{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter x = 0; x < n; ++x) {
        Word e = w * Word{x};
        if (mono.suffix_free(e))
          next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  g.vertices = layer;
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    index.emplace(g.vertices[i], i);
  g.edges.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (Letter x = 0; x < n; ++x) {
      Word e = g.vertices[i] * Word{x};
      if (!mono.suffix_free(e))
        continue;
      Word tail = e.suffix(len);
      g.edges[i].push_back({index.at(tail), x});
    }
  }
  return g;
}

/// h_q = number of normal words of weighted degree q, for q <= N. Counts
/// are propagated over states "last min(length, L-1) letters", which are
/// the Ufnarovski vertices plus the short prefixes leading into them.
inline HilbertData hilbert(const MonomialAlgebra& mono, int N) {
  if (N < 0)
    throw InputError("Hilbert series cap must be >= 0");
  const std::size_t L = mono.max_length();
  const std::size_t keep = L > 0 ? L - 1 : 0;
  const auto n = static_cast<Letter>(mono.generator_count());
  const WeightedOrder& order = mono.order();

  std::map<Word, std::size_t> state_index;
  std::vector<Word> states;
  std::vector<std::vector<std::pair<std::size_t, Letter>>> moves;
  auto intern = [&](const Word& w) {
    auto [it, inserted] = state_index.try_emplace(w, states.size());
    if (inserted) {
      states.push_back(w);
      moves.emplace_back();
    }
    return it->second;
  };
  intern(Word{});
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (Letter x = 0; x < n; ++x) {
      Word e = states[s] * Word{x};
      if (!mono.suffix_free(e))
        continue;
      Word tail = e.size() > keep ? e.suffix(keep) : e;
      std::size_t t = intern(tail);
      moves[s].emplace_back(t, x);
    }
  }

  const auto size = static_cast<std::size_t>(N) + 1;
  std::vector<std::vector<Integer>> count(size, std::vector<Integer>(states.size(), 0));
  count[0][0] = 1;
  HilbertData out;
  out.coefficients.assign(size, 0);
  for (std::size_t q = 0; q < size; ++q) {
    for (std::size_t s = 0; s < states.size(); ++s) {
      const Integer& c = count[q][s];
      if (c == 0)
        continue;
      out.coefficients[q] += c;
      for (auto [t, x] : moves[s]) {
        std::size_t nq = q + static_cast<std::size_t>(order.weight(x));
        if (nq < size)
          count[nq][t] += c;
      }
    }
  }
  return out;
}

struct Growth {
  bool exponential = false;
  int degree = 0;  // polynomial growth degree when not exponential

  friend bool operator==(const Growth&, const Growth&) = default;
};

inline std::string to_string(const Growth& g) {
  return g.exponential ? "exponential" : std::to_string(g.degree);
}

/// Growth of a monomial algebra from its Ufnarovski graph: exponential iff
/// some strongly connected component carries more than one cycle;
/// otherwise the degree is the largest number of cycles met along a path.
inline Growth ufn_growth(const MonomialAlgebra& mono) {
  const UfnGraph g = ufn_graph(mono);
  const std::size_t V = g.vertices.size();

  // Tarjan's SCC, iterative.
  std::vector<int> index(V, -1), low(V, 0), comp(V, -1);
  std::vector<bool> on_stack(V, false);
  std::vector<std::size_t> stack;
  int counter = 0, comps = 0;
  for (std::size_t root = 0; root < V; ++root) {
    if (index[root] >= 0)
      continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next_edge] = call.back();
      if (next_edge < g.edges[v].size()) {
        std::size_t w = g.edges[v][next_edge++].target;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
          if (w == v)
            break;
        }
        ++comps;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty())
        low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  std::vector<std::size_t> comp_vertices(comps, 0), comp_edges(comps, 0);
  for (std::size_t v = 0; v < V; ++v) {
    ++comp_vertices[comp[v]];
    for (const auto& e : g.edges[v])
      if (comp[e.target] == comp[v])
        ++comp_edges[comp[v]];
  }
  std::vector<int> cycles(comps, 0);
  for (int c = 0; c < comps; ++c) {
    if (comp_edges[c] > comp_vertices[c])
      return {true, 0};
    cycles[c] = comp_edges[c] > 0 ? 1 : 0;
  }

  // Tarjan numbers components in reverse topological order: every edge goes
  // from a higher component id to a lower-or-equal one.
  std::vector<int> best(comps, 0);
  std::vector<std::vector<int>> succ(comps);
  for (std::size_t v = 0; v < V; ++v)
    for (const auto& e : g.edges[v])
      if (comp[e.target] != comp[v])
        succ[comp[v]].push_back(comp[e.target]);
  int result = 0;
  for (int c = 0; c < comps; ++c) {
    int tail = 0;
    for (int s : succ[c])
      tail = std::max(tail, best[s]);
    best[c] = cycles[c] + tail;
    result = std::max(result, best[c]);
  }
  return {false, result};
}

}  // namespace downup::graded
