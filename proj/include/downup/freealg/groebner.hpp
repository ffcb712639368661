#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "downup/freealg/overlap.hpp"
#include "downup/freealg/reduce.hpp"

namespace downup::freealg {

struct GroebnerWitness {
  std::size_t first;   // index of g in the relation set
  std::size_t second;  // index of h
  SElement composition;
  FreePoly remainder;  // nonzero normal form of the composition
};

struct GroebnerCertificate {
  bool holds = true;
  std::size_t compositions_checked = 0;
  std::optional<GroebnerWitness> witness;

  explicit operator bool() const { return holds; }
};

/// Checks that every composition of every ordered pair (self-pairs
/// included) reduces to zero. Stops at the first failure.
inline GroebnerCertificate is_groebner(const RelationSet& rels) {
  GroebnerCertificate cert;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (std::size_t j = 0; j < rels.size(); ++j) {
      for (auto& s : overlaps(rels[i], rels[j], rels.order())) {
        ++cert.compositions_checked;
        FreePoly r = normal_form(s.element, rels);
        if (!r.is_zero()) {
          cert.holds = false;
          cert.witness = GroebnerWitness{i, j, std::move(s), std::move(r)};
          return cert;
        }
      }
    }
  }
  return cert;
}

enum class CompletionStatus {
  Complete,            // no composition fails to reduce
  CompleteUpToBound,   // some remainder exceeded the degree bound
};

struct Completion {
  RelationSet relations;
  CompletionStatus status;
  std::size_t added = 0;
};

/// Bounded completion: adds nonzero composition remainders of weighted
/// degree <= degree_bound until none remain. Every added relation has a
/// new leading word of degree <= degree_bound, so this terminates.
inline Completion complete(const RelationSet& rels, int degree_bound) {
  if (degree_bound < rels.max_degree())
    throw InputError("degree bound below the largest relation degree");
  const WeightedOrder& order = rels.order();
  std::vector<FreePoly> basis = rels.relations();

  struct Pending {
    int degree;
    std::size_t serial;
    FreePoly element;
  };
  auto later = [](const Pending& x, const Pending& y) {
    return x.degree != y.degree ? x.degree > y.degree : x.serial > y.serial;
  };
  std::priority_queue<Pending, std::vector<Pending>, decltype(later)> queue(later);
  std::size_t serial = 0;
  auto enqueue_pairs = [&](std::size_t fresh) {
    for (std::size_t k = 0; k <= fresh; ++k) {
      for (auto [i, j] : {std::pair{fresh, k}, std::pair{k, fresh}}) {
        for (auto& s : overlaps(basis[i], basis[j], order))
          queue.push({order.degree(s.ambiguity), serial++, std::move(s.element)});
        if (i == j)
          break;
      }
    }
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    enqueue_pairs(i);

  std::size_t added = 0;
  RelationSet current(order, basis);
  while (!queue.empty()) {
    Pending item = queue.top();
    queue.pop();
    FreePoly r = normal_form(item.element, current);
    if (r.is_zero() || degree(r, order) > degree_bound)
      continue;
    basis.push_back(make_monic(r, order));
    ++added;
    current = RelationSet(order, basis);
    enqueue_pairs(basis.size() - 1);
  }

  RelationSet out(order, basis);
  auto status = is_groebner(out) ? CompletionStatus::Complete : CompletionStatus::CompleteUpToBound;
  return {std::move(out), status, added};
}

}  // namespace downup::freealg
