#pragma once

#include <vector>

#include "downup/gdu/pbw.hpp"
#include "downup/graded/monomial.hpp"

namespace downup::graded {

using freealg::FreePoly;
using freealg::RelationSet;

/// Monomial algebra of the leading words of a relation set.
inline MonomialAlgebra leading_algebra(const RelationSet& rels) {
  return MonomialAlgebra(rels.order(), rels.leading_words());
}

/// dim F_q A = #{(i, j, l) : w (i + l) + j <= q}.
inline long filtered_dimension(int outer_weight, int q) {
  long total = 0;
  for (int k = 0; k <= q; ++k)
    total += gdu::exponent_triples_of_degree(outer_weight, k);
  return total;
}

struct GradedDimension {
  int degree;
  Integer graded;       // h_q of G(A)
  long filtered;   // dim F_q A - dim F_{q-1} A
};

struct AssocGraded {
  RelationSet relations;  // LH(G)
  freealg::GroebnerCertificate certificate;
  std::vector<GradedDimension> dimensions;
  bool dimensions_match = true;
};

/// Presentation of the associated graded algebra by the leading homogeneous
/// parts of the defining relations, certified as a homogeneous Groebner
/// basis, with its Hilbert function compared to the filtration jumps.
inline AssocGraded assoc_graded(const gdu::GDUAlgebra& alg, int max_degree = 10) {
  alg.require_nonconstant_f("the associated graded algebra");
  const auto& order = alg.order();
  std::vector<FreePoly> lh;
  for (const auto& g : alg.relations())
    lh.push_back(freealg::leading_homogeneous(g, order));
  AssocGraded out{RelationSet(order, lh), {}, {}, true};
  out.certificate = freealg::is_groebner(out.relations);
  HilbertData h = hilbert(leading_algebra(out.relations), max_degree);
  for (int q = 0; q <= max_degree; ++q) {
    long jump = filtered_dimension(alg.outer_weight(), q) -
                     (q > 0 ? filtered_dimension(alg.outer_weight(), q - 1) : 0);
    GradedDimension row{q, h.coefficients[q], jump};
    out.dimensions_match = out.dimensions_match && row.graded == row.filtered;
    out.dimensions.push_back(row);
  }
  return out;
}

}  // namespace downup::graded
