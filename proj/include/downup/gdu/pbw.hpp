#pragma once

#include <vector>

#include "downup/freealg/normal_words.hpp"
#include "downup/gdu/algebra.hpp"
#include "downup/solvable/pbw.hpp"

namespace downup::gdu {

/// Maps PBW exponent positions to free-algebra letters, e.g. (X2, X1, X3)
/// so that a_2^i a_1^j a_3^l <-> X2^i X1^j X3^l.
class PbwBijection {
public:
  explicit PbwBijection(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word to_word(const solvable::Exponent& e) const {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < e.size(); ++i)
      out.insert(out.end(), e[i], letters_[i]);
    return Word(std::move(out));
  }

  /// Inverse on ordered words; InputError if the word is not of the form
  /// L0^e0 L1^e1 ... .
  solvable::Exponent to_exponent(const Word& w) const {
    solvable::Exponent e(letters_.size(), 0);
    std::size_t pos = 0;
    for (Letter g : w) {
      while (pos < letters_.size() && letters_[pos] != g)
        ++pos;
      if (pos == letters_.size())
        throw InputError("word is not an ordered PBW monomial");
      ++e[pos];
    }
    return e;
  }

  FreePoly to_free(const solvable::PbwPoly& p) const {
    FreePoly out;
    for (const auto& [e, c] : p)
      out.add_term(to_word(e), c);
    return out;
  }

  solvable::PbwPoly to_pbw(const FreePoly& p) const {
    solvable::PbwPoly out;
    for (const auto& [w, c] : p)
      out.add_term(to_exponent(w), c);
    return out;
  }

private:
  std::vector<Letter> letters_;
};

/// Positions (a_2, a_1, a_3).
inline PbwBijection gdu_bijection() { return PbwBijection({X2, X1, X3}); }

struct PbwCount {
  int degree;
  long normal_words;
  long exponent_triples;
};

struct PbwCheck {
  bool holds = true;
  std::vector<PbwCount> rows;
  explicit operator bool() const { return holds; }
};

/// #{(i, j, l) : w (i + l) + j = q} with w the weight of X2 and X3.
inline long exponent_triples_of_degree(int outer_weight, int q) {
  long count = 0;
  for (int il = 0; il * outer_weight <= q; ++il)
    count += il + 1;  // j is determined, (i, l) splits il in il+1 ways
  return count;
}

/// Compares per-degree counts of normal words with counts of PBW exponent
/// triples up to weighted degree d.
inline PbwCheck check_pbw(const GDUAlgebra& alg, int d) {
  if (d < 0)
    throw InputError("degree must be >= 0");
  auto counts = freealg::count_normal_words(alg.relations().leading_words(), alg.order(), d);
  PbwCheck check;
  for (int q = 0; q <= d; ++q) {
    PbwCount row{q, counts[static_cast<std::size_t>(q)], exponent_triples_of_degree(alg.outer_weight(), q)};
    check.holds = check.holds && row.normal_words == row.exponent_triples;
    check.rows.push_back(row);
  }
  return check;
}

}  // namespace downup::gdu
