#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace downup;
using namespace downup::solvable;
using gdu::A1;
using gdu::A2;
using gdu::A3;

namespace {

Exponent ex(unsigned i, unsigned j, unsigned l) { return Exponent{i, j, l}; }
PbwPoly mono(unsigned i, unsigned j, unsigned l, const Scalar& c = 1) { return PbwPoly(ex(i, j, l), c); }

SolvableAlgebra sl2() { return gdu::to_solvable(gdu::preset("sl2", {})); }

std::vector<gdu::GDUAlgebra> sample_algebras() {
  std::vector<gdu::GDUAlgebra> out;
  out.push_back(gdu::preset("sl2", {}));
  out.push_back(gdu::preset("conformal", {Scalar(1)}));
  out.push_back(gdu::preset("woronowicz", {Scalar(2)}));
  out.push_back(gdu::preset("smith", {Scalar(1), Scalar(0), Scalar(-2), Scalar(3)}));
  std::mt19937_64 rng(41);
  out.emplace_back(gdu::random_params(rng, 2), gdu::WeightScheme::DegF);
  return out;
}

}  // namespace

TEST(PbwOrder, GradedLexFollowsGeneratorPositions) {
  PbwOrder order({1, 1, 1});
  EXPECT_TRUE(order.less(ex(1, 0, 0), ex(0, 1, 0)));
  EXPECT_TRUE(order.less(ex(0, 1, 0), ex(0, 0, 1)));
  EXPECT_TRUE(order.less(ex(0, 2, 0), ex(0, 1, 1)));
  EXPECT_TRUE(order.less(ex(0, 0, 1), ex(2, 0, 0)));
  PbwOrder weighted({2, 1, 2});
  EXPECT_FALSE(order.less(ex(0, 1, 0), ex(1, 0, 0)));
  EXPECT_TRUE(weighted.less(ex(0, 1, 0), ex(1, 0, 0)));
  EXPECT_TRUE(weighted.less(ex(0, 3, 0), ex(1, 0, 1)));
  EXPECT_THROW(PbwOrder({1, 0}), InputError);
}

TEST(PbwOrder, AgreesWithFreeAlgebraOrderOnNormalWords) {
  // Spelling exponents as X2^i X1^j X3^l must preserve the order.
  {
    auto alg = gdu::preset("conformal", {Scalar(2)}, gdu::WeightScheme::DegF);
    auto pbw = gdu::to_solvable(alg).order();
    auto bij = gdu::gdu_bijection();
    auto monos = oracle::exponents_up_to(pbw, 6);
    for (const auto& a : monos)
      for (const auto& b : monos)
        EXPECT_EQ(pbw.less(a, b), alg.order().less(bij.to_word(a), bij.to_word(b)));
  }
}

TEST(Multiply, Examples) {
  auto alg = sl2();
  const Scalar lambda(1), gamma(2);
  EXPECT_EQ(multiply(alg, mono(0, 0, 1), mono(0, 1, 0)), mono(0, 1, 1, lambda) - mono(0, 0, 1, gamma));
  EXPECT_EQ(multiply(alg, mono(0, 0, 1), mono(1, 0, 0)), mono(1, 0, 1) + mono(0, 1, 0));

  PbwPoly p = mono(2, 1, 0, Scalar(3, 4)) - mono(0, 0, 3);
  EXPECT_EQ(multiply(alg, PbwPoly::constant(3, 1), p), p);
  EXPECT_EQ(multiply(alg, p, PbwPoly::constant(3, 1)), p);
  EXPECT_TRUE(multiply(alg, p, PbwPoly()).is_zero());

  // Cross-check a3 a2 against the free-algebra normal form of X3 X2.
  auto gdu_alg = gdu::preset("sl2", {});
  auto nf = freealg::normal_form(freealg::FreePoly(freealg::Word{gdu::X3, gdu::X2}), gdu_alg.relations());
  EXPECT_EQ(gdu::gdu_bijection().to_pbw(nf), mono(1, 0, 1) + mono(0, 1, 0));
}

TEST(Multiply, GeneralParameterSwap) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = gdu::random_params(rng, 1 + trial % 3);
    auto alg = gdu::to_solvable(gdu::GDUAlgebra(p, gdu::WeightScheme::DegF));
    EXPECT_EQ(multiply(alg, mono(0, 0, 1), mono(0, 1, 0)), mono(0, 1, 1, p.lambda) - mono(0, 0, 1, p.gamma));
    EXPECT_EQ(multiply(alg, mono(0, 1, 0), mono(1, 0, 0)), mono(1, 1, 0, p.lambda) - mono(1, 0, 0, p.gamma));
  }
}

TEST(Multiply, Associative) {
  std::mt19937_64 rng(47);
  for (const auto& gdu_alg : sample_algebras()) {
    auto alg = gdu::to_solvable(gdu_alg);
    Multiplier mul(alg);
    const int n = gdu_alg.degree_f();
    for (int trial = 0; trial < 40; ++trial) {
      PbwPoly p = oracle::random_pbw(rng, alg.order(), 3 * n, 2);
      PbwPoly q = oracle::random_pbw(rng, alg.order(), 3 * n, 2);
      PbwPoly r = oracle::random_pbw(rng, alg.order(), 3 * n, 2);
      EXPECT_EQ(mul.times(mul.times(p, q), r), mul.times(p, mul.times(q, r))) << gdu_alg.label();
    }
  }
}

TEST(Multiply, LeadingMonomialIsExponentSum) {
  for (const auto& gdu_alg : sample_algebras()) {
    auto alg = gdu::to_solvable(gdu_alg);
    Multiplier mul(alg);
    auto monos = monomials_up_to(alg.order(), 6);
    for (const auto& u : monos)
      for (const auto& v : monos) {
        if (alg.order().degree(u) + alg.order().degree(v) > 6)
          continue;
        PbwPoly uv = mul.times(u, v);
        auto [lm, lc] = leading(uv, alg.order());
        EXPECT_EQ(lm, add(u, v));
        EXPECT_FALSE(is_zero(lc));
        // Lower terms have strictly smaller weighted degree.
        for (const auto& [e, c] : uv)
          if (e != lm)
            EXPECT_LT(alg.order().degree(e), alg.order().degree(lm));
      }
  }
}

TEST(Multiply, AgreesWithFreeAlgebraNormalForm) {
  std::mt19937_64 rng(53);
  const auto bij = gdu::gdu_bijection();
  for (const auto& gdu_alg : sample_algebras()) {
    auto alg = gdu::to_solvable(gdu_alg);
    Multiplier mul(alg);
    const int n = gdu_alg.degree_f();
    for (int trial = 0; trial < 200; ++trial) {
      PbwPoly p = oracle::random_pbw(rng, alg.order(), 2 * n + 1, 2);
      PbwPoly q = oracle::random_pbw(rng, alg.order(), 2 * n + 1, 2);
      auto concat = bij.to_free(p) * bij.to_free(q);
      EXPECT_EQ(mul.times(p, q), bij.to_pbw(freealg::normal_form(concat, gdu_alg.relations())));
    }
  }
}

TEST(VerifySolvable, Examples) {
  EXPECT_TRUE(verify_solvable(sl2()));
  auto conformal = gdu::to_solvable(gdu::preset("conformal", {Scalar(1)}));
  EXPECT_EQ(conformal.order().weights(), (std::vector<int>{2, 1, 2}));
  EXPECT_TRUE(verify_solvable(conformal));

  auto lambda_zero = gdu::commutation_table(gdu::build({0, 1, 1, {0, 1}}, gdu::WeightScheme::DegF));
  auto check = verify_solvable(lambda_zero);
  EXPECT_FALSE(check);
  ASSERT_FALSE(check.diagnostics.empty());
  EXPECT_NE(check.diagnostics.front().find("X1*X2"), std::string::npos);

  PbwOrder order({1, 1});
  SolvableAlgebra self_lower({"a", "b"}, order, {{1, 0, 1, PbwPoly(Exponent{1, 1})}});
  EXPECT_FALSE(verify_solvable(self_lower));
  SolvableAlgebra missing({"a", "b"}, order, {});
  EXPECT_FALSE(verify_solvable(missing));
}

TEST(VerifyOrderingAxioms, GduOrderHolds) {
  for (const auto& gdu_alg : sample_algebras()) {
    auto alg = gdu::to_solvable(gdu_alg);
    auto check = verify_ordering_axioms(alg, 4);
    EXPECT_TRUE(check) << gdu_alg.label();
    EXPECT_GT(check.instances, 0u);
  }
  EXPECT_THROW(verify_ordering_axioms(sl2(), 1), InputError);
}

TEST(VerifyOrderingAxioms, ConditionTwoInstance) {
  // a1 < a1 a3 = LM(a1 * a3 * 1).
  auto alg = gdu::to_solvable(gdu::preset("conformal", {Scalar(1)}));
  Multiplier mul(alg);
  auto [lm, lc] = leading(mul.times(ex(0, 1, 0), ex(0, 0, 1)), alg.order());
  EXPECT_EQ(lm, ex(0, 1, 1));
  EXPECT_TRUE(alg.order().less(ex(0, 1, 0), lm));
}

TEST(VerifyOrderingAxioms, PureLexFailsWithWitness) {
  auto alg = sl2();
  PbwOrder lex({1, 1, 1}, PbwOrderKind::Lex);
  auto check = verify_ordering_axioms(alg, lex, 3);
  EXPECT_FALSE(check);
  ASSERT_TRUE(check.violation);
  const auto& v = *check.violation;
  EXPECT_NE(v.describe(alg.names()).find("condition"), std::string::npos);
  if (v.condition == 2) {
    Multiplier mul(alg);
    auto lm = leading(mul.times(mul.times(PbwPoly(v.alpha), PbwPoly(v.beta)), PbwPoly(v.eta)), lex).first;
    EXPECT_EQ(lm, v.gamma);
    EXPECT_FALSE(lex.less(v.beta, v.gamma));
  }
}

TEST(NfLeft, Examples) {
  auto alg = sl2();
  PbwPoly a1 = PbwPoly::generator(3, A1);
  PbwPoly g = mono(1, 1, 0) - mono(0, 0, 2, 3);
  EXPECT_TRUE(nf_left(alg, g, {g}).is_zero());
  EXPECT_EQ(nf_left(alg, PbwPoly::constant(3, 1), {a1}), PbwPoly::constant(3, 1));
}

TEST(LeftBuchberger, TrivialInputs) {
  auto alg = sl2();
  EXPECT_TRUE(left_buchberger(alg, {}).empty());
  auto unit = left_buchberger(alg, {PbwPoly::constant(3, 5)});
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0], PbwPoly::constant(3, 1));
  std::mt19937_64 rng(59);
  for (int k = 0; k < 20; ++k)
    EXPECT_TRUE(nf_left(alg, oracle::random_pbw(rng, alg.order(), 4, 3), unit).is_zero());
}

TEST(LeftBuchberger, IdealOfA1InSl2) {
  auto alg = sl2();
  PbwPoly a1 = PbwPoly::generator(3, A1);
  auto basis = left_buchberger(alg, {a1});
  auto span = oracle::left_ideal_span(alg, {a1}, 6);
  // a3 a1 = a1 a3 - 2 a3 is not a left multiple of a1; a1 a3 is.
  PbwPoly a3a1 = multiply(alg, PbwPoly::generator(3, A3), a1);
  EXPECT_EQ(a3a1, mono(0, 1, 1) - mono(0, 0, 1, 2));
  EXPECT_TRUE(nf_left(alg, a3a1, basis).is_zero());
  EXPECT_TRUE(span.contains(oracle::to_vector(span, a3a1)));
  EXPECT_FALSE(nf_left(alg, mono(0, 1, 1), basis).is_zero());
  EXPECT_FALSE(span.contains(oracle::to_vector(span, mono(0, 1, 1))));
}

TEST(LeftBuchberger, MembershipAgreesWithLinearOracle) {
  std::mt19937_64 rng(61);
  auto algebras = sample_algebras();
  for (std::size_t a = 0; a < 3; ++a) {
    auto alg = gdu::to_solvable(algebras[a]);
    const int n = algebras[a].degree_f();
    std::vector<std::vector<PbwPoly>> generator_sets{
        {PbwPoly::generator(3, A2), PbwPoly::generator(3, A3)},
        {mono(0, 2, 0) - mono(1, 0, 0), mono(0, 0, 1) + mono(0, 1, 0, 3)},
    };
    for (const auto& gens : generator_sets) {
      auto basis = left_buchberger(alg, gens);
      const int D = 6 * n;
      auto span = oracle::left_ideal_span(alg, gens, D);
      int members = 0, non_members = 0;
      for (int q = 0; q < 50; ++q) {
        PbwPoly p = oracle::random_pbw(rng, alg.order(), 4, 3);
        if (q % 2 == 0) {
          // Build a guaranteed member plus a small perturbation half the time.
          p = multiply(alg, oracle::random_pbw(rng, alg.order(), 2, 2), gens[q % gens.size()]);
          if (q % 4 == 0)
            p += mono(0, static_cast<unsigned>(q % 3), 0);
        }
        bool by_nf = nf_left(alg, p, basis).is_zero();
        bool by_span = span.contains(oracle::to_vector(span, p));
        EXPECT_EQ(by_nf, by_span) << algebras[a].label();
        (by_nf ? members : non_members)++;
      }
      EXPECT_GT(members, 0);
    }
  }
}

TEST(LeftBuchberger, OutputIsReducedMonicAndSorted) {
  auto alg = gdu::to_solvable(gdu::preset("conformal", {Scalar(1)}));
  auto basis = left_buchberger(alg, {mono(0, 2, 0) - mono(1, 0, 0), mono(0, 0, 1) + mono(0, 1, 0, 3)});
  ASSERT_FALSE(basis.empty());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto [lm, lc] = leading(basis[k], alg.order());
    EXPECT_EQ(lc, 1);
    if (k > 0)
      EXPECT_TRUE(alg.order().less(leading(basis[k - 1], alg.order()).first, lm));
    for (std::size_t t = 0; t < basis.size(); ++t) {
      if (t == k)
        continue;
      const Exponent lt = leading(basis[t], alg.order()).first;
      for (const auto& [e, c] : basis[k])
        EXPECT_FALSE(divides(lt, e));
    }
  }
  // Every generator reduces to zero.
  EXPECT_TRUE(nf_left(alg, mono(0, 2, 0) - mono(1, 0, 0), basis).is_zero());
}
