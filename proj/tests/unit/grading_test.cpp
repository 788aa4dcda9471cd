#include <gtest/gtest.h>

#include "singcoh/error.hpp"
#include "singcoh/grading.hpp"

using namespace singcoh;

namespace {

std::map<int, std::int64_t> ranks(const GradedVectorSpace& s) { return s.ranks(); }

// Independent oracle: count subsets of the degree list by subset-sum.
std::map<int, std::int64_t> subset_sums(const std::vector<int>& degrees) {
  std::map<int, std::int64_t> out;
  const std::size_t g = degrees.size();
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    int d = 0;
    for (std::size_t i = 0; i < g; ++i)
      if (mask & (1u << i)) d += degrees[i];
    ++out[d];
  }
  return out;
}

}  // namespace

TEST(Grading, MonomialBasisOfThreeGenerators) {
  const auto alg = GradedAlgebra::exterior({3, 5, 7});
  const auto basis = monomial_basis(alg);
  std::vector<int> degrees;
  for (const auto& m : basis) degrees.push_back(m.degree);
  EXPECT_EQ(degrees, (std::vector<int>{0, 3, 5, 7, 8, 10, 12, 15}));
  EXPECT_EQ(basis.front().label(alg), "1");
  EXPECT_EQ(basis[4].label(alg), "e3*e5");
}

TEST(Grading, EmptyAlgebraHasUnitOnly) {
  const GradedAlgebra alg(std::vector<GeneratorLabel>{});
  const auto basis = monomial_basis(alg);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].degree, 0);
  EXPECT_EQ(ranks(betti_table(alg)), (std::map<int, std::int64_t>{{0, 1}}));
}

TEST(Grading, ModuleFactorDoublesBasis) {
  const GradedAlgebra alg({{"e5", 5}}, GeneratorLabel{"e4", 4});
  std::vector<int> degrees;
  for (const auto& m : monomial_basis(alg)) degrees.push_back(m.degree);
  EXPECT_EQ(degrees, (std::vector<int>{0, 4, 5, 9}));
  EXPECT_EQ(alg.total_rank(), 4);
  EXPECT_EQ(alg.to_string(), "Lambda<e5>{1,e4}");
}

TEST(Grading, BettiTableMatchesSubsetSums) {
  for (const auto& degrees : std::vector<std::vector<int>>{
           {1, 3, 5, 7}, {1, 5}, {3, 5, 7, 9}, {2, 3, 4, 5, 6}, {1, 5, 9, 13}}) {
    EXPECT_EQ(ranks(betti_table(GradedAlgebra::exterior(degrees))), subset_sums(degrees));
  }
}

TEST(Grading, BettiOfGeneralComplementFour) {
  const auto space = betti_table(GradedAlgebra::exterior({1, 3, 5, 7}));
  for (int d = 0; d <= 16; ++d) {
    const std::int64_t expected = (d == 2 || d == 14) ? 0 : (d == 8 ? 2 : 1);
    EXPECT_EQ(space.rank(d), expected) << "degree " << d;
  }
  EXPECT_EQ(space.total_rank(), 16);
}

TEST(Grading, TruncateTop) {
  const auto t = truncate_top(betti_table(GradedAlgebra::exterior({1, 5})));
  EXPECT_EQ(t.degrees(), (std::vector<int>{0, 1, 5}));
  EXPECT_TRUE(truncate_top(GradedVectorSpace(std::map<int, std::int64_t>{{0, 1}})).empty());
  const auto t4 = truncate_top(betti_table(GradedAlgebra::exterior({1, 3, 5, 7})));
  EXPECT_EQ(t4.rank(16), 0);
  EXPECT_EQ(t4.rank(8), 2);
  EXPECT_THROW(truncate_top(GradedVectorSpace()), Error);
}

TEST(Grading, Shift) {
  const GradedVectorSpace s(std::map<int, std::int64_t>{{0, 1}, {1, 1}, {5, 1}});
  EXPECT_EQ(shift(s, 10).degrees(), (std::vector<int>{10, 11, 15}));
  EXPECT_EQ(shift(s, 0), s);
  const auto t = truncate_top(betti_table(GradedAlgebra::exterior({3, 5})));
  EXPECT_EQ(shift(t, 14).degrees(), (std::vector<int>{14, 17, 19}));
  EXPECT_THROW(shift(s, -1), Error);
}

TEST(Grading, PoincarePolynomial) {
  const auto p = poincare_polynomial(GradedAlgebra::exterior({5, 7}));
  EXPECT_EQ(p.to_string(), "1 + t^5 + t^7 + t^12");
  EXPECT_EQ(poincare_polynomial(GradedAlgebra::exterior({})), IntPoly::one());
  EXPECT_EQ(poincare_polynomial(GradedAlgebra::exterior({3, 5, 7})).evaluate(1), 8);
  const auto alg = GradedAlgebra::exterior({1, 5, 9, 13});
  EXPECT_EQ(poincare_polynomial(alg), poincare_polynomial(betti_table(alg)));
}

TEST(Grading, PoincareComplement) {
  const auto alg = GradedAlgebra::exterior({1, 5, 9});
  const auto basis = monomial_basis(alg);
  const Monomial e1{{0}, 1, false};
  const auto c = poincare_complement(e1, alg);
  EXPECT_EQ(c.label(alg), "e5*e9");
  EXPECT_EQ(poincare_complement(basis.front(), alg).label(alg), "e1*e5*e9");
  EXPECT_EQ(poincare_complement(basis.back(), alg).label(alg), "1");
  for (const auto& m : basis) {
    const auto comp = poincare_complement(m, alg);
    EXPECT_EQ(m.degree + comp.degree, alg.top_degree());
    EXPECT_EQ(poincare_complement(comp, alg).factors, m.factors);
  }
  const GradedAlgebra with_module({{"e5", 5}}, GeneratorLabel{"e4", 4});
  try {
    poincare_complement(e1, with_module);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unsupported);
  }
}

TEST(Grading, PresentationValidation) {
  EXPECT_THROW(GradedAlgebra({{"a", 3}, {"b", 3}}), Error);
  EXPECT_THROW(GradedAlgebra({{"a", 0}}), Error);
  EXPECT_THROW(GradedAlgebra({{"a", 3}, {"a", 5}}), Error);
  EXPECT_THROW(GradedAlgebra({{"a", 3}}, GeneratorLabel{"a", 4}), Error);
}
