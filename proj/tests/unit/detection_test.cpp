#include <gtest/gtest.h>

#include <algorithm>

#include "singcoh/detection.hpp"
#include "singcoh/error.hpp"

using namespace singcoh;

namespace {

std::vector<int> occupied(const GradedVectorSpace& s) { return s.degrees(); }

std::vector<MatrixKind> square_kinds(int max_m) {
  std::vector<MatrixKind> out;
  for (int m = 2; m <= max_m; ++m) {
    out.push_back(MatrixKind::general(m));
    out.push_back(MatrixKind::symmetric(m));
    if (m % 2 == 0) out.push_back(MatrixKind::skew_symmetric(m));
  }
  return out;
}

bool valid_ell(const MatrixKind& k, int ell) {
  return k.family() != Family::SkewSymmetric || ell % 2 == 0;
}

// Second-highest occupied degree of the exterior algebra: top minus the
// smallest generator degree (removing the lowest generator from the top class).
int second_highest(const GradedAlgebra& a) {
  const auto d = a.generator_degrees();
  return a.top_degree() - *std::min_element(d.begin(), d.end());
}

}  // namespace

TEST(Detection, SymmetricFourSizeThreeMilnor) {
  const auto z2 = detect_milnor(MatrixKind::symmetric(4), 3, Coefficients::ModTwo);
  EXPECT_EQ(z2.algebra.generator_degrees(), (std::vector<int>{2, 3}));
  EXPECT_EQ(occupied(z2.betti()), (std::vector<int>{0, 2, 3, 5}));
  const auto q = detect_milnor(MatrixKind::symmetric(4), 3, Coefficients::CharZeroField);
  EXPECT_EQ(q.algebra.generator_degrees(), (std::vector<int>{5}));
  EXPECT_EQ(occupied(q.betti()), (std::vector<int>{0, 5}));
  EXPECT_FALSE(q.notes.empty());
}

TEST(Detection, GeneralFiveSizeFourMilnor) {
  const auto r = detect_milnor(MatrixKind::general(5), 4, Coefficients::Integers);
  EXPECT_EQ(r.algebra.generator_degrees(), (std::vector<int>{3, 5, 7}));
  const auto b = r.betti();
  EXPECT_EQ(occupied(b), (std::vector<int>{0, 3, 5, 7, 8, 10, 12, 15}));
  for (int d : b.degrees()) EXPECT_EQ(b.rank(d), 1);
}

TEST(Detection, EvenSymmetricEulerClassIsNotGuaranteed) {
  const auto r = detect_milnor(MatrixKind::symmetric(6), 4, Coefficients::CharZeroField);
  EXPECT_EQ(r.algebra.generator_degrees(), (std::vector<int>{5}));
  ASSERT_EQ(r.generators.size(), 2u);
  EXPECT_EQ(r.generators[1].label.name, "e4");
  EXPECT_FALSE(r.generators[1].guaranteed);
  EXPECT_TRUE(r.generators[0].guaranteed);
}

TEST(Detection, GeneratorCounts) {
  for (int m = 3; m <= 9; ++m)
    for (int ell = 1; ell < m; ++ell) {
      EXPECT_EQ(detect_milnor(MatrixKind::general(m), ell, Coefficients::Integers)
                    .algebra.generators()
                    .size(),
                static_cast<std::size_t>(ell - 1));
      if (m % 2 == 0 && ell % 2 == 0)
        EXPECT_EQ(detect_milnor(MatrixKind::skew_symmetric(m), ell, Coefficients::Integers)
                      .algebra.generators()
                      .size(),
                  static_cast<std::size_t>(ell / 2 - 1));
    }
}

TEST(Detection, ComplementExamples) {
  EXPECT_EQ(detect_complement(MatrixKind::symmetric(4), 3, Coefficients::CharZeroField)
                .algebra.generator_degrees(),
            (std::vector<int>{1, 5}));
  EXPECT_EQ(detect_complement(MatrixKind::general(5), 4, Coefficients::Integers)
                .algebra.generator_degrees(),
            (std::vector<int>{1, 3, 5, 7}));
  EXPECT_EQ(detect_complement(MatrixKind::rectangular(5, 4), 2, Coefficients::Integers)
                .algebra.generator_degrees(),
            (std::vector<int>{3, 5}));
}

TEST(Detection, LinkExamples) {
  const auto s = detect_link(MatrixKind::symmetric(4), 9, 3);
  EXPECT_EQ(s.shift, 10);
  EXPECT_EQ(occupied(s.betti()), (std::vector<int>{10, 11, 15}));

  const auto g = detect_link(MatrixKind::general(5), 21, 4);
  EXPECT_EQ(g.shift, 24);
  const auto b = g.betti();
  for (int d = 24; d <= 39; ++d) {
    const std::int64_t expected = (d == 26 || d == 38) ? 0 : (d == 32 ? 2 : 1);
    EXPECT_EQ(b.rank(d), expected) << d;
  }
  EXPECT_EQ(b.max_degree(), 39);

  const auto r = detect_link(MatrixKind::rectangular(5, 4), 12, 2);
  EXPECT_EQ(r.shift, 14);
  EXPECT_EQ(occupied(r.betti()), (std::vector<int>{14, 17, 19}));
}

TEST(Detection, LinkShiftIsSourceSphereBookkeeping) {
  for (const auto& k : square_kinds(8))
    for (int ell = 1; ell < k.m(); ++ell) {
      if (!valid_ell(k, ell)) continue;
      const int n = 40;
      const auto r = detect_link(k, n, ell);
      EXPECT_EQ(*r.shift, 2 * n - 2 - r.algebra.top_degree()) << k.to_string() << " " << ell;
      if (!r.algebra.generators().empty())
        EXPECT_EQ(r.betti().max_degree(), *r.shift + second_highest(r.algebra));
    }
  for (int m = 3; m <= 8; ++m)
    for (int p = 2; p < m; ++p)
      for (int ell = 1; ell <= p; ++ell) {
        const auto k = MatrixKind::rectangular(m, p);
        const auto r = detect_link(k, 40, ell);
        EXPECT_EQ(*r.shift, 78 - r.algebra.top_degree());
      }
}

TEST(Detection, ComplementDetectionIsRestrictionImage) {
  for (const auto& k : square_kinds(8))
    for (int ell = 1; ell < k.m(); ++ell) {
      if (!valid_ell(k, ell)) continue;
      const auto detected = detect_complement(k, ell, Coefficients::CharZeroField).algebra;
      const auto image =
          restriction_image(k, ell, Coefficients::CharZeroField, SpaceSelector::Complement);
      EXPECT_EQ(detected.generators(), image.generators()) << k.to_string() << " " << ell;
    }
}

TEST(Detection, MilnorDetectionIsRestrictionImage) {
  for (const auto& k : square_kinds(8))
    for (int ell = 1; ell < k.m(); ++ell) {
      if (!valid_ell(k, ell)) continue;
      for (auto coeff : {Coefficients::ModTwo, Coefficients::CharZeroField}) {
        const auto detected = detect_milnor(k, ell, coeff).algebra;
        const auto image = restriction_image(k, ell, coeff, SpaceSelector::MilnorFiber);
        EXPECT_EQ(detected.generators(), image.generators()) << k.to_string() << " " << ell;
        EXPECT_FALSE(image.has_module_factor());
      }
    }
}

TEST(Detection, Monotonicity) {
  for (const auto& k : square_kinds(8)) {
    const int step = k.family() == Family::SkewSymmetric ? 2 : 1;
    for (int ell = step; ell + step < k.m(); ell += step) {
      const auto small = detect_complement(k, ell, Coefficients::CharZeroField).algebra;
      const auto big = detect_complement(k, ell + step, Coefficients::CharZeroField).algebra;
      for (const auto& g : small.generators()) EXPECT_TRUE(big.index_of(g.name)) << g.name;
    }
  }
}

TEST(Detection, Errors) {
  EXPECT_THROW(detect_milnor(MatrixKind::general(4), 4, Coefficients::Integers), Error);
  EXPECT_THROW(detect_milnor(MatrixKind::symmetric(4), 3, Coefficients::Integers), Error);
  EXPECT_THROW(detect_milnor(MatrixKind::skew_symmetric(6), 3, Coefficients::Integers), Error);
  EXPECT_THROW(detect_milnor(MatrixKind::rectangular(5, 4), 2, Coefficients::Integers), Error);
  EXPECT_THROW(detect_complement(MatrixKind::rectangular(5, 4), 5, Coefficients::Integers), Error);
  EXPECT_THROW(detect_link(MatrixKind::general(5), 21, 4, Coefficients::Integers), Error);
  EXPECT_THROW(detect_link(MatrixKind::general(5), 2, 4), Error);
}
