#include "singcoh/normalform.hpp"

#include <gtest/gtest.h>

#include "singcoh/error.hpp"
#include "test_support.hpp"

using namespace singcoh;

namespace {

RationalMatrix rm(const std::vector<std::vector<std::string>>& g) {
  return RationalMatrix::from_strings(g);
}

}  // namespace

TEST(RationalMatrix, DeterminantAndInverse) {
  const auto a = rm({{"2", "1", "0"}, {"1/2", "3", "1"}, {"0", "-1", "4"}});
  EXPECT_EQ(determinant(a), Rational(2 * 13 - 1 * 2));  // cofactor expansion along row 1
  EXPECT_EQ(a * inverse(a), RationalMatrix::identity(3));
  EXPECT_THROW(inverse(rm({{"1", "2"}, {"2", "4"}})), Error);
}

TEST(RationalMatrix, ExactRankMatchesConstruction) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= n; ++r)
      EXPECT_EQ(exact_rank(testsupport::random_of_rank(rng, Family::General, n, r)), r);
  EXPECT_EQ(exact_rank(rm({{"1", "2", "3"}})), 1);
  EXPECT_EQ(exact_rank(rm({{"0", "0"}, {"0", "0"}})), 0);
}

TEST(NormalForm, GeneralDiagonalExample) {
  const auto cert = rank_normal_form(rm({{"2", "0"}, {"0", "0"}}), Family::General);
  EXPECT_EQ(cert.rank, 1);
  EXPECT_EQ(cert.b, rm({{"1", "0"}, {"0", "1/2"}}));
  ASSERT_TRUE(cert.c.has_value());
  EXPECT_EQ(*cert.c, rm({{"1/2", "0"}, {"0", "1"}}));
  EXPECT_EQ(determinant(cert.b), Rational(1, 2));
  EXPECT_EQ(*cert.c * cert.input * cert.b_inverse, rm({{"1", "0"}, {"0", "0"}}));
  EXPECT_TRUE(verify_certificate(cert).ok);
}

TEST(NormalForm, SymmetricAlreadyNormal) {
  const auto cert = rank_normal_form(rm({{"1", "0"}, {"0", "0"}}), Family::Symmetric);
  EXPECT_FALSE(cert.exact);
  EXPECT_EQ(cert.rank, 1);
  EXPECT_LT((cert.b_f - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(NormalForm, SkewElementaryExample) {
  RationalMatrix a(4, 4);
  a.at(0, 1) = 1;
  a.at(1, 0) = -1;
  const auto cert = rank_normal_form(a, Family::SkewSymmetric);
  EXPECT_EQ(cert.rank, 2);
  EXPECT_EQ(determinant(cert.b), Rational(1));
  EXPECT_EQ(cert.b * a * cert.b.transpose(), normal_form_target(Family::SkewSymmetric, 4, 2));
}

TEST(NormalForm, SkewNeedsScaledPair) {
  const auto a = rm({{"0", "0", "3"}, {"0", "0", "0"}, {"-3", "0", "0"}});
  const auto cert = rank_normal_form(a, Family::SkewSymmetric);
  EXPECT_EQ(cert.rank, 2);
  EXPECT_TRUE(verify_certificate(cert).ok);
}

TEST(NormalForm, SymmetricZeroDiagonalUsesPairPivot) {
  const auto a = rm({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "0"}});
  const auto cert = rank_normal_form(a, Family::Symmetric);
  EXPECT_EQ(cert.rank, 2);
  EXPECT_TRUE(verify_certificate(cert).ok);
}

TEST(NormalForm, RandomInstancesAllKindsAndRanks) {
  std::mt19937_64 rng(2024);
  for (Family family : {Family::General, Family::Symmetric, Family::SkewSymmetric})
    for (int n = 1; n <= 5; ++n)
      for (int r = 0; r < n; ++r) {
        if (family == Family::SkewSymmetric && r % 2) continue;
        for (int trial = 0; trial < 4; ++trial) {
          const auto a = testsupport::random_of_rank(rng, family, n, r);
          const auto cert = rank_normal_form(a, family);
          EXPECT_EQ(cert.rank, r);
          const auto report = verify_certificate(cert);
          EXPECT_TRUE(report.ok) << (report.diagnostics.empty() ? "" : report.diagnostics[0]);
          if (cert.exact) EXPECT_EQ(report.residual, 0.0);
          else EXPECT_LE(report.residual, 1e-9);
        }
      }
}

TEST(NormalForm, Idempotence) {
  for (Family family : {Family::General, Family::Symmetric, Family::SkewSymmetric})
    for (int n = 2; n <= 5; ++n)
      for (int r = 0; r < n; ++r) {
        if (family == Family::SkewSymmetric && r % 2) continue;
        const auto cert = rank_normal_form(normal_form_target(family, n, r), family);
        if (cert.exact) {
          EXPECT_EQ(cert.b, RationalMatrix::identity(n));
          if (cert.c) EXPECT_EQ(*cert.c, RationalMatrix::identity(n));
        } else {
          EXPECT_LT((cert.b_f - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-14);
        }
      }
}

TEST(NormalForm, TamperedCertificateRejected) {
  std::mt19937_64 rng(9);
  for (Family family : {Family::General, Family::SkewSymmetric, Family::Symmetric}) {
    auto cert = rank_normal_form(testsupport::random_of_rank(rng, family, 4, 2), family);
    if (cert.exact) cert.b.at(0, 0) += 1;
    else cert.b_f(0, 0) += 1.0;
    const auto report = verify_certificate(cert);
    EXPECT_FALSE(report.ok);
    EXPECT_FALSE(report.diagnostics.empty());
  }
}

TEST(NormalForm, Errors) {
  EXPECT_THROW(rank_normal_form(RationalMatrix::identity(3), Family::General), Error);
  EXPECT_THROW(rank_normal_form(rm({{"0", "1"}, {"0", "0"}}), Family::Symmetric), Error);
  EXPECT_THROW(rank_normal_form(rm({{"1", "1"}, {"-1", "0"}}), Family::SkewSymmetric), Error);
  EXPECT_THROW(rank_normal_form(rm({{"0", "0"}}), Family::General), Error);
  EXPECT_THROW(rank_normal_form(rm({{"0", "0"}, {"0", "0"}}), Family::Rectangular), Error);
  EXPECT_THROW(rank_normal_form(CMatrix::Zero(2, 2), Family::General), Error);
}

TEST(NormalForm, AmbiguousNumericalRankReported) {
  CMatrix a = CMatrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1e-8;
  try {
    rank_normal_form(a, Family::Symmetric);
    FAIL() << "expected a numerical error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Numerical);
    EXPECT_NE(std::string(e.what()).find("suspect singular values"), std::string::npos);
  }
}
