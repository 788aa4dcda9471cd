#include <gtest/gtest.h>

#include "singcoh/error.hpp"
#include "singcoh/io.hpp"
#include "singcoh/kite.hpp"
#include "test_support.hpp"

using namespace singcoh;
using testsupport::fixture;
using testsupport::read_file;

namespace {

PolyMatrix load_matrix(const std::string& name) {
  return io::polymatrix_from_json(io::parse_json(read_file(fixture(name))));
}

std::map<std::string, Rational> zeros(std::initializer_list<const char*> names) {
  std::map<std::string, Rational> out;
  for (const char* n : names) out[n] = 0;
  return out;
}

std::vector<MatrixKind> kinds_up_to(int max_m) {
  std::vector<MatrixKind> out;
  for (int m = 2; m <= max_m; ++m) {
    out.push_back(MatrixKind::general(m));
    out.push_back(MatrixKind::symmetric(m));
    if (m % 2 == 0) out.push_back(MatrixKind::skew_symmetric(m));
    for (int p = 2; p < m; ++p) out.push_back(MatrixKind::rectangular(m, p));
  }
  return out;
}

std::vector<int> valid_ells(const MatrixKind& k) {
  std::vector<int> out;
  const int top = k.is_square() ? k.m() - 1 : k.p();
  for (int ell = 1; ell <= top; ++ell)
    if (k.family() != Family::SkewSymmetric || ell % 2 == 0) out.push_back(ell);
  return out;
}

}  // namespace

TEST(Kite, SymmetricFourSizeThree) {
  const auto gens = kite_generators({MatrixKind::symmetric(4), 3});
  int body = 0;
  int tail = 0;
  for (const auto& g : gens) (g.tail ? tail : body) += 1;
  EXPECT_EQ(body, 6);
  EXPECT_EQ(tail, 1);
  EXPECT_EQ(gens.back().label, "Esy4_4");
}

TEST(Kite, SkewSixSizeFourHasEmptyTail) {
  // Tail indices {2i : 4 < 2i < 6} form the empty set.
  const auto gens = kite_generators({MatrixKind::skew_symmetric(6), 4});
  EXPECT_EQ(gens.size(), 6u);
  for (const auto& g : gens) EXPECT_FALSE(g.tail);
  const auto tail8 = kite_generators({MatrixKind::skew_symmetric(8), 2});
  std::vector<std::string> tails;
  for (const auto& g : tail8)
    if (g.tail) tails.push_back(g.label);
  EXPECT_EQ(tails, (std::vector<std::string>{"Esk4_5", "Esk6_7"}));
}

TEST(Kite, RectangularFourThreeLengthTwo) {
  const KiteSpec spec{MatrixKind::rectangular(4, 3), 2};
  EXPECT_EQ(spec.r(), 1);
  const auto gens = kite_generators(spec);
  std::vector<std::string> body;
  std::vector<std::string> tail;
  for (const auto& g : gens) (g.tail ? tail : body).push_back(g.label);
  EXPECT_EQ(body, (std::vector<std::string>{"E2_2", "E2_3", "E3_2", "E3_3", "E4_2", "E4_3"}));
  EXPECT_EQ(tail, (std::vector<std::string>{"E1_1"}));
}

TEST(Kite, DimensionMatchesEnumeration) {
  for (const auto& k : kinds_up_to(8))
    for (int ell : valid_ells(k)) {
      const KiteSpec spec{k, ell};
      const auto basis = kite_basis(spec);
      EXPECT_EQ(static_cast<int>(basis.size()), kite_dimension(spec)) << k.to_string() << " " << ell;
      // Basis elements are linearly independent: their supports are disjoint.
      std::set<std::pair<int, int>> seen;
      for (const auto& e : basis)
        for (int i = 0; i < e.rows(); ++i)
          for (int j = 0; j < e.cols(); ++j)
            if (!e.at(i, j).is_zero()) EXPECT_TRUE(seen.insert({i, j}).second);
    }
}

TEST(Kite, InvalidSpecs) {
  EXPECT_THROW(kite_generators({MatrixKind::general(4), 4}), Error);
  EXPECT_THROW(kite_generators({MatrixKind::general(4), 0}), Error);
  EXPECT_THROW(kite_generators({MatrixKind::skew_symmetric(6), 3}), Error);
  EXPECT_THROW(kite_generators({MatrixKind::rectangular(5, 3), 4}), Error);
  EXPECT_NO_THROW(kite_generators({MatrixKind::rectangular(5, 3), 3}));
}

TEST(Kite, LinearKiteMaps) {
  const auto g = linear_kite_map({MatrixKind::general(5), 4});
  EXPECT_EQ(g.at(0, 4).to_string(), "0");
  EXPECT_EQ(g.at(4, 4).to_string(), "k5_5");
  EXPECT_EQ(g.at(3, 2).to_string(), "k4_3");
  const auto s = linear_kite_map({MatrixKind::symmetric(2), 1});
  EXPECT_EQ(s.to_strings(), (std::vector<std::vector<std::string>>{{"k1_1", "0"}, {"0", "k2_2"}}));
  const auto r = linear_kite_map({MatrixKind::rectangular(5, 4), 2});
  EXPECT_EQ(r.at(0, 0).to_string(), "k1_1");
  EXPECT_EQ(r.at(1, 1).to_string(), "k2_2");
  EXPECT_EQ(r.at(2, 2).to_string(), "k3_3");
  EXPECT_TRUE(r.at(2, 1).is_zero());
  EXPECT_TRUE(r.at(0, 2).is_zero());
  const auto k = linear_kite_map({MatrixKind::skew_symmetric(4), 2});
  EXPECT_EQ(k.at(1, 0).to_string(), "-k1_2");
  EXPECT_EQ(k.kind_tag(), Family::SkewSymmetric);
}

TEST(Kite, LinearKiteCertifiesAgainstItself) {
  for (const auto& k : kinds_up_to(6))
    for (int ell : valid_ells(k)) {
      const KiteSpec spec{k, ell};
      const auto cert = certify_containment(linear_kite_map(spec), {}, spec);
      EXPECT_EQ(cert.level, CertificateLevel::ExactLinear) << k.to_string() << " " << ell;
    }
}

TEST(Kite, GeneralGermCertifiesExactLinear) {
  const auto germ = load_matrix("general5_germ.json");
  EXPECT_EQ(germ.variables().size(), 21u);
  const KiteSpec spec{MatrixKind::general(5), 4};
  const auto cert = certify_containment(germ, zeros({"y1", "y2", "y3", "y4"}), spec);
  ASSERT_EQ(cert.level, CertificateLevel::ExactLinear);
  EXPECT_EQ(cert.match->variable_map.at("k5_5"), "x55");
  EXPECT_EQ(cert.match->variable_map.at("k2_3"), "x23");
  // Without the specialization the g-column is in the way.
  const auto raw = certify_containment(germ, {}, spec);
  EXPECT_EQ(raw.level, CertificateLevel::Failed);
  ASSERT_TRUE(raw.mismatch);
  EXPECT_EQ(raw.mismatch->row, 1);
  EXPECT_EQ(raw.mismatch->col, 5);
}

TEST(Kite, SymmetricGermNeedsTheWitness) {
  const auto germ = load_matrix("symmetric4_germ.json");
  const KiteSpec spec{MatrixKind::symmetric(4), 3};
  const auto y0 = zeros({"y1", "y2"});
  const auto unfurled = load_matrix("symmetric4_unfurled.json");
  EXPECT_TRUE(specialize(germ, y0).same_entries(unfurled));

  const auto bare = certify_containment(germ, y0, spec);
  EXPECT_EQ(bare.level, CertificateLevel::Failed);
  ASSERT_TRUE(bare.mismatch);
  EXPECT_EQ(bare.mismatch->row, 1);
  EXPECT_EQ(bare.mismatch->col, 1);

  const auto w = io::witness_from_json(io::parse_json(read_file(fixture("symmetric4_witness.json"))));
  const auto cert = certify_containment(germ, y0, spec, w);
  ASSERT_EQ(cert.level, CertificateLevel::WitnessedUnfurled);
  EXPECT_TRUE(cert.matched.same_entries(
      PolyMatrix::parse({{"x11", "x12", "x13", "0"},
                         {"x12", "x22", "x23", "0"},
                         {"x13", "x23", "x33", "0"},
                         {"0", "0", "0", "x44"}},
                        {"x11", "x12", "x13", "x22", "x23", "x33", "x44"})));
  EXPECT_EQ(io::certificate_to_json(cert)["witness_sha256"].get<std::string>().size(), 64u);
}

TEST(Kite, ZeroMatrixFails) {
  const PolyMatrix zero(3, 3, Family::General);
  const auto cert = certify_containment(zero, {}, {MatrixKind::general(3), 2});
  EXPECT_EQ(cert.level, CertificateLevel::Failed);
  ASSERT_TRUE(cert.mismatch);
  EXPECT_EQ(cert.mismatch->expected, "k1_1");
  EXPECT_EQ(cert.mismatch->found, "0");
}

TEST(Kite, PermutedAndScaledKiteStillMatches) {
  // Tail first, then the body, every entry scaled.
  const auto m = PolyMatrix::parse({{"5*c", "0", "0"}, {"0", "a", "-2*b"}, {"0", "-2*b", "3*d"}},
                                   {"a", "b", "c", "d"}, Family::Symmetric);
  const auto cert = certify_containment(m, {}, {MatrixKind::symmetric(3), 2});
  ASSERT_EQ(cert.level, CertificateLevel::ExactLinear);
  EXPECT_EQ(cert.match->row_perm, (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(cert.match->variable_map.at("k3_3"), "c");
}

TEST(Kite, RectangularIndependentPermutations) {
  // 3x2 with r = 1: tail at (1,1), body rows 2..3 x column 2.  Swap rows 1,3.
  const auto m = PolyMatrix::parse({{"0", "b"}, {"0", "c"}, {"a", "0"}}, {"a", "b", "c"},
                                   Family::Rectangular);
  const KiteSpec spec{MatrixKind::rectangular(3, 2), 1};
  EXPECT_EQ(certify_containment(m, {}, spec).level, CertificateLevel::ExactLinear);
  const auto transposed = certify_containment(m.transpose(), {}, spec);
  EXPECT_EQ(transposed.level, CertificateLevel::ExactLinear);
  EXPECT_TRUE(transposed.transposed_input);
}

TEST(Kite, ConstantWitnessDoesNotLowerTheLevel) {
  const KiteSpec spec{MatrixKind::symmetric(3), 2};
  const auto q = linear_kite_map(spec);
  const auto b = PolyMatrix::parse({{"0", "0", "1"}, {"1", "0", "0"}, {"0", "1", "0"}}, {});
  const auto moved = apply_witness(q, OpWitness{b, b.transpose(), std::nullopt, std::nullopt, {}, {}});
  EXPECT_EQ(certify_containment(moved, {}, spec).level, CertificateLevel::ExactLinear);
}

TEST(Kite, CertificationErrors) {
  const auto germ = load_matrix("symmetric4_germ.json");
  const KiteSpec spec{MatrixKind::symmetric(4), 3};
  EXPECT_THROW(certify_containment(germ, zeros({"z9"}), spec), Error);
  EXPECT_THROW(certify_containment(germ, {{"y1", Rational(1)}}, spec), Error);
  EXPECT_THROW(certify_containment(germ, {}, {MatrixKind::general(4), 3}), Error);
  OpWitness bad = OpWitness::identity(4);
  bad.left.at(0, 0) = Polynomial(2);
  EXPECT_THROW(certify_containment(germ, zeros({"y1", "y2"}), spec, bad), VerificationError);
}
