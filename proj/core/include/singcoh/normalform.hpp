#pragma once

// Rank normal forms of singular matrices under the determinant-constrained
// group actions:
//   general    C A B^{-1} = diag(I_r, 0)  with det B = det C
//   symmetric  B A B^T    = diag(I_r, 0)  with det B = 1
//   skew       B A B^T    = diag(J_k, 0)  with det B = 1, r = 2k
// General and skew reductions are exact over Q.  The symmetric reduction
// needs square roots and runs in complex floating point with a residual check.

#include <optional>
#include <string>
#include <vector>

#include "singcoh/catalog.hpp"
#include "singcoh/polymatrix.hpp"
#include "singcoh/stiefel.hpp"

namespace singcoh {

/// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  /// Requires every entry to be constant.
  static RationalMatrix from_polymatrix(const PolyMatrix& m);
  static RationalMatrix from_strings(const std::vector<std::vector<std::string>>& grid);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  /// max |a_ij - b_ij| as a double (exact zero when equal).
  double max_abs_diff(const RationalMatrix& other) const;

  CMatrix to_complex() const;
  PolyMatrix to_polymatrix() const;
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Gaussian elimination with row swaps.
Rational determinant(const RationalMatrix& a);
/// Inverse by Gauss-Jordan; throws when singular.
RationalMatrix inverse(const RationalMatrix& a);
/// Fraction-free elimination, independent of the reduction code paths.
int exact_rank(const RationalMatrix& a);

/// diag(I_r, 0) or, for skew, diag(J_{r/2}, 0) with J = [[0, 1], [-1, 0]].
RationalMatrix normal_form_target(Family family, int size, int rank);

inline constexpr double kRankThreshold = 1e-8;
inline constexpr double kFloatingTolerance = 1e-9;

struct NormalFormCertificate {
  Family family = Family::General;
  int size = 0;
  int rank = 0;
  bool exact = true;

  // Exact mode (general, skew).  For general: C A B' = N with B' = B^{-1}.
  RationalMatrix input;
  RationalMatrix b;
  RationalMatrix b_inverse;            // general only
  std::optional<RationalMatrix> c;     // general only
  RationalMatrix target;

  // Floating mode (symmetric).
  CMatrix input_f;
  CMatrix b_f;
  CMatrix target_f;
  std::vector<double> singular_values;  // descending
  double rank_threshold = kRankThreshold;  // relative to the largest singular value

  /// Max-norm of the transformed input minus the target.
  double residual = 0.0;
};

/// Exact input.  General and skew reduce exactly; symmetric converts to
/// floating point.  Errors: kind mismatch, non-square, full rank, rectangular.
NormalFormCertificate rank_normal_form(const RationalMatrix& a, Family family);
/// Floating input; symmetric only.  Errors additionally include a numerical
/// rank ambiguity, reported with the suspect singular values.
NormalFormCertificate rank_normal_form(const CMatrix& a, Family family);

struct CertificateReport {
  bool ok = true;
  double residual = 0.0;
  std::vector<std::string> diagnostics;
};

/// Recomputes products and determinants from the stored matrices only.
CertificateReport verify_certificate(const NormalFormCertificate& cert,
                                     double tol = kFloatingTolerance);

}  // namespace singcoh
