#pragma once

// Pseudo-rotation factorization of unitary matrices and the Schubert cells of
// the Stiefel manifolds U_m / U_{m-p}.
//
// Flag coordinates: the reverse flag e~_j = e_{m+1-j}.  Matrices are accepted
// in standard coordinates and converted by index reversal (B_f = P B P).

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

#include "singcoh/grading.hpp"

namespace singcoh {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultUnitaryTolerance = 1e-10;

/// A = I + (e^{i theta} - 1) v v^*.  Identity on v-perp, multiplies v by e^{i theta}.
struct PseudoRotation {
  double theta = 0.0;  // in (0, 2 pi)
  CVector v;           // unit axis in flag coordinates
  int min_index = 0;   // 1-based: v_j real positive at j = min_index, zero beyond

  /// Matrix in flag coordinates.
  CMatrix matrix_flag() const;
  /// Matrix in standard coordinates.
  CMatrix matrix() const;
  /// Axis in standard coordinates.
  CVector axis_standard() const;
};

/// v is normalized; throws on a zero vector.
CMatrix pseudo_rotation_matrix(double theta, const CVector& v);

/// Index reversal P X P (an involution).
CMatrix to_flag_coordinates(const CMatrix& b);

/// Factors B (standard coordinates) as A_k ... A_1 with strictly increasing
/// min-indices m_1 < ... < m_k.  Returned as [A_1, ..., A_k].
///
/// Peel: every factor with smaller min-index fixes e~_j for j beyond it, so
/// with j the largest index whose column of the residual differs from e~_j,
/// column j equals A_k e~_j and B e~_j - e~_j = (e^{i theta} - 1) conj(v_j) v.
/// Normalizing that vector gives v; its j-th component fixes e^{i theta}.  The
/// residual is then multiplied by A_k^* and the peel repeats, at most m times.
std::vector<PseudoRotation> factorize(const CMatrix& b, double tol = kDefaultUnitaryTolerance);

/// A_k ... A_1 in standard coordinates.
CMatrix reconstruct(const std::vector<PseudoRotation>& factors, int m);

/// Max-norm of B^* B - I.
double unitarity_defect(const CMatrix& b);

struct SchubertIndex {
  std::vector<int> indices;  // strictly increasing
  /// Real cell dimension sum(2 m_i - 1).
  int dimension() const;
  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
};

/// Keeps the min-indices of the factors lying outside U_{m-p} (those with
/// min-index > m - p).
SchubertIndex schubert_index_of(const CMatrix& b, int p, double tol = kDefaultUnitaryTolerance);

/// All 2^p cells of U_m / U_{m-p}, ordered by (dimension, lexicographic).
std::vector<SchubertIndex> enumerate_cells(int m, int p);

/// sum over cells of t^dim.
IntPoly cell_polynomial(int m, int p);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
CMatrix random_unitary(int m, std::mt19937_64& rng);

}  // namespace singcoh
