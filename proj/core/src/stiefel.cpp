#include "singcoh/stiefel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "singcoh/error.hpp"

namespace singcoh {

namespace {

using Complex = std::complex<double>;

CVector reverse(const CVector& v) { return v.reverse(); }

}  // namespace

CMatrix pseudo_rotation_matrix(double theta, const CVector& v) {
  const double norm = v.norm();
  require(norm > 0.0, "pseudo-rotation axis must be non-zero");
  const CVector u = v / norm;
  const Complex factor = std::polar(1.0, theta) - 1.0;
  return CMatrix::Identity(v.size(), v.size()) + factor * u * u.adjoint();
}

CMatrix PseudoRotation::matrix_flag() const { return pseudo_rotation_matrix(theta, v); }

CMatrix PseudoRotation::matrix() const { return to_flag_coordinates(matrix_flag()); }

CVector PseudoRotation::axis_standard() const { return reverse(v); }

CMatrix to_flag_coordinates(const CMatrix& b) { return b.colwise().reverse().rowwise().reverse(); }

double unitarity_defect(const CMatrix& b) {
  if (b.rows() != b.cols()) return INFINITY;
  return (b.adjoint() * b - CMatrix::Identity(b.rows(), b.cols())).cwiseAbs().maxCoeff();
}

std::vector<PseudoRotation> factorize(const CMatrix& b, double tol) {
  require(b.rows() == b.cols() && b.rows() >= 1, "factorize needs a square matrix");
  require(tol > 0.0, "tolerance must be positive");
  const int m = static_cast<int>(b.rows());
  const double defect = unitarity_defect(b);
  if (!(defect <= tol))
    fail(ErrorCode::InvalidArgument,
         "matrix is not unitary: max |B*B - I| = " + std::to_string(defect));

  CMatrix residual = to_flag_coordinates(b);
  std::vector<PseudoRotation> peeled;  // deepest factor first
  for (int step = 0; step <= m; ++step) {
    int j = -1;
    for (int i = m - 1; i >= 0 && j < 0; --i) {
      CVector column = residual.col(i);
      column(i) -= 1.0;
      if (column.cwiseAbs().maxCoeff() > tol) j = i;
    }
    if (j < 0) break;
    if (step == m)
      fail(ErrorCode::Numerical,
           "factorization did not reach the identity within m peels; tolerance too tight");

    CVector w = residual.col(j);
    w(j) -= 1.0;
    w.tail(m - j - 1).setZero();
    const double wn = w.norm();
    const double wj = std::abs(w(j));
    if (wj <= tol)
      fail(ErrorCode::Numerical, "pivot component vanished while peeling column " +
                                     std::to_string(j + 1));
    PseudoRotation factor;
    factor.min_index = j + 1;
    factor.v = w * (std::conj(w(j)) / (wj * wn));
    factor.v(j) = Complex(wj / wn, 0.0);
    Complex eig = 1.0 + w(j) * (wn * wn) / (wj * wj);
    eig /= std::abs(eig);
    double theta = std::arg(eig);
    if (theta <= 0.0) theta += 2.0 * std::numbers::pi;
    factor.theta = theta;
    residual = factor.matrix_flag().adjoint() * residual;
    peeled.push_back(std::move(factor));
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

CMatrix reconstruct(const std::vector<PseudoRotation>& factors, int m) {
  CMatrix product = CMatrix::Identity(m, m);
  for (const auto& f : factors) product = f.matrix_flag() * product;
  return to_flag_coordinates(product);
}

int SchubertIndex::dimension() const {
  int d = 0;
  for (int i : indices) d += 2 * i - 1;
  return d;
}

SchubertIndex schubert_index_of(const CMatrix& b, int p, double tol) {
  const int m = static_cast<int>(b.rows());
  require(p >= 1 && p < m, "Stiefel quotient needs 1 <= p < m");
  SchubertIndex out;
  for (const auto& f : factorize(b, tol))
    if (f.min_index > m - p) out.indices.push_back(f.min_index);
  return out;
}

std::vector<SchubertIndex> enumerate_cells(int m, int p) {
  require(p >= 1 && m > p, "Schubert cells need m > p >= 1");
  require(p < 31, "too many cells to enumerate");
  std::vector<SchubertIndex> cells;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    SchubertIndex s;
    for (int i = 0; i < p; ++i)
      if (mask & (1u << i)) s.indices.push_back(m - p + 1 + i);
    cells.push_back(std::move(s));
  }
  std::sort(cells.begin(), cells.end(), [](const SchubertIndex& a, const SchubertIndex& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a.indices < b.indices;
  });
  return cells;
}

IntPoly cell_polynomial(int m, int p) {
  IntPoly poly;
  for (const auto& c : enumerate_cells(m, p)) poly += IntPoly::monomial(c.dimension());
  return poly;
}

CMatrix random_unitary(int m, std::mt19937_64& rng) {
  require(m >= 1, "matrix size must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix z(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(m, m);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

}  // namespace singcoh
