#include "singcoh/normalform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "singcoh/error.hpp"

namespace singcoh {

using Complex = std::complex<double>;

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
  require(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_polymatrix(const PolyMatrix& p) {
  RationalMatrix m(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) {
      if (!p.at(i, j).is_constant())
        fail(ErrorCode::InvalidArgument, "normal forms need constant entries; entry (" +
                                             std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             ") is " + p.at(i, j).to_string());
      m.at(i, j) = p.at(i, j).constant_value();
    }
  return m;
}

RationalMatrix RationalMatrix::from_strings(const std::vector<std::vector<std::string>>& grid) {
  return from_polymatrix(PolyMatrix::parse(grid, {}));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require(a.cols() == b.rows(), "matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

bool RationalMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

bool RationalMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

double RationalMatrix::max_abs_diff(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return INFINITY;
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    const Rational d = abs(data_[k] - other.data_[k]);
    worst = std::max(worst, d.get_d());
  }
  return worst;
}

CMatrix RationalMatrix::to_complex() const {
  CMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).get_d();
  return m;
}

PolyMatrix RationalMatrix::to_polymatrix() const {
  PolyMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = Polynomial(at(i, j));
  return m;
}

std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back(rational_to_string(at(i, j)));
  return out;
}

Rational determinant(const RationalMatrix& a) {
  require(a.is_square(), "determinant needs a square matrix");
  RationalMatrix m = a;
  const int n = m.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col) / m.at(col, col);
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    const Rational inv = 1 / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

using RVector = std::vector<Rational>;

RationalMatrix from_columns(const std::vector<RVector>& cols, int n) {
  RationalMatrix m(n, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = cols[j][static_cast<std::size_t>(i)];
  return m;
}

RVector apply(const RationalMatrix& a, const RVector& v) {
  RVector out(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(i)] += a.at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

RVector unit(int n, int i) {
  RVector e(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

std::vector<RVector> kernel_basis(const RationalMatrix& a) {
  RationalMatrix r = a;
  const auto pivots = rref(r);
  std::vector<RVector> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RVector v = unit(a.cols(), free);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[static_cast<std::size_t>(pivots[k])] = -r.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int column_rank(const std::vector<RVector>& cols, int n) {
  if (cols.empty()) return 0;
  RationalMatrix m = from_columns(cols, n).transpose();
  return static_cast<int>(rref(m).size());
}

/// Standard vectors e_i, in index order, that extend `given` to a basis.
std::vector<RVector> standard_completion(const std::vector<RVector>& given, int n) {
  std::vector<RVector> all = given, added;
  int rank = column_rank(all, n);
  for (int i = 0; i < n && rank < n; ++i) {
    all.push_back(unit(n, i));
    const int next = column_rank(all, n);
    if (next > rank) {
      added.push_back(all.back());
      rank = next;
    } else {
      all.pop_back();
    }
  }
  return added;
}

Rational pairing(const RationalMatrix& a, const RVector& u, const RVector& w) {
  Rational s = 0;
  for (int i = 0; i < a.rows(); ++i) {
    if (u[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < a.cols(); ++j)
      s += u[static_cast<std::size_t>(i)] * a.at(i, j) * w[static_cast<std::size_t>(j)];
  }
  return s;
}

void require_singular(int rank, int size) {
  if (rank == size)
    fail(ErrorCode::InvalidArgument,
         "matrix has full rank " + std::to_string(rank) + "; normal forms are for singular matrices");
}

NormalFormCertificate general_form(const RationalMatrix& a) {
  const int n = a.rows();
  const auto kernel = kernel_basis(a);
  const int r = n - static_cast<int>(kernel.size());
  require_singular(r, n);

  auto v_cols = standard_completion(kernel, n);
  std::vector<RVector> w_cols;
  for (const auto& v : v_cols) w_cols.push_back(apply(a, v));
  for (auto& e : standard_completion(w_cols, n)) w_cols.push_back(std::move(e));
  v_cols.insert(v_cols.end(), kernel.begin(), kernel.end());

  RationalMatrix v = from_columns(v_cols, n);
  const RationalMatrix w = from_columns(w_cols, n);
  const Rational bdet = determinant(v), cdet = determinant(w);
  // Scaling a kernel column keeps C A V' in normal form and sets det V' = det W.
  const Rational scale = cdet / bdet;
  for (int i = 0; i < n; ++i) v.at(i, n - 1) *= scale;

  NormalFormCertificate cert;
  cert.family = Family::General;
  cert.size = n;
  cert.rank = r;
  cert.input = a;
  cert.b_inverse = v;
  cert.b = inverse(v);
  cert.c = inverse(w);
  cert.target = normal_form_target(Family::General, n, r);
  cert.residual = (*cert.c * a * v).max_abs_diff(cert.target);
  if (cert.residual != 0.0) fail(ErrorCode::Verification, "general reduction left a residual");
  return cert;
}

NormalFormCertificate skew_form(const RationalMatrix& a) {
  const int n = a.rows();
  std::vector<RVector> pending;
  for (int i = 0; i < n; ++i) pending.push_back(unit(n, i));
  std::vector<RVector> basis;

  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    Rational value;
    for (std::size_t x = 0; x < pending.size() && !pair; ++x)
      for (std::size_t y = x + 1; y < pending.size() && !pair; ++y) {
        value = pairing(a, pending[x], pending[y]);
        if (value != 0) pair = {x, y};
      }
    if (!pair) break;
    RVector u = pending[pair->first];
    RVector w = pending[pair->second];
    for (auto& c : w) c /= value;
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pair->second));
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pair->first));
    // s - psi(s, w) u + psi(s, u) w is psi-orthogonal to both u and w.
    for (auto& s : pending) {
      const Rational sw = pairing(a, s, w), su = pairing(a, s, u);
      for (int i = 0; i < n; ++i)
        s[static_cast<std::size_t>(i)] += -sw * u[static_cast<std::size_t>(i)] + su * w[static_cast<std::size_t>(i)];
    }
    basis.push_back(std::move(u));
    basis.push_back(std::move(w));
  }
  const int r = static_cast<int>(basis.size());
  require_singular(r, n);
  basis.insert(basis.end(), pending.begin(), pending.end());

  RationalMatrix v = from_columns(basis, n);
  const Rational d = determinant(v);
  for (int i = 0; i < n; ++i) v.at(i, n - 1) /= d;

  NormalFormCertificate cert;
  cert.family = Family::SkewSymmetric;
  cert.size = n;
  cert.rank = r;
  cert.input = a;
  cert.b = v.transpose();
  cert.target = normal_form_target(Family::SkewSymmetric, n, r);
  cert.residual = (cert.b * a * v).max_abs_diff(cert.target);
  if (cert.residual != 0.0) fail(ErrorCode::Verification, "skew reduction left a residual");
  return cert;
}

Complex cpair(const CMatrix& a, const CVector& u, const CVector& w) {
  return (u.transpose() * a * w)(0, 0);
}

NormalFormCertificate symmetric_form(const CMatrix& a) {
  const int n = static_cast<int>(a.rows());
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    fail(ErrorCode::InvalidArgument, "matrix is not symmetric");

  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd sigma = svd.singularValues();
  NormalFormCertificate cert;
  cert.family = Family::Symmetric;
  cert.size = n;
  cert.exact = false;
  cert.input_f = a;
  cert.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
  const double smax = n > 0 ? sigma(0) : 0.0;
  int r = 0;
  std::vector<double> suspects;
  for (int i = 0; i < n; ++i) {
    const double rel = smax > 0 ? sigma(i) / smax : 0.0;
    if (rel > kRankThreshold) ++r;
    if (rel > kRankThreshold * 1e-2 && rel < kRankThreshold * 1e2) suspects.push_back(sigma(i));
  }
  if (!suspects.empty()) {
    std::ostringstream os;
    os.precision(6);
    os << "numerical rank is ambiguous at relative threshold " << kRankThreshold
       << "; suspect singular values:";
    for (double s : suspects) os << ' ' << s;
    fail(ErrorCode::Numerical, os.str());
  }
  require_singular(r, n);
  cert.rank = r;

  std::vector<CVector> pending;
  for (int i = 0; i < n; ++i) pending.push_back(CVector::Unit(n, i));
  std::vector<CVector> basis;
  for (int step = 0; step < r; ++step) {
    std::size_t best = 0;
    double diag = -1.0;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      const double d = std::abs(cpair(a, pending[k], pending[k]));
      if (d > diag) diag = d, best = k;
    }
    double off = 0.0;
    std::size_t pa = 0, pb = 0;
    for (std::size_t x = 0; x < pending.size(); ++x)
      for (std::size_t y = x + 1; y < pending.size(); ++y) {
        const double o = std::abs(cpair(a, pending[x], pending[y]));
        if (o > off) off = o, pa = x, pb = y;
      }
    CVector w;
    if (diag >= off / 2) {
      w = pending[best];
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    } else {
      // Every diagonal value is small: psi(a+b, a+b) is dominated by 2 psi(a, b).
      w = pending[pa] + pending[pb];
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pa));
    }
    const CVector v = w / std::sqrt(cpair(a, w, w));
    for (auto& s : pending) s -= cpair(a, s, v) * v;
    basis.push_back(v);
  }
  // Snap the leftover vectors onto the numerical null space of A.
  const CMatrix null = svd.matrixV().rightCols(n - r);
  for (auto& s : pending) s = null * (null.adjoint() * s);
  basis.insert(basis.end(), pending.begin(), pending.end());

  CMatrix v(n, n);
  for (int j = 0; j < n; ++j) v.col(j) = basis[static_cast<std::size_t>(j)];
  // Spread the determinant correction over the kernel columns.
  const Complex d = v.determinant();
  const Complex root = std::pow(d, -1.0 / (n - r));
  for (int j = r; j < n; ++j) v.col(j) *= root;
  cert.b_f = v.transpose();
  cert.target_f = normal_form_target(Family::Symmetric, n, r).to_complex();
  cert.residual = (cert.b_f * a * v - cert.target_f).cwiseAbs().maxCoeff();
  if (cert.residual > kFloatingTolerance * scale) {
    std::ostringstream os;
    os << "symmetric reduction residual " << cert.residual << " exceeds tolerance";
    fail(ErrorCode::Numerical, os.str());
  }
  return cert;
}

void require_supported(Family family) {
  if (family == Family::Rectangular)
    fail(ErrorCode::Unsupported, "normal forms cover general, symmetric and skew kinds");
}

}  // namespace

RationalMatrix inverse(const RationalMatrix& a) {
  require(a.is_square(), "inverse needs a square matrix");
  const int n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] >= n))
    fail(ErrorCode::InvalidArgument, "matrix is singular");
  RationalMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

int exact_rank(const RationalMatrix& a) {
  // Clear denominators row by row, then eliminate fraction-free.
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < a.cols(); ++j) l = lcm(l, a.at(i, j).get_den());
    for (int j = 0; j < a.cols(); ++j)
      m[static_cast<std::size_t>(i)].push_back(mpz_class(a.at(i, j) * l));
  }
  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    auto r = static_cast<std::size_t>(rank);
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = static_cast<std::size_t>(col) + 1; j < m[i].size(); ++j)
        m[i][j] = (m[r][static_cast<std::size_t>(col)] * m[i][j] -
                   m[i][static_cast<std::size_t>(col)] * m[r][j]) / prev;
      m[i][static_cast<std::size_t>(col)] = 0;
    }
    prev = m[r][static_cast<std::size_t>(col)];
    ++rank;
  }
  return rank;
}

RationalMatrix normal_form_target(Family family, int size, int rank) {
  require(rank >= 0 && rank <= size, "rank out of range");
  RationalMatrix n(size, size);
  if (family == Family::SkewSymmetric) {
    require(rank % 2 == 0, "skew rank must be even");
    for (int k = 0; k < rank; k += 2) {
      n.at(k, k + 1) = 1;
      n.at(k + 1, k) = -1;
    }
  } else {
    for (int k = 0; k < rank; ++k) n.at(k, k) = 1;
  }
  return n;
}

NormalFormCertificate rank_normal_form(const RationalMatrix& a, Family family) {
  require_supported(family);
  require(a.is_square() && a.rows() >= 1, "normal forms need a non-empty square matrix");
  switch (family) {
    case Family::General: return general_form(a);
    case Family::SkewSymmetric:
      if (!a.is_skew_symmetric()) fail(ErrorCode::InvalidArgument, "matrix is not skew-symmetric");
      return skew_form(a);
    case Family::Symmetric:
      if (!a.is_symmetric()) fail(ErrorCode::InvalidArgument, "matrix is not symmetric");
      return symmetric_form(a.to_complex());
    case Family::Rectangular: break;
  }
  fail(ErrorCode::Unsupported, "unsupported kind");
}

NormalFormCertificate rank_normal_form(const CMatrix& a, Family family) {
  require_supported(family);
  require(a.rows() == a.cols() && a.rows() >= 1, "normal forms need a non-empty square matrix");
  if (family != Family::Symmetric)
    fail(ErrorCode::InvalidArgument,
         std::string(to_string(family)) + " normal forms are exact and need rational entries");
  return symmetric_form(a);
}

CertificateReport verify_certificate(const NormalFormCertificate& cert, double tol) {
  CertificateReport report;
  auto problem = [&](std::string text) {
    report.ok = false;
    report.diagnostics.push_back(std::move(text));
  };
  const int n = cert.size;
  if (cert.rank < 0 || cert.rank >= n) {
    problem("rank " + std::to_string(cert.rank) + " is not below the size " + std::to_string(n));
    return report;
  }
  if (cert.exact) {
    const RationalMatrix target = normal_form_target(cert.family, n, cert.rank);
    if (cert.input.rows() != n || cert.input.cols() != n || cert.b.rows() != n || cert.b.cols() != n) {
      problem("matrix shapes do not match the certificate size");
      return report;
    }
    if (!(cert.target == target)) problem("target is not the rank normal form");
    const int independent = exact_rank(cert.input);
    if (independent != cert.rank)
      problem("rank " + std::to_string(cert.rank) + " differs from elimination rank " +
              std::to_string(independent));
    if (cert.family == Family::General) {
      if (!cert.c || cert.b_inverse.rows() != n || cert.c->rows() != n) {
        problem("general certificate needs B, B' and C");
        return report;
      }
      const double inv_err = (cert.b * cert.b_inverse).max_abs_diff(RationalMatrix::identity(n));
      if (inv_err != 0.0) problem("B * B' differs from the identity by " + std::to_string(inv_err));
      report.residual = (*cert.c * cert.input * cert.b_inverse).max_abs_diff(target);
      const Rational db = determinant(cert.b), dc = determinant(*cert.c);
      if (db != dc)
        problem("det B = " + rational_to_string(db) + " but det C = " + rational_to_string(dc));
    } else {
      report.residual = (cert.b * cert.input * cert.b.transpose()).max_abs_diff(target);
      const Rational db = determinant(cert.b);
      if (db != 1) problem("det B = " + rational_to_string(db) + ", expected 1");
    }
    if (report.residual != 0.0)
      problem("residual " + std::to_string(report.residual) + " is not exactly zero");
  } else {
    if (cert.input_f.rows() != n || cert.b_f.rows() != n || cert.b_f.cols() != n) {
      problem("matrix shapes do not match the certificate size");
      return report;
    }
    const CMatrix target = normal_form_target(cert.family, n, cert.rank).to_complex();
    report.residual = (cert.b_f * cert.input_f * cert.b_f.transpose() - target).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, cert.input_f.cwiseAbs().maxCoeff());
    if (!(report.residual <= tol * scale))
      problem("residual " + std::to_string(report.residual) + " exceeds tolerance");
    const double det_err = std::abs(cert.b_f.determinant() - Complex(1.0, 0.0));
    if (!(det_err <= tol)) problem("|det B - 1| = " + std::to_string(det_err) + " exceeds tolerance");
  }
  return report;
}

}  // namespace singcoh
