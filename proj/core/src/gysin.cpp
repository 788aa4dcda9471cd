#include "singcoh/gysin.hpp"

#include <algorithm>

#include "singcoh/error.hpp"
#include "singcoh/grading.hpp"

namespace singcoh {

StratumSlice stratum_slice(const MatrixKind& kind, int rank) {
  const int g = kind.generic_rank();
  require(rank >= 0 && rank < g, "stratum rank must lie in [0, " + std::to_string(g) + ")");
  StratumSlice s{kind, rank, g - rank, kind, kind.complex_dimension(), 0};
  if (kind.is_square()) {
    if (kind.family() == Family::SkewSymmetric)
      require(rank % 2 == 0, "skew-symmetric strata have even rank");
    s.slice = MatrixKind::restricted(kind.family(), kind.m() - rank);
  } else {
    s.slice = MatrixKind::restricted(Family::Rectangular, kind.m() - rank, kind.p() - rank);
  }
  s.slice_dimension = s.slice.complex_dimension();
  return s;
}

StratumSlice stratum_slice_for_corank(const MatrixKind& kind, int ell) {
  const int g = kind.generic_rank();
  require(ell >= 1 && ell <= g, "corank must lie in [1, " + std::to_string(g) + "]");
  return stratum_slice(kind, g - ell);
}

int gysin_shift(const MatrixKind& kind, int ell) {
  const auto s = stratum_slice_for_corank(kind, ell);
  const int q = 2 * (s.ambient_dimension - s.slice_dimension);
  const int m = kind.m(), p = kind.p();
  int closed = 0;
  switch (kind.family()) {
    case Family::General: closed = 2 * (m * m - ell * ell); break;
    case Family::Symmetric: closed = (m - ell) * (m + ell + 1); break;
    case Family::SkewSymmetric: closed = (m - ell) * (m + ell - 1); break;
    case Family::Rectangular: closed = 2 * (m * p - (m - p + ell) * ell); break;
  }
  if (closed != q)
    fail(ErrorCode::Verification, "closed-form shift " + std::to_string(closed) +
                                      " disagrees with the dimension count " + std::to_string(q));
  return q;
}

int alexander_dual_degree(int n, int d) {
  require(n >= 1, "ambient dimension must be positive");
  require(d > 0 && d <= 2 * n - 2, "class degree " + std::to_string(d) + " outside (0, " +
                                       std::to_string(2 * n - 2) + "]");
  return 2 * n - 2 - d;
}

namespace {

void require_proper_slice(const StratumSlice& s) {
  require(!s.slice.is_degenerate(),
          "slice " + s.slice.to_string() + " has size < 2; the stratum has no local link");
}

}  // namespace

GysinMap gysin_map(const MatrixKind& kind, int ell, Coefficients coeff) {
  GysinMap map{stratum_slice_for_corank(kind, ell), gysin_shift(kind, ell), {}};
  require_proper_slice(map.slice);
  const auto local = complement_cohomology(map.slice.slice, coeff);
  const auto global = complement_cohomology(kind, coeff);
  for (const auto& name : local.generator_names())
    if (!global.index_of(name))
      fail(ErrorCode::Verification,
           "slice generator " + name + " does not survive in " + kind.to_string());
  for (const auto& mono : monomial_basis(local)) {
    if (mono.degree == 0) continue;
    GysinEntry e{mono.label(local), mono.degree,
                 alexander_dual_degree(map.slice.slice_dimension, mono.degree),
                 alexander_dual_degree(map.slice.ambient_dimension, mono.degree)};
    if (e.global_degree != e.local_degree + map.q)
      fail(ErrorCode::Verification, "Gysin degree increase differs from q for " + e.label);
    map.entries.push_back(std::move(e));
  }
  return map;
}

LocalLink local_link_cohomology(const MatrixKind& kind, int ell, Coefficients coeff) {
  const auto slice = stratum_slice_for_corank(kind, ell);
  require_proper_slice(slice);
  return {slice, link_of_variety_cohomology(slice.slice, coeff)};
}

}  // namespace singcoh
