#pragma once

// Normal slices to rank strata, local links, Alexander-dual degrees and the
// degree bookkeeping of the relative Gysin map from a local link into the
// global link.

#include <string>
#include <vector>

#include "singcoh/catalog.hpp"

namespace singcoh {

/// Normal slice M' through a stratum of rank r in M.
struct StratumSlice {
  MatrixKind ambient;
  int rank = 0;
  /// m - r for square kinds, p - r for rectangular kinds.
  int corank = 0;
  /// Same family at size m - r, or Rectangular(m - r, p - r).  May be a
  /// size-one member.
  MatrixKind slice;
  int ambient_dimension = 0;  // complex
  int slice_dimension = 0;
};

/// Errors: rank outside [0, generic rank), odd rank for skew kinds.
StratumSlice stratum_slice(const MatrixKind& kind, int rank);
/// Same slice addressed by corank ell = generic rank - rank.
StratumSlice stratum_slice_for_corank(const MatrixKind& kind, int ell);

/// Degree increase q = dim_R M - dim_R M' of the Gysin map for corank ell.
/// Cross-checked against the closed forms 2(m^2 - l^2), (m-l)(m+l+1),
/// (m-l)(m+l-1) and 2(mp - (m-p+l) l).
int gysin_shift(const MatrixKind& kind, int ell);

/// 2N - 2 - d, for 0 < d <= 2N - 2.
int alexander_dual_degree(int n, int d);

struct GysinEntry {
  std::string label;    // monomial of the slice complement algebra, e.g. "e1*e5"
  int degree = 0;       // its degree
  int local_degree = 0;   // Alexander dual in the local link
  int global_degree = 0;  // Alexander dual in the global link
};

struct GysinMap {
  StratumSlice slice;
  int q = 0;
  std::vector<GysinEntry> entries;  // in monomial basis order
};

/// Errors: invalid corank, slices of size one, missing generators in the
/// ambient complement algebra.
GysinMap gysin_map(const MatrixKind& kind, int ell,
                   Coefficients coeff = Coefficients::CharZeroField);

struct LocalLink {
  StratumSlice slice;
  LinkCohomology link;
};

/// Link of the variety of the slice kind.  Errors: as catalog, plus slices of
/// size one.
LocalLink local_link_cohomology(const MatrixKind& kind, int ell,
                                Coefficients coeff = Coefficients::CharZeroField);

}  // namespace singcoh
