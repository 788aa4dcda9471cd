#pragma once

// Cohomology guaranteed in the Milnor fiber, complement and link of a matrix
// singularity whose defining germ contains a kite map of a given size.

#include <optional>
#include <string>
#include <vector>

#include "singcoh/catalog.hpp"
#include "singcoh/grading.hpp"

namespace singcoh {

struct DetectedGenerator {
  GeneratorLabel label;
  bool guaranteed = true;
};

struct DetectionResult {
  SpaceSelector target;
  MatrixKind kind;
  int ell = 0;
  Coefficients coefficients;
  /// Subalgebra spanned by the guaranteed generators.  For Link targets this
  /// is the complement detection algebra the link data is derived from.
  GradedAlgebra algebra;
  /// Every emitted generator; unguaranteed ones are not in `algebra`.
  std::vector<DetectedGenerator> generators;
  /// Link targets only.
  std::optional<GradedVectorSpace> link_space;
  std::optional<int> shift;
  std::optional<int> source_dimension;
  std::string provenance;
  std::vector<std::string> notes;

  /// Betti table of `algebra`, or the link space for Link targets.
  GradedVectorSpace betti() const;
};

/// Square kinds, 1 <= ell < m (even for skew).  Symmetric kinds need ModTwo
/// or CharZeroField coefficients.
DetectionResult detect_milnor(const MatrixKind& kind, int ell, Coefficients coeff);

/// Square kinds with 1 <= ell < m, rectangular kinds with 1 <= ell <= p.
DetectionResult detect_complement(const MatrixKind& kind, int ell, Coefficients coeff);

/// `n` is the complex dimension of the germ's source.  Field coefficients only.
DetectionResult detect_link(const MatrixKind& kind, int n, int ell,
                            Coefficients coeff = Coefficients::CharZeroField);

/// Shift applied to the truncated complement detection algebra.
int detection_link_shift(const MatrixKind& kind, int n, int ell);

/// Dispatches on `space`; `n` is only used for links.
DetectionResult detect(const MatrixKind& kind, SpaceSelector space, int ell, Coefficients coeff,
                       std::optional<int> n = std::nullopt);

}  // namespace singcoh
