#pragma once

// Closed-form cohomology of the universal varieties of singular matrices:
// Milnor fibers (square kinds), complements, and links, together with the
// generator-level restriction maps induced by the block inclusions between
// consecutive sizes.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singcoh/grading.hpp"

namespace singcoh {

enum class Family { General, Symmetric, SkewSymmetric, Rectangular };
enum class Coefficients { Integers, ModTwo, CharZeroField };
enum class SpaceSelector { MilnorFiber, Complement, Link };

std::string_view to_string(Family family);
std::string_view to_string(Coefficients coefficients);
std::string_view to_string(SpaceSelector space);

/// Accepts "general", "sym"/"symmetric", "skew"/"skew-symmetric", "rect"/"rectangular".
Family parse_family(std::string_view text);
/// Accepts "Z"/"int"/"integers", "mod2"/"Z2", "Q"/"char0"/"field".
Coefficients parse_coefficients(std::string_view text);
/// Accepts "milnor", "complement", "link".
SpaceSelector parse_space(std::string_view text);

/// Which variety of singular matrices is in play.
///
/// Public factories enforce m >= 2 (and m > p >= 2 for rectangular kinds,
/// after transposing when m < p).  `restricted()` also admits the size-one
/// members (1x1 matrices, V_1(C^m)) reached at the bottom of restriction
/// chains; those are never valid targets for link computations.
class MatrixKind {
 public:
  static MatrixKind general(int m);
  static MatrixKind symmetric(int m);
  static MatrixKind skew_symmetric(int m);
  /// m x p with m != p; inputs with m < p are transposed.
  static MatrixKind rectangular(int m, int p);
  static MatrixKind make(Family family, int m, int p = 0);
  static MatrixKind restricted(Family family, int m, int p = 0);

  Family family() const { return family_; }
  int m() const { return m_; }
  /// Column count; equals m for square kinds.
  int p() const { return family_ == Family::Rectangular ? p_ : m_; }
  bool is_square() const { return family_ != Family::Rectangular; }
  bool transposed() const { return transposed_; }
  /// Size below the public minimum, only reachable through restriction.
  bool is_degenerate() const;

  /// Size used by kite and detection arguments: m for square kinds, p for
  /// rectangular kinds (the generic rank).
  int generic_rank() const { return is_square() ? m_ : p_; }

  /// Complex dimension N of the matrix space: m^2, C(m+1,2), C(m,2), m*p.
  int complex_dimension() const;
  int real_dimension() const { return 2 * complex_dimension(); }

  /// Next member of the inclusion tower (m-1, m-2 for skew, (m-1,p-1)).
  std::optional<MatrixKind> smaller() const;

  /// e.g. "symmetric(4)", "rectangular(5,4)".
  std::string to_string() const;

  friend bool operator==(const MatrixKind& a, const MatrixKind& b) {
    return a.family_ == b.family_ && a.m_ == b.m_ && a.p() == b.p();
  }

 private:
  MatrixKind(Family family, int m, int p, bool transposed)
      : family_(family), m_(m), p_(p), transposed_(transposed) {}

  Family family_;
  int m_;
  int p_;
  bool transposed_;
};

/// Milnor-fiber cohomology of a square kind.  Symmetric kinds require ModTwo
/// or CharZeroField coefficients.
GradedAlgebra milnor_fiber_cohomology(const MatrixKind& kind, Coefficients coeff);

/// Cohomology of the complement of the singular matrices.  Symmetric kinds
/// require CharZeroField coefficients.
GradedAlgebra complement_cohomology(const MatrixKind& kind, Coefficients coeff);

struct LinkCohomology {
  GradedVectorSpace space;
  int shift = 0;
};

/// Link cohomology: the complement algebra truncated in its top degree and
/// shifted.  Field coefficients only.
LinkCohomology link_of_variety_cohomology(const MatrixKind& kind, Coefficients coeff);

/// Amount by which the truncated complement algebra is shifted to give the
/// link cohomology of the variety itself.
int link_shift(const MatrixKind& kind);

/// Compact homotopy model of the requested space, as display text.
std::string compact_model(const MatrixKind& kind, SpaceSelector space);

/// Generator-level map induced on cohomology by the inclusion of the next
/// smaller member of the tower.  Each source generator (the module generator
/// included) maps to the same-named target generator or to zero.
struct RestrictionMap {
  MatrixKind source;
  MatrixKind target;
  SpaceSelector space;
  Coefficients coefficients;
  GradedAlgebra source_algebra;
  GradedAlgebra target_algebra;
  /// (source label, image label or nullopt for zero), in source order.
  std::vector<std::pair<std::string, std::optional<std::string>>> images;

  std::optional<std::string> image_of(const std::string& label) const;
  std::vector<std::string> killed() const;
};

RestrictionMap inclusion_restriction(const MatrixKind& kind, Coefficients coeff,
                                     SpaceSelector space = SpaceSelector::MilnorFiber);

/// Composes inclusion_restriction maps from `kind` down to the member whose
/// generic rank is `ell`, and returns the exterior subalgebra spanned by the
/// source generators that survive every step.
GradedAlgebra restriction_image(const MatrixKind& kind, int ell, Coefficients coeff,
                                SpaceSelector space);

}  // namespace singcoh
