#pragma once

// Linear kite subspaces, kite map germs, and certification that a polynomial
// germ contains a kite map after a coordinate-subspace specialization.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "singcoh/catalog.hpp"
#include "singcoh/polymatrix.hpp"

namespace singcoh {

/// Kite of size (square kinds) or length (rectangular kinds) `ell`.
struct KiteSpec {
  MatrixKind kind;
  int ell;

  /// Throws InvalidArgument unless 1 <= ell < m (square; even for skew) or
  /// 1 <= ell <= p (rectangular).
  void validate() const;
  /// p - ell for rectangular kinds, 0 otherwise.
  int r() const;
};

/// One spanning element of the kite space: +1 at `positive` and, for skew
/// generators, -1 at the transposed slot.  Symmetric generators carry both
/// (i,j) and (j,i) in `positive`.  Indices are 0-based.
struct KiteGenerator {
  std::string label;  // e.g. "E1_2", "Esy1_2", "Esk4_5"
  std::vector<std::pair<int, int>> positive;
  std::vector<std::pair<int, int>> negative;
  bool tail = false;
  /// Name of the fresh variable placed on this generator by linear_kite_map.
  std::string variable;
};

std::vector<KiteGenerator> kite_generators(const KiteSpec& spec);
/// The generators as 0/+-1 constant matrices.
std::vector<PolyMatrix> kite_basis(const KiteSpec& spec);
/// Closed-form dimension of the kite space.
int kite_dimension(const KiteSpec& spec);

/// One fresh variable "k<i>_<j>" per generator, placed on its slots.
PolyMatrix linear_kite_map(const KiteSpec& spec);

enum class CertificateLevel { ExactLinear, WitnessedUnfurled, Failed };
std::string_view to_string(CertificateLevel level);

struct KiteMismatch {
  int row = 0;  // 1-based
  int col = 0;
  std::string expected;
  std::string found;
  std::string reason;
};

/// How the specialized (and possibly transformed) germ matches the pattern:
/// germ entry (row_perm[i], col_perm[j]) = scale * variable_map[k] wherever
/// the linear kite carries +-k at (i, j).
struct KiteMatch {
  std::vector<int> row_perm;  // 0-based
  std::vector<int> col_perm;
  std::map<std::string, std::string> variable_map;  // fresh -> germ variable
};

struct KiteCertificate {
  CertificateLevel level = CertificateLevel::Failed;
  KiteSpec spec;
  std::map<std::string, Rational> assignment;
  std::optional<OpWitness> witness;
  /// Set when the germ was supplied as p x m and transposed before matching.
  bool transposed_input = false;
  std::optional<KiteMatch> match;
  std::optional<KiteMismatch> mismatch;
  /// The specialized germ that was matched (after the witness, if used).
  PolyMatrix matched;
};

/// Matches `f` against the linear kite of `spec` up to renaming of the fresh
/// variables onto f's variables, kind-compatible row/column permutation, and
/// per-entry nonzero rational scaling.  Returns the match or the first
/// mismatch under the identity permutation.
std::variant<KiteMatch, KiteMismatch> match_linear_kite(const PolyMatrix& f, const KiteSpec& spec);

/// Specializes f0 by the zero-assignment, tries an exact match, then the
/// witness.  Errors: assignment naming unknown variables or non-zero values,
/// tag/shape mismatch, invalid witness (VerificationError).
KiteCertificate certify_containment(const PolyMatrix& f0,
                                    const std::map<std::string, Rational>& assignment,
                                    const KiteSpec& spec,
                                    const std::optional<OpWitness>& witness = std::nullopt);

}  // namespace singcoh
