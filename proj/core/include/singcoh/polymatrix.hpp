#pragma once

// Matrices of exact polynomials: determinants, Pfaffians, specialization and
// verification of row/column-operation witnesses.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singcoh/catalog.hpp"
#include "singcoh/polynomial.hpp"

namespace singcoh {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  /// Zero matrix.  `kind_tag` is checked lazily by validate_tag().
  PolyMatrix(int rows, int cols, std::optional<Family> kind_tag = std::nullopt,
             std::vector<std::string> variables = {});

  static PolyMatrix identity(int n, std::vector<std::string> variables = {});
  /// Parses every entry with parse_polynomial against `variables`, then
  /// validates the tag.
  static PolyMatrix parse(const std::vector<std::vector<std::string>>& entries,
                          const std::vector<std::string>& variables,
                          std::optional<Family> kind_tag = std::nullopt);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Polynomial& at(int i, int j) const;
  Polynomial& at(int i, int j);

  std::optional<Family> kind_tag() const { return kind_tag_; }
  /// Sets the tag and validates the entries against it.
  void set_kind_tag(std::optional<Family> tag);
  /// Throws InvalidArgument when the entries violate the tag's symmetry.
  void validate_tag() const;

  /// Declared variable names (may be empty when built programmatically).
  const std::vector<std::string>& variables() const { return variables_; }
  void set_variables(std::vector<std::string> variables) { variables_ = std::move(variables); }
  /// Declared names united with every name occurring in an entry, sorted.
  std::vector<std::string> all_variables() const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_constant() const;

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  /// Entry-wise equality; tags and declared variables are ignored.
  bool same_entries(const PolyMatrix& other) const;

  /// Applies a polynomial substitution to every entry.
  PolyMatrix substitute(const std::map<std::string, Polynomial>& replacements) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Polynomial> entries_;
  std::optional<Family> kind_tag_;
  std::vector<std::string> variables_;
};

/// Exact determinant.  Constant matrices go through fraction-free Bareiss
/// elimination; symbolic ones through cofactor expansion memoized over
/// column subsets, cross-checked against Bareiss up to size 6.
Polynomial determinant(const PolyMatrix& a);
Polynomial determinant_bareiss(const PolyMatrix& a);
Polynomial determinant_cofactor(const PolyMatrix& a);

/// Pfaffian by expansion along the first row (memoized over index subsets).
/// Requires a skew-symmetric, even-sized matrix.
Polynomial pfaffian(const PolyMatrix& a);

/// Evaluates the assigned variables; others stay symbolic and remain declared.
PolyMatrix specialize(const PolyMatrix& a, const std::map<std::string, Rational>& assignment);

/// Group element acting on a germ f:
///   symmetric / skew kinds:       f  ->  B (f o s) B^T
///   general / rectangular kinds:  f  ->  B (f o s) C'
/// where s is a coordinate change fixing the origin.  Inverses are supplied,
/// never computed, and checked symbolically.
struct OpWitness {
  PolyMatrix left;
  PolyMatrix left_inverse;
  std::optional<PolyMatrix> right;
  std::optional<PolyMatrix> right_inverse;
  /// Variable -> polynomial; variables not listed are fixed.
  std::map<std::string, Polynomial> substitution;
  std::map<std::string, Polynomial> substitution_inverse;

  static OpWitness identity(int rows, int cols = 0);
};

/// Throws VerificationError naming the violated constraint.  `family` selects
/// the determinant rule; `rows`/`cols` are the shape of the germ acted on.
void verify_witness(const OpWitness& w, Family family, int rows, int cols);

/// Verifies `w` against f's tag (General if untagged) and applies it.  The
/// tag is kept and re-validated on the result.
PolyMatrix apply_witness(const PolyMatrix& f, const OpWitness& w);

}  // namespace singcoh
