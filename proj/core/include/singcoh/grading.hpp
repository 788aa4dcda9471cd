#pragma once

// Exterior-algebra presentations and graded vector spaces.
//
// Every cohomology answer in the library is an exterior algebra on
// homogeneous generators e_j (degree j), optionally tensored with a rank-2
// free module {1, e_m}.  Only the additive structure is modelled: the monomial
// basis, Betti numbers, Poincare polynomials and the set-complement duality.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace singcoh {

struct GeneratorLabel {
  std::string name;
  int degree = 0;

  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// Dense integer polynomial in one variable t; coefficient i multiplies t^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coefficients);

  static IntPoly one() { return IntPoly({1}); }
  /// 1 + t^d
  static IntPoly one_plus_power(int d);
  static IntPoly monomial(int d, std::int64_t c = 1);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(int degree) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t evaluate(std::int64_t t) const;

  IntPoly& operator+=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Exterior algebra on labelled generators of strictly increasing degree,
/// optionally extended by a module generator spanning {1, e_m}.  No product
/// rule is asserted for the module generator.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(std::vector<GeneratorLabel> generators,
                std::optional<GeneratorLabel> module_basis = std::nullopt);

  /// Generators named "e<d>" for each listed degree.
  static GradedAlgebra exterior(const std::vector<int>& degrees);

  const std::vector<GeneratorLabel>& generators() const { return generators_; }
  const std::optional<GeneratorLabel>& module_basis() const { return module_; }
  bool has_module_factor() const { return module_.has_value(); }

  std::vector<int> generator_degrees() const;
  std::vector<std::string> generator_names() const;
  std::optional<int> index_of(const std::string& name) const;

  /// Dimension of the basis: 2^g, doubled with a module factor.
  std::int64_t total_rank() const;
  int top_degree() const;

  /// e.g. "Lambda<e1,e5>" or "Lambda<e5>{1,e4}".
  std::string to_string() const;

  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

 private:
  std::vector<GeneratorLabel> generators_;
  std::optional<GeneratorLabel> module_;
};

/// Squarefree monomial; `factors` are generator indices in increasing order.
struct Monomial {
  std::vector<int> factors;
  int degree = 0;
  bool module = false;

  /// "1", "e1*e5", "e5*e4" (module generator last).
  std::string label(const GradedAlgebra& algebra) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Finite graded vector space: degree -> rank, zero ranks never stored.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  explicit GradedVectorSpace(std::map<int, std::int64_t> ranks);

  void add(int degree, std::int64_t rank = 1);
  std::int64_t rank(int degree) const;
  const std::map<int, std::int64_t>& ranks() const { return ranks_; }
  std::vector<int> degrees() const;
  /// Degrees listed with multiplicity, ascending.
  std::vector<int> degree_multiset() const;

  bool empty() const { return ranks_.empty(); }
  std::int64_t total_rank() const;
  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const GradedVectorSpace&,
                         const GradedVectorSpace&) = default;

 private:
  std::map<int, std::int64_t> ranks_;
};

/// All basis monomials sorted by (degree, generator indices, module flag).
std::vector<Monomial> monomial_basis(const GradedAlgebra& algebra);

GradedVectorSpace betti_table(const GradedAlgebra& algebra);

/// Drops every class in the single highest occupied degree.
GradedVectorSpace truncate_top(const GradedVectorSpace& space);

GradedVectorSpace shift(const GradedVectorSpace& space, int amount);

IntPoly poincare_polynomial(const GradedAlgebra& algebra);
IntPoly poincare_polynomial(const GradedVectorSpace& space);

/// Complementary squarefree monomial; signs are not tracked.
Monomial poincare_complement(const Monomial& monomial,
                             const GradedAlgebra& algebra);

}  // namespace singcoh
