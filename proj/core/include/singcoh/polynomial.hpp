#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace singcoh {

using Rational = mpq_class;

/// Power product: (variable name, exponent > 0) pairs sorted by name.
class PowerProduct {
 public:
  PowerProduct() = default;
  explicit PowerProduct(const std::string& variable, unsigned exponent = 1);

  const std::vector<std::pair<std::string, unsigned>>& factors() const { return factors_; }
  unsigned degree() const;
  unsigned exponent(const std::string& variable) const;
  bool is_one() const { return factors_.empty(); }

  PowerProduct operator*(const PowerProduct& other) const;
  /// this / other when other divides this.
  std::optional<PowerProduct> divide(const PowerProduct& other) const;

  /// "x11*x13^2"; empty for the unit.
  std::string to_string() const;

  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;

 private:
  std::vector<std::pair<std::string, unsigned>> factors_;
};

/// Graded lexicographic order, variables compared by name.  `operator()`
/// answers "a precedes b" with higher terms first.
struct GrlexDescending {
  bool operator()(const PowerProduct& a, const PowerProduct& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<PowerProduct, Rational, GrlexDescending>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit by design of arithmetic
  Polynomial(long constant) : Polynomial(Rational(constant)) {}
  Polynomial(int constant) : Polynomial(Rational(constant)) {}

  static Polynomial variable(const std::string& name);
  static Polynomial term(const Rational& coefficient, const PowerProduct& pp);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; requires is_constant().
  Rational constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;
  std::set<std::string> variables() const;

  /// If the polynomial is c*x for a single variable x, returns (c, x).
  std::optional<std::pair<Rational, std::string>> as_scaled_variable() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned exponent) const;

  /// Exact quotient; nullopt when `divisor` does not divide this polynomial.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Replaces the listed variables by polynomials (simultaneously).
  Polynomial substitute(const std::map<std::string, Polynomial>& replacements) const;
  /// Evaluates the listed variables at rationals; others stay symbolic.
  Polynomial evaluate(const std::map<std::string, Rational>& assignment) const;

  /// Canonical text, terms in descending grlex order: "x11 + 2*x13*x44 - 5".
  std::string to_string() const;

 private:
  void add_term(const PowerProduct& pp, const Rational& c);
  TermMap terms_;
};

/// Parses +, -, *, /, ^ (non-negative integer exponents), parentheses,
/// integer and rational literals and the declared variable names.  Division
/// is only allowed by non-zero constants.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

std::string rational_to_string(const Rational& q);
/// Accepts "3", "-3/4", "0.25" (finite decimals are converted exactly).
Rational parse_rational(const std::string& text);

}  // namespace singcoh
