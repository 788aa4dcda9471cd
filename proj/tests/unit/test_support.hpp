#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "singcoh/normalform.hpp"
#include "singcoh/polymatrix.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture(const std::string& name) {
  return std::string(SINGCOH_FIXTURES) + "/" + name;
}

inline std::string var(const std::string& stem, int i, int j) {
  return stem + std::to_string(i) + "_" + std::to_string(j);
}

/// n x n matrix with independent variables a{i}_{j} in every slot.
inline singcoh::PolyMatrix generic_matrix(int n, const std::string& stem = "a") {
  singcoh::PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = singcoh::Polynomial::variable(var(stem, i + 1, j + 1));
  return m;
}

/// Generic skew-symmetric matrix with variables a{i}_{j}, i < j.
inline singcoh::PolyMatrix generic_skew(int n, const std::string& stem = "a") {
  singcoh::PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto v = singcoh::Polynomial::variable(var(stem, i + 1, j + 1));
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  m.set_kind_tag(singcoh::Family::SkewSymmetric);
  return m;
}

/// Leibniz-formula determinant, the textbook oracle.
inline singcoh::Polynomial leibniz(const singcoh::PolyMatrix& a) {
  const int n = a.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  singcoh::Polynomial acc;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    singcoh::Polynomial term(1);
    for (int i = 0; i < n && !term.is_zero(); ++i) term *= a.at(i, perm[static_cast<std::size_t>(i)]);
    if (inversions % 2) acc -= term;
    else acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

inline singcoh::Rational random_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 5);
  singcoh::Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline singcoh::RationalMatrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    singcoh::RationalMatrix x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x.at(i, j) = random_rational(rng, 3);
    if (singcoh::determinant(x) != 0) return x;
  }
}

/// Random matrix of the given family with rank exactly `rank`, built as a
/// transform of a diagonal (or symplectic) core.
inline singcoh::RationalMatrix random_of_rank(std::mt19937_64& rng, singcoh::Family family, int n,
                                              int rank) {
  singcoh::RationalMatrix core(n, n);
  for (int k = 0; k < rank; ++k) {
    singcoh::Rational d = 0;
    while (d == 0) d = random_rational(rng, 3);
    if (family == singcoh::Family::SkewSymmetric) {
      if (k % 2 == 1) continue;
      core.at(k, k + 1) = d;
      core.at(k + 1, k) = -d;
    } else {
      core.at(k, k) = d;
    }
  }
  const auto x = random_invertible(rng, n);
  if (family == singcoh::Family::General) return x * core * random_invertible(rng, n);
  return x * core * x.transpose();
}

}  // namespace testsupport
