#include "singcoh/polymatrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "singcoh/error.hpp"

namespace singcoh {

PolyMatrix::PolyMatrix(int rows, int cols, std::optional<Family> kind_tag,
                       std::vector<std::string> variables)
    : rows_(rows), cols_(cols), kind_tag_(kind_tag), variables_(std::move(variables)) {
  require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
  entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

PolyMatrix PolyMatrix::identity(int n, std::vector<std::string> variables) {
  PolyMatrix m(n, n, std::nullopt, std::move(variables));
  for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial(1);
  return m;
}

PolyMatrix PolyMatrix::parse(const std::vector<std::vector<std::string>>& entries,
                             const std::vector<std::string>& variables,
                             std::optional<Family> kind_tag) {
  require(!entries.empty() && !entries.front().empty(), "matrix needs at least one entry");
  const int rows = static_cast<int>(entries.size());
  const int cols = static_cast<int>(entries.front().size());
  std::set<std::string> seen;
  for (const auto& v : variables) require(seen.insert(v).second, "duplicate variable " + v);
  PolyMatrix m(rows, cols, std::nullopt, variables);
  for (int i = 0; i < rows; ++i) {
    require(static_cast<int>(entries[static_cast<std::size_t>(i)].size()) == cols,
            "row " + std::to_string(i + 1) + " has the wrong number of entries");
    for (int j = 0; j < cols; ++j) {
      const auto& text = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      try {
        m.at(i, j) = parse_polynomial(text, variables);
      } catch (const ParseError& e) {
        throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") '" + text + "': " + e.what(),
                         e.position());
      }
    }
  }
  m.set_kind_tag(kind_tag);
  return m;
}

const Polynomial& PolyMatrix::at(int i, int j) const {
  require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
}

Polynomial& PolyMatrix::at(int i, int j) {
  require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
}

void PolyMatrix::set_kind_tag(std::optional<Family> tag) {
  kind_tag_ = tag;
  validate_tag();
}

void PolyMatrix::validate_tag() const {
  if (!kind_tag_) return;
  const auto where = [](int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  switch (*kind_tag_) {
    case Family::General:
      require(is_square(), "general matrices must be square");
      return;
    case Family::Rectangular:
      require(!is_square(), "rectangular matrices must not be square");
      return;
    case Family::Symmetric:
      require(is_square(), "symmetric matrices must be square");
      for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
          require(at(i, j) == at(j, i), "symmetric tag violated at " + where(i, j));
      return;
    case Family::SkewSymmetric:
      require(is_square(), "skew-symmetric matrices must be square");
      for (int i = 0; i < rows_; ++i) {
        require(at(i, i).is_zero(), "skew-symmetric tag needs a zero diagonal at " + where(i, i));
        for (int j = i + 1; j < cols_; ++j)
          require(at(i, j) == -at(j, i), "skew-symmetric tag violated at " + where(i, j));
      }
      return;
  }
}

std::vector<std::string> PolyMatrix::all_variables() const {
  std::set<std::string> names(variables_.begin(), variables_.end());
  for (const auto& p : entries_) {
    auto v = p.variables();
    names.insert(v.begin(), v.end());
  }
  return {names.begin(), names.end()};
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMatrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(at(i, j) == Polynomial(i == j ? 1 : 0))) return false;
  return true;
}

bool PolyMatrix::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_constant(); });
}

PolyMatrix PolyMatrix::transpose() const {
  std::optional<Family> tag = kind_tag_;
  PolyMatrix t(cols_, rows_, std::nullopt, variables_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  t.kind_tag_ = tag;
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  require(cols_ == other.rows_, "matrix product dimension mismatch");
  PolyMatrix out(rows_, other.cols_, std::nullopt, variables_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Polynomial& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Polynomial& b = other.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum dimension mismatch");
  PolyMatrix out = *this;
  out.kind_tag_.reset();
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix difference dimension mismatch");
  PolyMatrix out = *this;
  out.kind_tag_.reset();
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
  return out;
}

bool PolyMatrix::same_entries(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

PolyMatrix PolyMatrix::substitute(const std::map<std::string, Polynomial>& replacements) const {
  PolyMatrix out = *this;
  if (replacements.empty()) return out;
  for (auto& p : out.entries_) p = p.substitute(replacements);
  return out;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back(at(i, j).to_string());
  return out;
}

// ------------------------------------------------------------ determinants

Polynomial determinant_bareiss(const PolyMatrix& a) {
  require(a.is_square(), "determinant of a non-square matrix");
  const int n = a.rows();
  std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)].push_back(a.at(i, j));

  auto cell = [&](int i, int j) -> Polynomial& {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  bool negate = false;
  Polynomial previous(1);
  for (int k = 0; k < n - 1; ++k) {
    if (cell(k, k).is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n && pivot < 0; ++i)
        if (!cell(i, k).is_zero()) pivot = i;
      if (pivot < 0) return Polynomial();
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pivot)]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const Polynomial numerator = cell(k, k) * cell(i, j) - cell(i, k) * cell(k, j);
        auto q = numerator.divide_exact(previous);
        if (!q) fail(ErrorCode::Verification, "Bareiss step produced an inexact division");
        cell(i, j) = std::move(*q);
      }
      cell(i, k) = Polynomial();
    }
    previous = cell(k, k);
  }
  Polynomial det = cell(n - 1, n - 1);
  return negate ? -det : det;
}

Polynomial determinant_cofactor(const PolyMatrix& a) {
  require(a.is_square(), "determinant of a non-square matrix");
  const int n = a.rows();
  require(n <= 24, "cofactor expansion limited to size 24");
  // minor(S) = determinant of rows n-|S|..n-1 restricted to the columns in S.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  const auto minor = [&](auto&& self, std::uint32_t cols) -> Polynomial {
    if (cols == 0) return Polynomial(1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    const int row = n - std::popcount(cols);
    Polynomial acc;
    int position = 0;
    for (int j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      const Polynomial& entry = a.at(row, j);
      if (!entry.is_zero()) {
        Polynomial term = entry * self(self, cols & ~(1u << j));
        if (position % 2) acc -= term;
        else acc += term;
      }
      ++position;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor(minor, (1u << n) - 1u);
}

Polynomial determinant(const PolyMatrix& a) {
  require(a.is_square(), "determinant of a non-square matrix");
  if (a.is_constant()) return determinant_bareiss(a);
  Polynomial det = determinant_cofactor(a);
  if (a.rows() <= 6 && !(determinant_bareiss(a) == det))
    fail(ErrorCode::Verification, "determinant cross-check between Bareiss and cofactor failed");
  return det;
}

Polynomial pfaffian(const PolyMatrix& a) {
  require(a.is_square(), "Pfaffian of a non-square matrix");
  require(a.rows() % 2 == 0, "Pfaffian needs an even-sized matrix");
  if (a.kind_tag() != Family::SkewSymmetric) {
    PolyMatrix tagged = a;
    tagged.set_kind_tag(Family::SkewSymmetric);
  } else {
    a.validate_tag();
  }
  const int n = a.rows();
  require(n <= 30, "Pfaffian expansion limited to size 30");
  std::unordered_map<std::uint32_t, Polynomial> memo;
  const auto pf = [&](auto&& self, std::uint32_t set) -> Polynomial {
    if (set == 0) return Polynomial(1);
    auto it = memo.find(set);
    if (it != memo.end()) return it->second;
    const int first = std::countr_zero(set);
    const std::uint32_t rest = set & ~(1u << first);
    Polynomial acc;
    int position = 0;  // 0-based position of j among the indices after `first`
    for (int j = first + 1; j < n; ++j) {
      if (!(rest & (1u << j))) continue;
      const Polynomial& entry = a.at(first, j);
      if (!entry.is_zero()) {
        Polynomial term = entry * self(self, rest & ~(1u << j));
        if (position % 2) acc -= term;
        else acc += term;
      }
      ++position;
    }
    memo.emplace(set, acc);
    return acc;
  };
  return pf(pf, (1u << n) - 1u);
}

PolyMatrix specialize(const PolyMatrix& a, const std::map<std::string, Rational>& assignment) {
  const auto& declared = a.variables();
  for (const auto& [name, value] : assignment)
    require(declared.empty() || std::find(declared.begin(), declared.end(), name) != declared.end(),
            "assignment references unknown variable " + name);
  std::vector<std::string> remaining;
  for (const auto& v : declared)
    if (!assignment.count(v)) remaining.push_back(v);
  PolyMatrix out(a.rows(), a.cols(), std::nullopt, remaining);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j).evaluate(assignment);
  out.set_kind_tag(a.kind_tag());
  return out;
}

// ---------------------------------------------------------------- witness

OpWitness OpWitness::identity(int rows, int cols) {
  OpWitness w{PolyMatrix::identity(rows), PolyMatrix::identity(rows), std::nullopt, std::nullopt,
              {}, {}};
  if (cols > 0) {
    w.right = PolyMatrix::identity(cols);
    w.right_inverse = PolyMatrix::identity(cols);
  }
  return w;
}

namespace {

void check_square(const PolyMatrix& m, int n, const std::string& name) {
  if (m.rows() != n || m.cols() != n)
    throw VerificationError(name + " shape",
                            "expected " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void check_inverse_pair(const PolyMatrix& x, const PolyMatrix& x_inv, const std::string& name) {
  if (!(x * x_inv).is_identity())
    throw VerificationError(name + "*" + name + "_inverse=I",
                            "product is not the identity matrix");
}

// Composition check: every variable v satisfies outer(inner(v)) = v.
void check_composition(const std::map<std::string, Polynomial>& inner,
                       const std::map<std::string, Polynomial>& outer,
                       const std::set<std::string>& domain, const std::string& label) {
  for (const auto& v : domain) {
    auto it = inner.find(v);
    const Polynomial image = it == inner.end() ? Polynomial::variable(v) : it->second;
    if (!(image.substitute(outer) == Polynomial::variable(v)))
      throw VerificationError(label, "composite does not fix " + v);
  }
}

}  // namespace

void verify_witness(const OpWitness& w, Family family, int rows, int cols) {
  check_square(w.left, rows, "left");
  check_square(w.left_inverse, rows, "left_inverse");
  check_inverse_pair(w.left, w.left_inverse, "left");

  const bool two_sided = family == Family::General || family == Family::Rectangular;
  if (two_sided) {
    if (!w.right || !w.right_inverse)
      throw VerificationError("right pair present",
                              "general and rectangular actions need right and right_inverse");
    check_square(*w.right, cols, "right");
    check_square(*w.right_inverse, cols, "right_inverse");
    check_inverse_pair(*w.right, *w.right_inverse, "right");
  } else if (w.right || w.right_inverse) {
    throw VerificationError("no right pair",
                            "symmetric and skew-symmetric actions are congruences B f B^T");
  }

  const Polynomial det_left = determinant(w.left);
  switch (family) {
    case Family::Symmetric:
    case Family::SkewSymmetric:
      if (!(det_left == Polynomial(1)))
        throw VerificationError("det(left)=1", "det(left) = " + det_left.to_string());
      break;
    case Family::General: {
      const Polynomial det_right = determinant(*w.right);
      if (!(det_left == det_right))
        throw VerificationError("det(left)=det(right)", "det(left) = " + det_left.to_string() +
                                                             ", det(right) = " +
                                                             det_right.to_string());
      break;
    }
    case Family::Rectangular: {
      const Polynomial det_right = determinant(*w.right);
      if (!det_left.is_constant() || det_left.is_zero())
        throw VerificationError("det(left) unit", "det(left) = " + det_left.to_string());
      if (!det_right.is_constant() || det_right.is_zero())
        throw VerificationError("det(right) unit", "det(right) = " + det_right.to_string());
      break;
    }
  }

  if (w.substitution.empty() != w.substitution_inverse.empty())
    throw VerificationError("substitution_inverse present",
                            "a coordinate change needs both directions");
  std::set<std::string> domain;
  for (const auto& [v, p] : w.substitution) {
    domain.insert(v);
    auto names = p.variables();
    domain.insert(names.begin(), names.end());
  }
  for (const auto& [v, p] : w.substitution_inverse) {
    domain.insert(v);
    auto names = p.variables();
    domain.insert(names.begin(), names.end());
  }
  for (const auto& [v, p] : w.substitution) {
    if (!p.is_zero() && std::prev(p.terms().end())->first.is_one())
      throw VerificationError("substitution fixes origin", "image of " + v + " has a constant term");
  }
  check_composition(w.substitution_inverse, w.substitution, domain,
                    "substitution o substitution_inverse=id");
  check_composition(w.substitution, w.substitution_inverse, domain,
                    "substitution_inverse o substitution=id");
}

PolyMatrix apply_witness(const PolyMatrix& f, const OpWitness& w) {
  const Family family = f.kind_tag().value_or(Family::General);
  verify_witness(w, family, f.rows(), f.cols());
  const PolyMatrix moved = f.substitute(w.substitution);
  const bool congruence = family == Family::Symmetric || family == Family::SkewSymmetric;
  PolyMatrix out = congruence ? w.left * moved * w.left.transpose()
                              : w.left * moved * *w.right_inverse;
  out.set_variables(f.variables());
  out.set_kind_tag(f.kind_tag());
  return out;
}

}  // namespace singcoh
