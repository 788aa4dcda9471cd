#include "singcoh/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "singcoh/error.hpp"

namespace singcoh {

namespace {

int binom2(int n) { return n * (n - 1) / 2; }

std::string lower(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// e_{step*j - offset} for j in [first, last]
std::vector<int> progression(int first, int last, int step, int offset) {
  std::vector<int> out;
  for (int j = first; j <= last; ++j) out.push_back(step * j - offset);
  return out;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::General: return "general";
    case Family::Symmetric: return "symmetric";
    case Family::SkewSymmetric: return "skew";
    case Family::Rectangular: return "rectangular";
  }
  return "?";
}

std::string_view to_string(Coefficients coefficients) {
  switch (coefficients) {
    case Coefficients::Integers: return "Z";
    case Coefficients::ModTwo: return "Z/2";
    case Coefficients::CharZeroField: return "char0";
  }
  return "?";
}

std::string_view to_string(SpaceSelector space) {
  switch (space) {
    case SpaceSelector::MilnorFiber: return "milnor";
    case SpaceSelector::Complement: return "complement";
    case SpaceSelector::Link: return "link";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  const std::string s = lower(text);
  if (s == "general" || s == "gen") return Family::General;
  if (s == "sym" || s == "symmetric") return Family::Symmetric;
  if (s == "skew" || s == "skew-symmetric" || s == "skewsymmetric") return Family::SkewSymmetric;
  if (s == "rect" || s == "rectangular") return Family::Rectangular;
  fail(ErrorCode::InvalidArgument, "unknown matrix kind '" + std::string(text) + "'");
}

Coefficients parse_coefficients(std::string_view text) {
  const std::string s = lower(text);
  if (s == "z" || s == "int" || s == "integers") return Coefficients::Integers;
  if (s == "mod2" || s == "z2" || s == "z/2") return Coefficients::ModTwo;
  if (s == "q" || s == "char0" || s == "field" || s == "k") return Coefficients::CharZeroField;
  fail(ErrorCode::InvalidArgument, "unknown coefficients '" + std::string(text) + "'");
}

SpaceSelector parse_space(std::string_view text) {
  const std::string s = lower(text);
  if (s == "milnor" || s == "milnor-fiber") return SpaceSelector::MilnorFiber;
  if (s == "complement") return SpaceSelector::Complement;
  if (s == "link") return SpaceSelector::Link;
  fail(ErrorCode::InvalidArgument, "unknown space '" + std::string(text) + "'");
}

// -------------------------------------------------------------- MatrixKind

MatrixKind MatrixKind::general(int m) {
  require(m >= 2, "general kind needs m >= 2");
  return MatrixKind(Family::General, m, m, false);
}

MatrixKind MatrixKind::symmetric(int m) {
  require(m >= 2, "symmetric kind needs m >= 2");
  return MatrixKind(Family::Symmetric, m, m, false);
}

MatrixKind MatrixKind::skew_symmetric(int m) {
  require(m >= 2 && m % 2 == 0, "skew-symmetric kind needs even m >= 2");
  return MatrixKind(Family::SkewSymmetric, m, m, false);
}

MatrixKind MatrixKind::rectangular(int m, int p) {
  require(m != p, "rectangular kind needs m != p; use the general kind for square matrices");
  const bool transposed = m < p;
  if (transposed) std::swap(m, p);
  require(p >= 2, "rectangular kind needs both dimensions >= 2");
  return MatrixKind(Family::Rectangular, m, p, transposed);
}

MatrixKind MatrixKind::make(Family family, int m, int p) {
  switch (family) {
    case Family::General:
    case Family::Symmetric:
    case Family::SkewSymmetric:
      require(p == 0 || p == m, "square kinds take a single size");
      if (family == Family::General) return general(m);
      if (family == Family::Symmetric) return symmetric(m);
      return skew_symmetric(m);
    case Family::Rectangular:
      return rectangular(m, p);
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

MatrixKind MatrixKind::restricted(Family family, int m, int p) {
  switch (family) {
    case Family::General:
    case Family::Symmetric:
      require(m >= 1, "matrix size must be positive");
      return MatrixKind(family, m, m, false);
    case Family::SkewSymmetric:
      return skew_symmetric(m);
    case Family::Rectangular:
      require(m > p && p >= 1, "rectangular tower member needs m > p >= 1");
      return MatrixKind(family, m, p, false);
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

bool MatrixKind::is_degenerate() const {
  return is_square() ? m_ < 2 : p_ < 2;
}

int MatrixKind::complex_dimension() const {
  switch (family_) {
    case Family::General: return m_ * m_;
    case Family::Symmetric: return binom2(m_ + 1);
    case Family::SkewSymmetric: return binom2(m_);
    case Family::Rectangular: return m_ * p_;
  }
  return 0;
}

std::optional<MatrixKind> MatrixKind::smaller() const {
  switch (family_) {
    case Family::General:
    case Family::Symmetric:
      if (m_ <= 1) return std::nullopt;
      return restricted(family_, m_ - 1);
    case Family::SkewSymmetric:
      if (m_ <= 2) return std::nullopt;
      return restricted(family_, m_ - 2);
    case Family::Rectangular:
      if (p_ <= 1) return std::nullopt;
      return restricted(family_, m_ - 1, p_ - 1);
  }
  return std::nullopt;
}

std::string MatrixKind::to_string() const {
  std::string s(singcoh::to_string(family_));
  s += "(" + std::to_string(m_);
  if (!is_square()) s += "," + std::to_string(p_);
  return s + ")";
}

// ----------------------------------------------------------- cohomology

GradedAlgebra milnor_fiber_cohomology(const MatrixKind& kind, Coefficients coeff) {
  const int m = kind.m();
  switch (kind.family()) {
    case Family::General:
      return GradedAlgebra::exterior(progression(2, m, 2, 1));
    case Family::SkewSymmetric:
      return GradedAlgebra::exterior(progression(2, m / 2, 4, 3));
    case Family::Symmetric: {
      if (coeff == Coefficients::Integers)
        fail(ErrorCode::Unsupported,
             "symmetric Milnor fiber cohomology is only available over Z/2 or a "
             "field of characteristic zero");
      if (coeff == Coefficients::ModTwo)
        return GradedAlgebra::exterior(progression(2, m, 1, 0));
      const int k = m / 2;
      if (m % 2 == 1) return GradedAlgebra::exterior(progression(2, k + 1, 4, 3));
      auto base = GradedAlgebra::exterior(progression(2, k, 4, 3));
      return GradedAlgebra(base.generators(), GeneratorLabel{"e" + std::to_string(m), m});
    }
    case Family::Rectangular:
      fail(ErrorCode::Unsupported, "rectangular kinds have no Milnor fiber");
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

GradedAlgebra complement_cohomology(const MatrixKind& kind, Coefficients coeff) {
  const int m = kind.m();
  switch (kind.family()) {
    case Family::General:
      return GradedAlgebra::exterior(progression(1, m, 2, 1));
    case Family::SkewSymmetric:
      return GradedAlgebra::exterior(progression(1, m / 2, 4, 3));
    case Family::Symmetric: {
      if (coeff != Coefficients::CharZeroField)
        fail(ErrorCode::Unsupported,
             "symmetric complement cohomology is only available over a field of "
             "characteristic zero");
      const int last = m % 2 == 1 ? (m + 1) / 2 : m / 2;
      return GradedAlgebra::exterior(progression(1, last, 4, 3));
    }
    case Family::Rectangular: {
      const int offset = 2 * (kind.m() - kind.p());
      std::vector<int> degrees;
      for (int j = 1; j <= kind.p(); ++j) degrees.push_back(offset + 2 * j - 1);
      return GradedAlgebra::exterior(degrees);
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

int link_shift(const MatrixKind& kind) {
  const int m = kind.m();
  switch (kind.family()) {
    case Family::Symmetric:
      return m % 2 == 1 ? binom2(m + 1) - 2 : binom2(m + 1) + m - 2;
    case Family::General: return m * m - 2;
    case Family::SkewSymmetric: return binom2(m) - 2;
    case Family::Rectangular: return kind.p() * kind.p() - 2;
  }
  return 0;
}

LinkCohomology link_of_variety_cohomology(const MatrixKind& kind, Coefficients coeff) {
  if (coeff != Coefficients::CharZeroField)
    fail(ErrorCode::Unsupported,
         "link cohomology is only available over a field of characteristic zero");
  require(!kind.is_degenerate(),
          "link cohomology needs a matrix space of size >= 2, got " + kind.to_string());
  const auto algebra = complement_cohomology(kind, coeff);
  const int s = link_shift(kind);
  require(s >= 0, "the singular locus of " + kind.to_string() + " is a point; its link is empty");
  return {shift(truncate_top(betti_table(algebra)), s), s};
}

std::string compact_model(const MatrixKind& kind, SpaceSelector space) {
  const std::string m = std::to_string(kind.m());
  const std::string p = std::to_string(kind.p());
  switch (space) {
    case SpaceSelector::MilnorFiber:
      switch (kind.family()) {
        case Family::General: return "SU_" + m;
        case Family::Symmetric: return "SU_" + m + "/SO_" + m;
        case Family::SkewSymmetric: return "SU_" + m + "/Sp_" + std::to_string(kind.m() / 2);
        case Family::Rectangular: return "none";
      }
      break;
    case SpaceSelector::Complement:
      switch (kind.family()) {
        case Family::General: return "U_" + m;
        case Family::Symmetric: return "U_" + m + "/O_" + m;
        case Family::SkewSymmetric: return "U_" + m + "/Sp_" + std::to_string(kind.m() / 2);
        case Family::Rectangular:
          return "V_" + p + "(C^" + m + ") = U_" + m + "/U_" + std::to_string(kind.m() - kind.p());
      }
      break;
    case SpaceSelector::Link:
      return "link in S^" + std::to_string(2 * kind.complex_dimension() - 1) +
             "; truncated complement cohomology shifted by " +
             std::to_string(link_shift(kind));
  }
  return "";
}

// ----------------------------------------------------------- restriction

std::optional<std::string> RestrictionMap::image_of(const std::string& label) const {
  for (const auto& [src, img] : images)
    if (src == label) return img;
  fail(ErrorCode::InvalidArgument, "no source generator named " + label);
}

std::vector<std::string> RestrictionMap::killed() const {
  std::vector<std::string> out;
  for (const auto& [src, img] : images)
    if (!img) out.push_back(src);
  return out;
}

namespace {

GradedAlgebra algebra_for(const MatrixKind& kind, Coefficients coeff, SpaceSelector space) {
  switch (space) {
    case SpaceSelector::MilnorFiber: return milnor_fiber_cohomology(kind, coeff);
    case SpaceSelector::Complement: return complement_cohomology(kind, coeff);
    case SpaceSelector::Link:
      fail(ErrorCode::InvalidArgument,
           "restriction maps are defined on Milnor fiber or complement algebras");
  }
  fail(ErrorCode::InvalidArgument, "unknown space");
}

bool has_label(const GradedAlgebra& algebra, const std::string& name) {
  if (algebra.index_of(name)) return true;
  return algebra.module_basis() && algebra.module_basis()->name == name;
}

}  // namespace

RestrictionMap inclusion_restriction(const MatrixKind& kind, Coefficients coeff,
                                     SpaceSelector space) {
  const auto target = kind.smaller();
  if (!target)
    fail(ErrorCode::InvalidArgument,
         kind.to_string() + " is too small to restrict to a smaller size");
  RestrictionMap map{kind,
                     *target,
                     space,
                     coeff,
                     algebra_for(kind, coeff, space),
                     algebra_for(*target, coeff, space),
                     {}};
  // Same-named classes correspond under the block inclusion; everything
  // else (the top generator of the tower step) restricts to zero.
  auto emit = [&](const std::string& name) {
    if (has_label(map.target_algebra, name)) map.images.emplace_back(name, name);
    else map.images.emplace_back(name, std::nullopt);
  };
  for (const auto& g : map.source_algebra.generators()) emit(g.name);
  if (map.source_algebra.module_basis()) emit(map.source_algebra.module_basis()->name);
  return map;
}

GradedAlgebra restriction_image(const MatrixKind& kind, int ell, Coefficients coeff,
                                SpaceSelector space) {
  require(ell >= 1 && ell <= kind.generic_rank(),
          "restriction target size must lie in [1, " +
              std::to_string(kind.generic_rank()) + "]");
  if (kind.family() == Family::SkewSymmetric)
    require(ell % 2 == 0, "skew-symmetric restriction targets must have even size");

  const GradedAlgebra source = algebra_for(kind, coeff, space);
  std::vector<std::string> alive = source.generator_names();
  bool module_alive = source.has_module_factor();

  MatrixKind current = kind;
  while (current.generic_rank() > ell) {
    const RestrictionMap step = inclusion_restriction(current, coeff, space);
    std::vector<std::string> next;
    for (const auto& name : alive)
      if (step.image_of(name)) next.push_back(name);
    alive = std::move(next);
    if (module_alive) module_alive = step.image_of(source.module_basis()->name).has_value();
    current = step.target;
  }

  std::vector<GeneratorLabel> gens;
  for (const auto& g : source.generators())
    if (std::find(alive.begin(), alive.end(), g.name) != alive.end()) gens.push_back(g);
  std::optional<GeneratorLabel> module;
  if (module_alive) module = source.module_basis();
  return GradedAlgebra(std::move(gens), std::move(module));
}

}  // namespace singcoh
