#include "singcoh/detection.hpp"

#include "singcoh/error.hpp"

namespace singcoh {

namespace {

int binom2(int n) { return n * (n - 1) / 2; }

void check_size(const MatrixKind& kind, int ell) {
  if (kind.is_square()) {
    require(ell >= 1, "kite size must be positive");
    if (ell >= kind.m())
      fail(ErrorCode::Unsupported,
           "detection needs a kite of size ell < m = " + std::to_string(kind.m()));
    if (kind.family() == Family::SkewSymmetric)
      require(ell % 2 == 0, "skew-symmetric kites need even size");
  } else {
    require(ell >= 1 && ell <= kind.p(),
            "kite length must satisfy 1 <= ell <= p = " + std::to_string(kind.p()));
  }
}

// Member of the tower that the kite of size ell realizes.
MatrixKind kite_member(const MatrixKind& kind, int ell) {
  if (kind.is_square()) return MatrixKind::restricted(kind.family(), ell);
  return MatrixKind::restricted(Family::Rectangular, kind.m() - kind.p() + ell, ell);
}

DetectionResult make_result(SpaceSelector target, const MatrixKind& kind, int ell,
                            Coefficients coeff, const GradedAlgebra& algebra,
                            std::string provenance) {
  DetectionResult r{target, kind, ell, coeff, GradedAlgebra(algebra.generators()), {},
                    std::nullopt, std::nullopt, std::nullopt, std::move(provenance), {}};
  for (const auto& g : algebra.generators()) r.generators.push_back({g, true});
  return r;
}

}  // namespace

GradedVectorSpace DetectionResult::betti() const {
  if (link_space) return *link_space;
  return betti_table(algebra);
}

DetectionResult detect_milnor(const MatrixKind& kind, int ell, Coefficients coeff) {
  if (!kind.is_square())
    fail(ErrorCode::Unsupported, "rectangular kinds have no Milnor fiber");
  check_size(kind, ell);
  const GradedAlgebra full = milnor_fiber_cohomology(kite_member(kind, ell), coeff);
  DetectionResult r = make_result(SpaceSelector::MilnorFiber, kind, ell, coeff, full,
                                  "Milnor fiber detection by a kite of size " +
                                      std::to_string(ell));
  if (kind.family() == Family::Symmetric && coeff == Coefficients::CharZeroField) {
    r.notes.push_back(
        "characteristic-zero symmetric generators follow the e_{4j-3} pattern of the "
        "Milnor fiber of Sym_ell; a listing e3, e5, ..., e_{2ell-1} is not used");
    if (full.module_basis()) {
      r.generators.push_back({*full.module_basis(), false});
      r.notes.push_back("the Euler class " + full.module_basis()->name +
                        " restricts to zero under the block inclusion and is not guaranteed");
    }
  }
  return r;
}

DetectionResult detect_complement(const MatrixKind& kind, int ell, Coefficients coeff) {
  check_size(kind, ell);
  const GradedAlgebra algebra = complement_cohomology(kite_member(kind, ell), coeff);
  return make_result(SpaceSelector::Complement, kind, ell, coeff, algebra,
                     std::string("complement detection by a kite of ") +
                         (kind.is_square() ? "size " : "length ") + std::to_string(ell));
}

int detection_link_shift(const MatrixKind& kind, int n, int ell) {
  switch (kind.family()) {
    case Family::Symmetric:
      return ell % 2 == 1 ? 2 * n - binom2(ell + 1) - 2 : 2 * n - binom2(ell) - 2;
    case Family::General: return 2 * n - ell * ell - 2;
    case Family::SkewSymmetric: return 2 * n - binom2(ell) - 2;
    case Family::Rectangular: return 2 * n - 2 - ell * (2 * (kind.m() - kind.p()) + ell);
  }
  return 0;
}

DetectionResult detect_link(const MatrixKind& kind, int n, int ell, Coefficients coeff) {
  if (coeff != Coefficients::CharZeroField)
    fail(ErrorCode::Unsupported,
         "link detection is only available over a field of characteristic zero");
  require(n >= 1, "source dimension n must be positive");
  DetectionResult r = detect_complement(kind, ell, coeff);
  const int s = detection_link_shift(kind, n, ell);
  if (s < 0)
    fail(ErrorCode::InvalidArgument, "link shift " + std::to_string(s) + " for n = " +
                                         std::to_string(n) + " produces negative degrees");
  r.target = SpaceSelector::Link;
  r.link_space = shift(truncate_top(betti_table(r.algebra)), s);
  r.shift = s;
  r.source_dimension = n;
  r.provenance = "link detection: truncated complement detection algebra shifted by " +
                 std::to_string(s);
  return r;
}

DetectionResult detect(const MatrixKind& kind, SpaceSelector space, int ell, Coefficients coeff,
                       std::optional<int> n) {
  switch (space) {
    case SpaceSelector::MilnorFiber: return detect_milnor(kind, ell, coeff);
    case SpaceSelector::Complement: return detect_complement(kind, ell, coeff);
    case SpaceSelector::Link:
      if (!n) fail(ErrorCode::InvalidArgument, "link detection needs the source dimension n");
      return detect_link(kind, *n, ell, coeff);
  }
  fail(ErrorCode::InvalidArgument, "unknown space");
}

}  // namespace singcoh
