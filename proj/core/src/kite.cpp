#include "singcoh/kite.hpp"

#include <algorithm>
#include <set>

#include "singcoh/error.hpp"

namespace singcoh {

namespace {

std::string idx(int i, int j) { return std::to_string(i + 1) + "_" + std::to_string(j + 1); }

}  // namespace

void KiteSpec::validate() const {
  const std::string where = " for " + kind.to_string();
  require(!kind.is_degenerate(), "kite specs need a non-degenerate kind");
  if (kind.is_square()) {
    require(ell >= 1 && ell < kind.m(), "kite size must satisfy 1 <= ell < m" + where);
    if (kind.family() == Family::SkewSymmetric)
      require(ell % 2 == 0, "skew-symmetric kites need even size" + where);
  } else {
    require(ell >= 1 && ell <= kind.p(), "kite length must satisfy 1 <= ell <= p" + where);
  }
}

int KiteSpec::r() const { return kind.is_square() ? 0 : kind.p() - ell; }

std::vector<KiteGenerator> kite_generators(const KiteSpec& spec) {
  spec.validate();
  const int m = spec.kind.m();
  const int ell = spec.ell;
  std::vector<KiteGenerator> out;
  auto add = [&](std::string stem, int i, int j, bool tail, bool symmetric, bool skew) {
    KiteGenerator g;
    g.label = stem + idx(i, j);
    g.variable = "k" + idx(i, j);
    g.tail = tail;
    g.positive.emplace_back(i, j);
    if (symmetric && i != j) g.positive.emplace_back(j, i);
    if (skew) g.negative.emplace_back(j, i);
    out.push_back(std::move(g));
  };
  switch (spec.kind.family()) {
    case Family::General:
      for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) add("E", i, j, false, false, false);
      for (int i = ell; i < m; ++i) add("E", i, i, true, false, false);
      break;
    case Family::Symmetric:
      for (int i = 0; i < ell; ++i)
        for (int j = i; j < ell; ++j) add("Esy", i, j, false, true, false);
      for (int i = ell; i < m; ++i) add("Esy", i, i, true, true, false);
      break;
    case Family::SkewSymmetric:
      for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j) add("Esk", i, j, false, false, true);
      // Tail E^sk_{2i,2i+1} (1-based) for ell < 2i < m.
      for (int e = ell + 1; e < m; ++e)
        if (e % 2 == 0) add("Esk", e - 1, e, true, false, true);
      break;
    case Family::Rectangular: {
      const int r = spec.r();
      for (int i = r; i < m; ++i)
        for (int j = r; j < spec.kind.p(); ++j) add("E", i, j, false, false, false);
      for (int i = 0; i < r; ++i) add("E", i, i, true, false, false);
      break;
    }
  }
  return out;
}

std::vector<PolyMatrix> kite_basis(const KiteSpec& spec) {
  std::vector<PolyMatrix> out;
  for (const auto& g : kite_generators(spec)) {
    PolyMatrix e(spec.kind.m(), spec.kind.p());
    for (const auto& [i, j] : g.positive) e.at(i, j) = Polynomial(1);
    for (const auto& [i, j] : g.negative) e.at(i, j) = Polynomial(-1);
    e.set_kind_tag(spec.kind.family());
    out.push_back(std::move(e));
  }
  return out;
}

int kite_dimension(const KiteSpec& spec) {
  spec.validate();
  const int m = spec.kind.m();
  const int ell = spec.ell;
  switch (spec.kind.family()) {
    case Family::General: return ell * ell + (m - ell);
    case Family::Symmetric: return ell * (ell + 1) / 2 + (m - ell);
    case Family::SkewSymmetric: {
      int tail = 0;
      for (int e = ell + 1; e < m; ++e) tail += e % 2 == 0;
      return ell * (ell - 1) / 2 + tail;
    }
    case Family::Rectangular: {
      const int r = spec.r();
      return (m - r) * (spec.kind.p() - r) + r;
    }
  }
  return 0;
}

PolyMatrix linear_kite_map(const KiteSpec& spec) {
  const auto gens = kite_generators(spec);
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.variable);
  PolyMatrix q(spec.kind.m(), spec.kind.p(), std::nullopt, names);
  for (const auto& g : gens) {
    const auto v = Polynomial::variable(g.variable);
    for (const auto& [i, j] : g.positive) q.at(i, j) = v;
    for (const auto& [i, j] : g.negative) q.at(i, j) = -v;
  }
  q.set_kind_tag(spec.kind.family());
  return q;
}

std::string_view to_string(CertificateLevel level) {
  switch (level) {
    case CertificateLevel::ExactLinear: return "ExactLinear";
    case CertificateLevel::WitnessedUnfurled: return "WitnessedUnfurled";
    case CertificateLevel::Failed: return "Failed";
  }
  return "?";
}

// ---------------------------------------------------------------- matching

namespace {

struct Slot {
  int generator = -1;  // -1: the pattern is identically zero here
};

class Matcher {
 public:
  Matcher(const PolyMatrix& f, const KiteSpec& spec) : f_(f), spec_(spec) {
    gens_ = kite_generators(spec);
    m_ = spec.kind.m();
    p_ = spec.kind.p();
    pattern_.assign(static_cast<std::size_t>(m_ * p_), Slot{});
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      for (const auto& [i, j] : gens_[g].positive) slot(i, j).generator = static_cast<int>(g);
      for (const auto& [i, j] : gens_[g].negative) slot(i, j).generator = static_cast<int>(g);
    }
    auto names = f.variables().empty() ? f.all_variables() : f.variables();
    targets_.insert(names.begin(), names.end());
    fresh_to_germ_.assign(gens_.size(), "");
  }

  std::variant<KiteMatch, KiteMismatch> run() {
    if (targets_.size() == gens_.size()) {
      row_perm_.assign(static_cast<std::size_t>(m_), -1);
      col_perm_.assign(static_cast<std::size_t>(p_), -1);
      row_used_.assign(static_cast<std::size_t>(m_), false);
      col_used_.assign(static_cast<std::size_t>(p_), false);
      if (search(0)) {
        KiteMatch match{row_perm_, col_perm_, {}};
        for (std::size_t g = 0; g < gens_.size(); ++g)
          match.variable_map[gens_[g].variable] = fresh_to_germ_[g];
        return match;
      }
    }
    return diagnose();
  }

 private:
  Slot& slot(int i, int j) { return pattern_[static_cast<std::size_t>(i * p_ + j)]; }

  std::string expected_text(int i, int j) {
    const int g = slot(i, j).generator;
    if (g < 0) return "0";
    const auto& gen = gens_[static_cast<std::size_t>(g)];
    const bool negative = std::find(gen.negative.begin(), gen.negative.end(),
                                    std::make_pair(i, j)) != gen.negative.end();
    return (negative ? "-" : "") + gen.variable;
  }

  // Checks pattern slot (i, j) against germ entry (gi, gj), recording new
  // variable bindings on the undo trail.
  bool check(int i, int j, int gi, int gj, std::string* why) {
    const Polynomial& entry = f_.at(gi, gj);
    const int g = slot(i, j).generator;
    if (g < 0) {
      if (entry.is_zero()) return true;
      if (why) *why = "entry should vanish";
      return false;
    }
    const auto scaled = entry.as_scaled_variable();
    if (!scaled) {
      if (why) *why = entry.is_zero() ? "entry vanishes where a kite variable sits"
                                      : "entry is not a nonzero multiple of a single variable";
      return false;
    }
    const std::string& v = scaled->second;
    if (!targets_.count(v)) {
      if (why) *why = "variable " + v + " is not among the germ's remaining variables";
      return false;
    }
    auto& bound = fresh_to_germ_[static_cast<std::size_t>(g)];
    if (!bound.empty()) {
      if (bound == v) return true;
      if (why) *why = gens_[static_cast<std::size_t>(g)].variable + " is already matched to " + bound;
      return false;
    }
    if (germ_to_fresh_.count(v)) {
      if (why) *why = "variable " + v + " already matches " + germ_to_fresh_[v];
      return false;
    }
    bound = v;
    germ_to_fresh_[v] = gens_[static_cast<std::size_t>(g)].variable;
    trail_.push_back(g);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto& bound = fresh_to_germ_[static_cast<std::size_t>(trail_.back())];
      germ_to_fresh_.erase(bound);
      bound.clear();
      trail_.pop_back();
    }
  }

  // Square kinds: decision d assigns row and column d together (congruence
  // permutation).  Rectangular kinds alternate row and column decisions.
  bool search(int d) {
    if (++nodes_ > kNodeLimit) return false;
    const bool square = spec_.kind.is_square();
    const int total = square ? m_ : m_ + p_;
    if (d == total) return true;
    bool is_row = true;
    int index = d;
    if (!square) {
      const int both = std::min(m_, p_);
      if (d < 2 * both) {
        is_row = d % 2 == 0;
        index = d / 2;
      } else {
        is_row = m_ > p_;
        index = d - both;
      }
    }
    const int extent = is_row ? m_ : p_;
    auto& used = is_row ? row_used_ : col_used_;
    auto& perm = is_row ? row_perm_ : col_perm_;
    for (int offset = 0; offset < extent; ++offset) {
      const int candidate = (index + offset) % extent;
      if (used[static_cast<std::size_t>(candidate)]) continue;
      used[static_cast<std::size_t>(candidate)] = true;
      perm[static_cast<std::size_t>(index)] = candidate;
      if (square) col_perm_[static_cast<std::size_t>(index)] = candidate;
      const std::size_t mark = trail_.size();
      if (consistent(is_row, index, square) && search(d + 1)) return true;
      undo_to(mark);
      used[static_cast<std::size_t>(candidate)] = false;
      perm[static_cast<std::size_t>(index)] = -1;
      if (square) col_perm_[static_cast<std::size_t>(index)] = -1;
    }
    return false;
  }

  // Slots completed by the latest decision.
  bool consistent(bool is_row, int index, bool square) {
    if (square || is_row) {
      for (int j = 0; j < p_; ++j) {
        const int gj = col_perm_[static_cast<std::size_t>(j)];
        if (gj < 0) continue;
        if (!check(index, j, row_perm_[static_cast<std::size_t>(index)], gj, nullptr))
          return false;
      }
    }
    if (square || !is_row) {
      for (int i = 0; i < m_; ++i) {
        if (square && i == index) continue;
        const int gi = row_perm_[static_cast<std::size_t>(i)];
        if (gi < 0) continue;
        if (!check(i, index, gi, col_perm_[static_cast<std::size_t>(index)], nullptr))
          return false;
      }
    }
    return true;
  }

  KiteMismatch diagnose() {
    undo_to(0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < p_; ++j) {
        std::string why;
        if (!check(i, j, i, j, &why))
          return {i + 1, j + 1, expected_text(i, j), f_.at(i, j).to_string(), why};
      }
    return {0, 0, std::to_string(gens_.size()) + " kite variables",
            std::to_string(targets_.size()) + " germ variables",
            "no bijection between kite variables and the germ's remaining variables"};
  }

  static constexpr long kNodeLimit = 5'000'000;

  const PolyMatrix& f_;
  const KiteSpec& spec_;
  std::vector<KiteGenerator> gens_;
  int m_ = 0;
  int p_ = 0;
  std::vector<Slot> pattern_;
  std::set<std::string> targets_;
  std::vector<std::string> fresh_to_germ_;
  std::map<std::string, std::string> germ_to_fresh_;
  std::vector<int> trail_;
  std::vector<int> row_perm_, col_perm_;
  std::vector<bool> row_used_, col_used_;
  long nodes_ = 0;
};

}  // namespace

std::variant<KiteMatch, KiteMismatch> match_linear_kite(const PolyMatrix& f, const KiteSpec& spec) {
  spec.validate();
  require(f.rows() == spec.kind.m() && f.cols() == spec.kind.p(),
          "germ shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
              " does not match " + spec.kind.to_string());
  return Matcher(f, spec).run();
}

KiteCertificate certify_containment(const PolyMatrix& f0,
                                    const std::map<std::string, Rational>& assignment,
                                    const KiteSpec& spec,
                                    const std::optional<OpWitness>& witness) {
  spec.validate();
  const Family family = spec.kind.family();
  if (f0.kind_tag() && *f0.kind_tag() != family)
    fail(ErrorCode::InvalidArgument, "germ is tagged " + std::string(to_string(*f0.kind_tag())) +
                                         " but the kite spec is " + spec.kind.to_string());

  bool transposed = false;
  if (f0.rows() != spec.kind.m() || f0.cols() != spec.kind.p()) {
    transposed = family == Family::Rectangular && f0.rows() == spec.kind.p() &&
                 f0.cols() == spec.kind.m();
    require(transposed, "germ shape " + std::to_string(f0.rows()) + "x" +
                            std::to_string(f0.cols()) + " does not match " +
                            spec.kind.to_string());
  }

  const auto known = f0.variables().empty() ? f0.all_variables() : f0.variables();
  for (const auto& [name, value] : assignment) {
    require(std::find(known.begin(), known.end(), name) != known.end(),
            "assignment references unknown variable " + name);
    require(value == 0, "kite certification only sets variables to zero; " + name + " = " +
                            rational_to_string(value));
  }

  PolyMatrix tagged = f0;
  tagged.set_kind_tag(family);
  PolyMatrix specialized = specialize(tagged, assignment);
  if (transposed) specialized = specialized.transpose();

  KiteCertificate cert{CertificateLevel::Failed, spec, assignment, witness, transposed,
                       std::nullopt, std::nullopt, specialized};

  auto outcome = match_linear_kite(specialized, spec);
  if (auto* m = std::get_if<KiteMatch>(&outcome)) {
    cert.level = CertificateLevel::ExactLinear;
    cert.match = std::move(*m);
    return cert;
  }
  if (!witness) {
    cert.mismatch = std::get<KiteMismatch>(outcome);
    return cert;
  }
  cert.matched = apply_witness(specialized, *witness);
  outcome = match_linear_kite(cert.matched, spec);
  if (auto* m = std::get_if<KiteMatch>(&outcome)) {
    cert.level = CertificateLevel::WitnessedUnfurled;
    cert.match = std::move(*m);
  } else {
    cert.mismatch = std::get<KiteMismatch>(outcome);
  }
  return cert;
}

}  // namespace singcoh
