#include "singcoh/grading.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "singcoh/error.hpp"

namespace singcoh {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPoly IntPoly::one_plus_power(int d) {
  require(d >= 0, "negative exponent");
  std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
  c[0] += 1;
  c[static_cast<std::size_t>(d)] += 1;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(int d, std::int64_t c) {
  require(d >= 0, "negative exponent");
  std::vector<std::int64_t> v(static_cast<std::size_t>(d) + 1, 0);
  v[static_cast<std::size_t>(d)] = c;
  return IntPoly(std::move(v));
}

std::int64_t IntPoly::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

std::int64_t IntPoly::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ----------------------------------------------------------- GradedAlgebra

GradedAlgebra::GradedAlgebra(std::vector<GeneratorLabel> generators,
                             std::optional<GeneratorLabel> module_basis)
    : generators_(std::move(generators)), module_(std::move(module_basis)) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    require(g.degree >= 1, "generator " + g.name + " must have positive degree");
    require(names.insert(g.name).second, "duplicate generator name " + g.name);
    if (i > 0)
      require(generators_[i - 1].degree < g.degree,
              "generator degrees must be strictly increasing");
  }
  if (module_) {
    require(module_->degree >= 1, "module generator must have positive degree");
    require(!names.count(module_->name),
            "module generator name clashes with an algebra generator");
  }
}

GradedAlgebra GradedAlgebra::exterior(const std::vector<int>& degrees) {
  std::vector<GeneratorLabel> gens;
  gens.reserve(degrees.size());
  for (int d : degrees) gens.push_back({"e" + std::to_string(d), d});
  return GradedAlgebra(std::move(gens));
}

std::vector<int> GradedAlgebra::generator_degrees() const {
  std::vector<int> out;
  for (const auto& g : generators_) out.push_back(g.degree);
  return out;
}

std::vector<std::string> GradedAlgebra::generator_names() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.name);
  return out;
}

std::optional<int> GradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::int64_t GradedAlgebra::total_rank() const {
  std::int64_t r = std::int64_t{1} << generators_.size();
  return module_ ? 2 * r : r;
}

int GradedAlgebra::top_degree() const {
  int d = 0;
  for (const auto& g : generators_) d += g.degree;
  if (module_) d += module_->degree;
  return d;
}

std::string GradedAlgebra::to_string() const {
  std::string s = "Lambda<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ",";
    s += generators_[i].name;
  }
  s += ">";
  if (module_) s += "{1," + module_->name + "}";
  return s;
}

// ---------------------------------------------------------------- Monomial

std::string Monomial::label(const GradedAlgebra& algebra) const {
  std::string s;
  for (int idx : factors) {
    if (!s.empty()) s += "*";
    s += algebra.generators().at(static_cast<std::size_t>(idx)).name;
  }
  if (module) {
    if (!s.empty()) s += "*";
    s += algebra.module_basis()->name;
  }
  return s.empty() ? "1" : s;
}

// ------------------------------------------------------- GradedVectorSpace

GradedVectorSpace::GradedVectorSpace(std::map<int, std::int64_t> ranks) {
  for (const auto& [d, r] : ranks) add(d, r);
}

void GradedVectorSpace::add(int degree, std::int64_t rank) {
  require(degree >= 0, "graded vector space degrees must be non-negative");
  require(rank >= 0, "ranks must be non-negative");
  if (rank == 0) return;
  ranks_[degree] += rank;
}

std::int64_t GradedVectorSpace::rank(int degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

std::vector<int> GradedVectorSpace::degrees() const {
  std::vector<int> out;
  for (const auto& [d, r] : ranks_) out.push_back(d);
  return out;
}

std::vector<int> GradedVectorSpace::degree_multiset() const {
  std::vector<int> out;
  for (const auto& [d, r] : ranks_)
    for (std::int64_t i = 0; i < r; ++i) out.push_back(d);
  return out;
}

std::int64_t GradedVectorSpace::total_rank() const {
  std::int64_t t = 0;
  for (const auto& [d, r] : ranks_) t += r;
  return t;
}

int GradedVectorSpace::min_degree() const {
  require(!ranks_.empty(), "empty graded vector space has no minimum degree");
  return ranks_.begin()->first;
}

int GradedVectorSpace::max_degree() const {
  require(!ranks_.empty(), "empty graded vector space has no maximum degree");
  return ranks_.rbegin()->first;
}

// -------------------------------------------------------------- operations

std::vector<Monomial> monomial_basis(const GradedAlgebra& algebra) {
  const auto& gens = algebra.generators();
  const std::size_t g = gens.size();
  require(g < 31, "too many generators to enumerate");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(algebra.total_rank()));
  for (int with_module = 0; with_module <= (algebra.has_module_factor() ? 1 : 0);
       ++with_module) {
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
      Monomial m;
      for (std::size_t i = 0; i < g; ++i) {
        if (mask & (1u << i)) {
          m.factors.push_back(static_cast<int>(i));
          m.degree += gens[i].degree;
        }
      }
      if (with_module) {
        m.module = true;
        m.degree += algebra.module_basis()->degree;
      }
      out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.factors != b.factors) return a.factors < b.factors;
    return a.module < b.module;
  });
  return out;
}

GradedVectorSpace betti_table(const GradedAlgebra& algebra) {
  GradedVectorSpace space;
  for (const auto& m : monomial_basis(algebra)) space.add(m.degree);
  return space;
}

GradedVectorSpace truncate_top(const GradedVectorSpace& space) {
  require(!space.empty(), "cannot truncate an empty graded vector space");
  auto ranks = space.ranks();
  ranks.erase(std::prev(ranks.end()));
  return GradedVectorSpace(std::move(ranks));
}

GradedVectorSpace shift(const GradedVectorSpace& space, int amount) {
  if (!space.empty())
    require(space.min_degree() + amount >= 0,
            "shift by " + std::to_string(amount) + " produces a negative degree");
  std::map<int, std::int64_t> ranks;
  for (const auto& [d, r] : space.ranks()) ranks[d + amount] = r;
  return GradedVectorSpace(std::move(ranks));
}

IntPoly poincare_polynomial(const GradedAlgebra& algebra) {
  IntPoly p = IntPoly::one();
  for (const auto& g : algebra.generators()) p = p * IntPoly::one_plus_power(g.degree);
  if (algebra.module_basis())
    p = p * IntPoly::one_plus_power(algebra.module_basis()->degree);
  return p;
}

IntPoly poincare_polynomial(const GradedVectorSpace& space) {
  IntPoly p;
  for (const auto& [d, r] : space.ranks()) p += IntPoly::monomial(d, r);
  return p;
}

Monomial poincare_complement(const Monomial& monomial, const GradedAlgebra& algebra) {
  if (algebra.has_module_factor())
    fail(ErrorCode::Unsupported,
         "Poincare complement is undefined for algebras with a module factor");
  require(!monomial.module, "monomial carries a module flag");
  const int g = static_cast<int>(algebra.generators().size());
  for (int idx : monomial.factors)
    require(idx >= 0 && idx < g, "monomial factor out of range");
  Monomial out;
  std::size_t k = 0;
  for (int i = 0; i < g; ++i) {
    if (k < monomial.factors.size() && monomial.factors[k] == i) {
      ++k;
      continue;
    }
    out.factors.push_back(i);
    out.degree += algebra.generators()[static_cast<std::size_t>(i)].degree;
  }
  return out;
}

}  // namespace singcoh
