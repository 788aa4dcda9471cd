#include "singcoh/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <iomanip>
#include <sstream>

#include "singcoh/error.hpp"

namespace singcoh::io {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

std::string kind_tag_name(Family family) {
  switch (family) {
    case Family::General: return "general";
    case Family::Symmetric: return "symmetric";
    case Family::SkewSymmetric: return "skew";
    case Family::Rectangular: return "rect";
  }
  return "?";
}

Family parse_kind_tag(const std::string& text) { return parse_family(text); }

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::Parse, std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) fail(ErrorCode::Parse, std::string(what) + " must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> entry_grid(const Json& j, const char* what) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::Parse, std::string(what) + " must be a non-empty array of rows");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorCode::Parse, std::string(what) + " rows must be arrays");
    std::vector<std::string> cells;
    for (const auto& cell : row) {
      if (cell.is_string()) cells.push_back(cell.get<std::string>());
      else if (cell.is_number_integer()) cells.push_back(std::to_string(cell.get<long long>()));
      else fail(ErrorCode::Parse, std::string(what) + " entries must be strings or integers");
    }
    out.push_back(std::move(cells));
  }
  return out;
}

Json grid_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

std::map<std::string, Polynomial> substitution_from_json(const Json& j,
                                                         const std::vector<std::string>& vars) {
  if (!j.is_object()) fail(ErrorCode::Parse, "substitution must be an object {var: expr}");
  std::map<std::string, Polynomial> out;
  for (const auto& [name, expr] : j.items()) {
    if (std::find(vars.begin(), vars.end(), name) == vars.end())
      fail(ErrorCode::Parse, "substitution names undeclared variable " + name);
    if (!expr.is_string()) fail(ErrorCode::Parse, "substitution images must be strings");
    out.emplace(name, parse_polynomial(expr.get<std::string>(), vars));
  }
  return out;
}

Json substitution_to_json(const std::map<std::string, Polynomial>& s) {
  Json out = Json::object();
  for (const auto& [name, p] : s) out[name] = p.to_string();
  return out;
}

}  // namespace

PolyMatrix polymatrix_from_json(const Json& j) {
  const auto vars = j.contains("vars") ? string_list(j.at("vars"), "vars")
                                       : std::vector<std::string>{};
  const auto grid = entry_grid(member(j, "entries"), "entries");
  std::optional<Family> tag;
  if (j.contains("kind") && !j.at("kind").is_null()) {
    if (!j.at("kind").is_string()) fail(ErrorCode::Parse, "kind must be a string");
    tag = parse_kind_tag(j.at("kind").get<std::string>());
  }
  auto m = PolyMatrix::parse(grid, vars, std::nullopt);
  if (j.contains("rows") && j.at("rows").get<int>() != m.rows())
    fail(ErrorCode::Parse, "\"rows\" does not match the number of entry rows");
  if (j.contains("cols") && j.at("cols").get<int>() != m.cols())
    fail(ErrorCode::Parse, "\"cols\" does not match the number of entry columns");
  m.set_kind_tag(tag);
  return m;
}

Json polymatrix_to_json(const PolyMatrix& m) {
  Json j;
  j["vars"] = m.variables();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["kind"] = m.kind_tag() ? Json(kind_tag_name(*m.kind_tag())) : Json(nullptr);
  j["entries"] = grid_to_json(m);
  return j;
}

OpWitness witness_from_json(const Json& j, const std::vector<std::string>& fallback_vars) {
  const auto vars = j.contains("vars") ? string_list(j.at("vars"), "vars") : fallback_vars;
  auto matrix = [&](const char* key) {
    return PolyMatrix::parse(entry_grid(member(j, key), key), vars);
  };
  OpWitness w{matrix("left"), matrix("left_inverse"), std::nullopt, std::nullopt, {}, {}};
  if (j.contains("right")) w.right = matrix("right");
  if (j.contains("right_inverse")) w.right_inverse = matrix("right_inverse");
  if (j.contains("substitution"))
    w.substitution = substitution_from_json(j.at("substitution"), vars);
  if (j.contains("substitution_inverse"))
    w.substitution_inverse = substitution_from_json(j.at("substitution_inverse"), vars);
  return w;
}

Json witness_to_json(const OpWitness& w) {
  Json j;
  j["left"] = grid_to_json(w.left);
  j["left_inverse"] = grid_to_json(w.left_inverse);
  if (w.right) j["right"] = grid_to_json(*w.right);
  if (w.right_inverse) j["right_inverse"] = grid_to_json(*w.right_inverse);
  if (!w.substitution.empty()) j["substitution"] = substitution_to_json(w.substitution);
  if (!w.substitution_inverse.empty())
    j["substitution_inverse"] = substitution_to_json(w.substitution_inverse);
  return j;
}

std::string witness_hash(const OpWitness& w) {
  const std::string text = witness_to_json(w).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    fail(ErrorCode::Numerical, "SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

Json betti_to_json(const GradedVectorSpace& space) {
  Json j = Json::object();
  for (const auto& [d, r] : space.ranks()) j[std::to_string(d)] = r;
  return j;
}

Json algebra_to_json(const GradedAlgebra& algebra) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : algebra.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  j["generators"] = gens;
  if (algebra.module_basis())
    j["module_factor"] = {{"name", algebra.module_basis()->name},
                          {"degree", algebra.module_basis()->degree}};
  else
    j["module_factor"] = nullptr;
  j["presentation"] = algebra.to_string();
  j["betti"] = betti_to_json(betti_table(algebra));
  j["poincare"] = poincare_polynomial(algebra).to_string();
  return j;
}

Json kind_to_json(const MatrixKind& kind) {
  Json j;
  j["family"] = std::string(to_string(kind.family()));
  j["m"] = kind.m();
  j["p"] = kind.p();
  if (!kind.is_square()) j["transposed_input"] = kind.transposed();
  return j;
}

Json kite_spec_to_json(const KiteSpec& spec) {
  Json j = kind_to_json(spec.kind);
  j["ell"] = spec.ell;
  if (!spec.kind.is_square()) j["r"] = spec.r();
  return j;
}

Json certificate_to_json(const KiteCertificate& cert) {
  Json j;
  j["level"] = std::string(to_string(cert.level));
  j["spec"] = kite_spec_to_json(cert.spec);
  Json assignment = Json::object();
  for (const auto& [name, value] : cert.assignment) assignment[name] = rational_to_string(value);
  j["assignment"] = assignment;
  j["transposed_input"] = cert.transposed_input;
  j["witness_sha256"] = cert.witness ? Json(witness_hash(*cert.witness)) : Json(nullptr);
  if (cert.match) {
    Json match;
    auto one_based = [](const std::vector<int>& v) {
      std::vector<int> out;
      for (int x : v) out.push_back(x + 1);
      return out;
    };
    match["row_perm"] = one_based(cert.match->row_perm);
    match["col_perm"] = one_based(cert.match->col_perm);
    Json vm = Json::object();
    for (const auto& [fresh, germ] : cert.match->variable_map) vm[fresh] = germ;
    match["variable_map"] = vm;
    j["match"] = match;
  } else {
    j["match"] = nullptr;
  }
  if (cert.mismatch) {
    const auto& mm = *cert.mismatch;
    j["mismatch"] = {{"row", mm.row}, {"col", mm.col}, {"expected", mm.expected},
                     {"found", mm.found}, {"reason", mm.reason}};
  } else {
    j["mismatch"] = nullptr;
  }
  return j;
}

Json detection_to_json(const DetectionResult& r) {
  Json j;
  j["target"] = std::string(to_string(r.target));
  j["kind"] = kind_to_json(r.kind);
  j["ell"] = r.ell;
  j["coefficients"] = std::string(to_string(r.coefficients));
  Json gens = Json::array();
  for (const auto& g : r.generators)
    gens.push_back({{"name", g.label.name}, {"degree", g.label.degree}, {"guaranteed", g.guaranteed}});
  j["generators"] = gens;
  j["algebra"] = algebra_to_json(r.algebra);
  j["betti"] = betti_to_json(r.betti());
  j["shift"] = r.shift ? Json(*r.shift) : Json(nullptr);
  j["source_dimension"] = r.source_dimension ? Json(*r.source_dimension) : Json(nullptr);
  j["provenance"] = r.provenance;
  j["notes"] = r.notes;
  return j;
}

double tidy(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 1e-14) return 0.0;
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return std::stod(os.str());
}

double tidy_error(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 1e-12) return 0.0;
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return std::stod(os.str());
}

namespace {

std::complex<double> complex_entry(const Json& cell) {
  if (cell.is_number()) return {cell.get<double>(), 0.0};
  if (cell.is_array() && cell.size() == 2 && cell[0].is_number() && cell[1].is_number())
    return {cell[0].get<double>(), cell[1].get<double>()};
  fail(ErrorCode::Parse, "complex entries must be numbers or [re, im] pairs");
}

Json complex_to_json(std::complex<double> z) { return Json::array({tidy(z.real()), tidy(z.imag())}); }

Json complex_vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

}  // namespace

CMatrix complex_matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? member(j, "matrix") : j;
  if (!rows.is_array() || rows.empty())
    fail(ErrorCode::Parse, "complex matrix must be a non-empty array of rows");
  const auto n = rows.size();
  CMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rows[0].is_array() ? rows[0].size() : 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(m.cols()) || m.cols() == 0)
      fail(ErrorCode::Parse, "complex matrix rows must be non-empty arrays of equal length");
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = complex_entry(rows[i][k]);
  }
  return m;
}

Json complex_matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json pseudo_rotation_to_json(const PseudoRotation& f) {
  Json j;
  j["min_index"] = f.min_index;
  j["theta"] = tidy(f.theta);
  j["axis_flag"] = complex_vector_to_json(f.v);
  j["axis_standard"] = complex_vector_to_json(f.axis_standard());
  return j;
}

Json schubert_index_to_json(const SchubertIndex& s) {
  return {{"indices", s.indices}, {"dimension", s.dimension()}};
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  if (j.is_array()) return RationalMatrix::from_polymatrix(PolyMatrix::parse(entry_grid(j, "matrix"), {}));
  return RationalMatrix::from_polymatrix(polymatrix_from_json(j));
}

Json rational_matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

Json normal_form_to_json(const NormalFormCertificate& cert, const CertificateReport& report) {
  Json j;
  j["family"] = std::string(to_string(cert.family));
  j["size"] = cert.size;
  j["rank"] = cert.rank;
  j["arithmetic"] = cert.exact ? "exact" : "floating";
  if (cert.exact) {
    j["input"] = rational_matrix_to_json(cert.input);
    j["B"] = rational_matrix_to_json(cert.b);
    if (cert.c) {
      j["B_prime"] = rational_matrix_to_json(cert.b_inverse);
      j["C"] = rational_matrix_to_json(*cert.c);
    }
    j["target"] = rational_matrix_to_json(cert.target);
    j["det_B"] = rational_to_string(determinant(cert.b));
    if (cert.c) j["det_C"] = rational_to_string(determinant(*cert.c));
  } else {
    j["input"] = complex_matrix_to_json(cert.input_f);
    j["B"] = complex_matrix_to_json(cert.b_f);
    j["target"] = complex_matrix_to_json(cert.target_f);
    j["det_B"] = complex_to_json(cert.b_f.determinant());
    Json sv = Json::array();
    for (double v : cert.singular_values) sv.push_back(tidy(v));
    j["singular_values"] = sv;
    j["rank_threshold"] = cert.rank_threshold;
  }
  j["residual"] = tidy_error(cert.residual);
  j["verified"] = report.ok;
  j["diagnostics"] = report.diagnostics;
  return j;
}

Json slice_to_json(const StratumSlice& s) {
  Json j;
  j["ambient"] = kind_to_json(s.ambient);
  j["rank"] = s.rank;
  j["corank"] = s.corank;
  j["slice"] = kind_to_json(s.slice);
  j["ambient_dimension"] = s.ambient_dimension;
  j["slice_dimension"] = s.slice_dimension;
  return j;
}

Json gysin_to_json(const GysinMap& map) {
  Json j;
  j["slice"] = slice_to_json(map.slice);
  j["q"] = map.q;
  Json entries = Json::array();
  for (const auto& e : map.entries)
    entries.push_back({{"monomial", e.label}, {"degree", e.degree}, {"local_degree", e.local_degree},
                       {"global_degree", e.global_degree}});
  j["map"] = entries;
  return j;
}

Json local_link_to_json(const LocalLink& link) {
  Json j;
  j["slice"] = slice_to_json(link.slice);
  j["shift"] = link.link.shift;
  j["betti"] = betti_to_json(link.link.space);
  return j;
}

}  // namespace singcoh::io
