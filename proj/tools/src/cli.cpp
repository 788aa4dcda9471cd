#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "singcoh/catalog.hpp"
#include "singcoh/detection.hpp"
#include "singcoh/error.hpp"
#include "singcoh/gysin.hpp"
#include "singcoh/io.hpp"
#include "singcoh/kite.hpp"
#include "singcoh/normalform.hpp"
#include "singcoh/stiefel.hpp"

namespace singcoh::cli {

namespace {

using io::Json;

struct KindOptions {
  std::string kind;
  int m = 0;
  int p = 0;

  void attach(CLI::App* cmd, bool required = true) {
    auto* k = cmd->add_option("--kind", kind, "general | sym | skew | rect");
    auto* mm = cmd->add_option("--m", m, "matrix size (rows for rect)");
    if (required) {
      k->required();
      mm->required();
    }
    cmd->add_option("--p", p, "column count for rect");
  }

  MatrixKind resolve() const {
    const Family family = parse_family(kind);
    if (family == Family::Rectangular && p == 0)
      fail(ErrorCode::InvalidArgument, "rectangular kinds need --p");
    return MatrixKind::make(family, m, p);
  }
};

Coefficients coefficients_or_default(const std::string& text, const MatrixKind& kind,
                                     SpaceSelector space) {
  if (!text.empty()) return parse_coefficients(text);
  if (kind.family() == Family::Symmetric || space == SpaceSelector::Link)
    return Coefficients::CharZeroField;
  return Coefficients::Integers;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read input file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse_json(ss.str());
}

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = io::kSchema;
  j["command"] = command;
  return j;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

Json cohomology(const MatrixKind& kind, SpaceSelector space, const std::string& coeff_text) {
  const Coefficients coeff = coefficients_or_default(coeff_text, kind, space);
  Json j = envelope("cohomology");
  j["kind"] = io::kind_to_json(kind);
  j["space"] = std::string(to_string(space));
  j["coefficients"] = std::string(to_string(coeff));
  j["model"] = compact_model(kind, space);
  switch (space) {
    case SpaceSelector::MilnorFiber: merge(j, io::algebra_to_json(milnor_fiber_cohomology(kind, coeff))); break;
    case SpaceSelector::Complement: merge(j, io::algebra_to_json(complement_cohomology(kind, coeff))); break;
    case SpaceSelector::Link: {
      const auto link = link_of_variety_cohomology(kind, coeff);
      j["complement"] = io::algebra_to_json(complement_cohomology(kind, coeff));
      j["shift"] = link.shift;
      j["betti"] = io::betti_to_json(link.space);
      break;
    }
  }
  return j;
}

Json kite(const KiteSpec& spec) {
  Json j = envelope("kite");
  j["spec"] = io::kite_spec_to_json(spec);
  j["dimension"] = kite_dimension(spec);
  Json gens = Json::array();
  for (const auto& g : kite_generators(spec)) {
    Json slots = Json::array();
    for (const auto& [r, c] : g.positive) slots.push_back({r + 1, c + 1, 1});
    for (const auto& [r, c] : g.negative) slots.push_back({r + 1, c + 1, -1});
    gens.push_back({{"label", g.label}, {"variable", g.variable}, {"tail", g.tail}, {"slots", slots}});
  }
  j["generators"] = gens;
  j["linear_map"] = io::polymatrix_to_json(linear_kite_map(spec));
  return j;
}

MatrixKind kind_from_germ(const PolyMatrix& germ, const KindOptions& opts) {
  std::optional<Family> family = germ.kind_tag();
  if (!opts.kind.empty()) {
    const Family requested = parse_family(opts.kind);
    if (family && *family != requested)
      fail(ErrorCode::InvalidArgument, "--kind " + opts.kind + " contradicts the germ's kind tag " +
                                           io::kind_tag_name(*family));
    family = requested;
  }
  if (!family) fail(ErrorCode::InvalidArgument, "germ has no kind tag; pass --kind");
  if (*family == Family::Rectangular) return MatrixKind::rectangular(germ.rows(), germ.cols());
  if (germ.rows() != germ.cols()) fail(ErrorCode::InvalidArgument, "square kinds need a square germ");
  return MatrixKind::make(*family, germ.rows());
}

Json certify(const std::string& input, const KindOptions& opts, int ell,
             const std::vector<std::string>& zeros, const std::string& witness_path) {
  const PolyMatrix germ = io::polymatrix_from_json(read_json_file(input));
  const KiteSpec spec{kind_from_germ(germ, opts), ell};
  std::map<std::string, Rational> assignment;
  for (const auto& z : zeros) assignment[z] = 0;
  std::optional<OpWitness> witness;
  if (!witness_path.empty())
    witness = io::witness_from_json(read_json_file(witness_path), germ.all_variables());
  Json j = envelope("certify");
  merge(j, io::certificate_to_json(certify_containment(germ, assignment, spec, witness)));
  return j;
}

Json factorize_cmd(const std::string& input, double tol) {
  const CMatrix b = io::complex_matrix_from_json(read_json_file(input));
  const auto factors = factorize(b, tol);
  Json j = envelope("factorize");
  j["size"] = b.rows();
  j["tolerance"] = tol;
  Json list = Json::array();
  for (const auto& f : factors) list.push_back(io::pseudo_rotation_to_json(f));
  j["factors"] = list;
  j["reconstruction_error"] =
      io::tidy_error((reconstruct(factors, static_cast<int>(b.rows())) - b).cwiseAbs().maxCoeff());
  return j;
}

Json schubert_cmd(const std::string& input, int m, int p, double tol) {
  Json j = envelope("schubert");
  if (!input.empty()) {
    const CMatrix b = io::complex_matrix_from_json(read_json_file(input));
    j["m"] = b.rows();
    j["p"] = p;
    j["cell"] = io::schubert_index_to_json(schubert_index_of(b, p, tol));
    return j;
  }
  if (m == 0) fail(ErrorCode::InvalidArgument, "schubert needs --input or --m");
  j["m"] = m;
  j["p"] = p;
  Json cells = Json::array();
  for (const auto& c : enumerate_cells(m, p)) cells.push_back(io::schubert_index_to_json(c));
  j["cells"] = cells;
  j["polynomial"] = cell_polynomial(m, p).to_string();
  return j;
}

bool is_complex_grid(const Json& rows) {
  if (!rows.is_array()) return false;
  for (const auto& row : rows)
    if (row.is_array())
      for (const auto& cell : row)
        if (cell.is_array() || cell.is_number_float()) return true;
  return false;
}

Json normal_form_cmd(const std::string& input, const std::string& kind_text) {
  const Json data = read_json_file(input);
  std::optional<Family> family;
  if (data.is_object() && data.contains("kind") && data.at("kind").is_string())
    family = io::parse_kind_tag(data.at("kind").get<std::string>());
  if (!kind_text.empty()) family = parse_family(kind_text);
  if (!family) fail(ErrorCode::InvalidArgument, "normal-form needs --kind or a kind tag in the input");

  const Json* grid = &data;
  if (data.is_object() && data.contains("matrix")) grid = &data.at("matrix");
  NormalFormCertificate cert;
  if (is_complex_grid(*grid)) {
    cert = rank_normal_form(io::complex_matrix_from_json(*grid), *family);
  } else {
    RationalMatrix a = data.is_object() && data.contains("entries")
                           ? io::rational_matrix_from_json(data)
                           : io::rational_matrix_from_json(*grid);
    cert = rank_normal_form(a, *family);
  }
  Json j = envelope("normal-form");
  merge(j, io::normal_form_to_json(cert, verify_certificate(cert)));
  return j;
}

Json gysin_cmd(const MatrixKind& kind, std::optional<int> rank, std::optional<int> ell,
               const std::string& coeff_text) {
  if (rank.has_value() == ell.has_value())
    fail(ErrorCode::InvalidArgument, "gysin needs exactly one of --rank and --ell");
  const int corank = ell ? *ell : kind.generic_rank() - *rank;
  const Coefficients coeff = coefficients_or_default(coeff_text, kind, SpaceSelector::Link);
  const auto map = gysin_map(kind, corank, coeff);
  Json j = envelope("gysin");
  j["coefficients"] = std::string(to_string(coeff));
  merge(j, io::gysin_to_json(map));
  const auto local = local_link_cohomology(kind, corank, coeff);
  j["local_link"] = {{"shift", local.link.shift}, {"betti", io::betti_to_json(local.link.space)}};
  const auto global = link_of_variety_cohomology(kind, coeff);
  j["global_link"] = {{"shift", global.shift}, {"betti", io::betti_to_json(global.space)}};
  return j;
}

void emit_error(std::ostream& err, const std::string& code, const std::string& message,
                const Json& extra = Json::object()) {
  Json e;
  e["code"] = code;
  e["message"] = message;
  merge(e, extra);
  Json j;
  j["schema"] = io::kSchema;
  j["error"] = e;
  err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic cohomology of matrix singularities", "singcoh"};
  app.set_version_flag("--version", "singcoh 0.1.0");
  app.require_subcommand(1);
  bool pretty = false;
  std::optional<Json> result;
  std::function<Json()> action;

  auto add_pretty = [&](CLI::App* cmd) { cmd->add_flag("--pretty", pretty, "aligned tables instead of JSON"); };

  KindOptions kind_opts;
  std::string space_text = "milnor", coeff_text, input, witness_path, nf_kind;
  int ell = 0, n = 0, m = 0, p = 0;
  std::optional<int> rank_opt, ell_opt;
  double tol = kDefaultUnitaryTolerance;
  std::vector<std::string> zeros;

  auto* coh = app.add_subcommand("cohomology", "cohomology of a Milnor fiber, complement or link");
  kind_opts.attach(coh);
  coh->add_option("--space", space_text, "milnor | complement | link");
  coh->add_option("--coeff", coeff_text, "Z | mod2 | char0");
  add_pretty(coh);
  coh->callback([&] {
    action = [&] { return cohomology(kind_opts.resolve(), parse_space(space_text), coeff_text); };
  });

  auto* det = app.add_subcommand("detect", "cohomology detected by a kite of size ell");
  kind_opts.attach(det);
  det->add_option("--ell", ell, "kite size")->required();
  det->add_option("--space", space_text, "milnor | complement | link");
  det->add_option("--coeff", coeff_text, "Z | mod2 | char0");
  det->add_option("--n", n, "complex dimension of the germ's source (link only)");
  add_pretty(det);
  det->callback([&] {
    action = [&] {
      const MatrixKind kind = kind_opts.resolve();
      const SpaceSelector space = parse_space(space_text);
      Json j = envelope("detect");
      merge(j, io::detection_to_json(detect(kind, space, ell,
                                            coefficients_or_default(coeff_text, kind, space),
                                            n > 0 ? std::optional<int>(n) : std::nullopt)));
      return j;
    };
  });

  auto* kt = app.add_subcommand("kite", "linear kite space and kite map");
  kind_opts.attach(kt);
  kt->add_option("--ell", ell, "kite size or length")->required();
  add_pretty(kt);
  kt->callback([&] { action = [&] { return kite(KiteSpec{kind_opts.resolve(), ell}); }; });

  auto* cert = app.add_subcommand("certify", "certify that a germ contains a kite map");
  cert->add_option("--input", input, "germ polymatrix JSON")->required();
  cert->add_option("--kind", kind_opts.kind, "overrides or supplies the germ's kind tag");
  cert->add_option("--ell", ell, "kite size or length")->required();
  cert->add_option("--zero", zeros, "variables set to zero")->delimiter(',');
  cert->add_option("--witness", witness_path, "unfurling witness JSON");
  add_pretty(cert);
  cert->callback([&] { action = [&] { return certify(input, kind_opts, ell, zeros, witness_path); }; });

  auto* fac = app.add_subcommand("factorize", "pseudo-rotation factorization of a unitary matrix");
  fac->add_option("--input", input, "complex matrix JSON")->required();
  fac->add_option("--tol", tol, "tolerance");
  add_pretty(fac);
  fac->callback([&] { action = [&] { return factorize_cmd(input, tol); }; });

  auto* sch = app.add_subcommand("schubert", "Schubert cells of U_m/U_{m-p}");
  sch->add_option("--input", input, "unitary matrix whose cell is wanted");
  sch->add_option("--m", m, "size when enumerating cells");
  sch->add_option("--p", p, "quotient parameter")->required();
  sch->add_option("--tol", tol, "tolerance");
  add_pretty(sch);
  sch->callback([&] { action = [&] { return schubert_cmd(input, m, p, tol); }; });

  auto* nf = app.add_subcommand("normal-form", "rank normal form with a verifiable certificate");
  nf->add_option("--input", input, "matrix JSON (rational or [re, im] entries)")->required();
  nf->add_option("--kind", nf_kind, "general | sym | skew");
  add_pretty(nf);
  nf->callback([&] { action = [&] { return normal_form_cmd(input, nf_kind); }; });

  auto* gy = app.add_subcommand("gysin", "relative Gysin degrees for a rank stratum");
  kind_opts.attach(gy);
  gy->add_option("--rank", rank_opt, "rank of the stratum");
  gy->add_option("--ell", ell_opt, "corank of the stratum");
  gy->add_option("--coeff", coeff_text, "coefficients (field only)");
  add_pretty(gy);
  gy->callback([&] {
    action = [&] { return gysin_cmd(kind_opts.resolve(), rank_opt, ell_opt, coeff_text); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    const Json j = action();
    out << (pretty ? render_pretty(j) : j.dump(2) + "\n");
    return kExitOk;
  } catch (const ParseError& e) {
    emit_error(err, std::string(to_string(e.code())), e.what(), {{"position", e.position()}});
  } catch (const VerificationError& e) {
    emit_error(err, std::string(to_string(e.code())), e.what(), {{"constraint", e.constraint()}});
  } catch (const Error& e) {
    emit_error(err, std::string(to_string(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    emit_error(err, "parse_error", e.what());
  } catch (const std::exception& e) {
    emit_error(err, "internal", e.what());
  }
  return kExitDomain;
}

}  // namespace singcoh::cli
