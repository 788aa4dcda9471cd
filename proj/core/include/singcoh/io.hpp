#pragma once

// JSON encodings shared by the CLI and the tests.  Objects keep insertion
// order so that serialized output is byte-stable.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "singcoh/detection.hpp"
#include "singcoh/grading.hpp"
#include "singcoh/gysin.hpp"
#include "singcoh/kite.hpp"
#include "singcoh/normalform.hpp"
#include "singcoh/polymatrix.hpp"
#include "singcoh/stiefel.hpp"

namespace singcoh::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "singcoh/1";

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

std::string kind_tag_name(Family family);  // "general", "symmetric", "skew", "rect"
Family parse_kind_tag(const std::string& text);

/// {"vars", "rows", "cols", "kind"?, "entries": [[expr, ...], ...]}
PolyMatrix polymatrix_from_json(const Json& j);
Json polymatrix_to_json(const PolyMatrix& m);

/// {"vars"?, "left", "left_inverse", "right"?, "right_inverse"?,
///  "substitution"? {var: expr}, "substitution_inverse"?}.  Matrices are
/// arrays of rows of expression strings, parsed against "vars" when present
/// and `fallback_vars` otherwise.
OpWitness witness_from_json(const Json& j, const std::vector<std::string>& fallback_vars = {});
Json witness_to_json(const OpWitness& w);
/// Hex SHA-256 of the compact serialization of witness_to_json(w).
std::string witness_hash(const OpWitness& w);

/// {"2": 1, "3": 1, ...} with degrees ascending.
Json betti_to_json(const GradedVectorSpace& space);
Json algebra_to_json(const GradedAlgebra& algebra);
Json kind_to_json(const MatrixKind& kind);

Json kite_spec_to_json(const KiteSpec& spec);
Json certificate_to_json(const KiteCertificate& cert);

Json detection_to_json(const DetectionResult& result);

/// Floating output is rounded to 12 significant digits; magnitudes below
/// 1e-14 print as 0 so that serialized bytes do not carry rounding noise.
double tidy(double x);
/// Error metrics: values below 1e-12 print as 0, others with 3 digits.
double tidy_error(double x);

/// Rows of [re, im] pairs (plain numbers are read as real).  Accepts the bare
/// array or an object with a "matrix" field.
CMatrix complex_matrix_from_json(const Json& j);
Json complex_matrix_to_json(const CMatrix& m);
Json pseudo_rotation_to_json(const PseudoRotation& f);
Json schubert_index_to_json(const SchubertIndex& s);

/// Constant polymatrix JSON, or a bare array of rows of rationals.
RationalMatrix rational_matrix_from_json(const Json& j);
Json rational_matrix_to_json(const RationalMatrix& m);
Json normal_form_to_json(const NormalFormCertificate& cert, const CertificateReport& report);

Json slice_to_json(const StratumSlice& slice);
Json gysin_to_json(const GysinMap& map);
Json local_link_to_json(const LocalLink& link);

}  // namespace singcoh::io
