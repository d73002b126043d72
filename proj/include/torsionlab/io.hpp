#pragma once

#include "torsionlab/automorphism.hpp"
#include "torsionlab/classification.hpp"
#include "torsionlab/cr.hpp"
#include "torsionlab/symbolic_torsion.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace torsionlab {

/// Insertion-ordered so that serialized output is stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const GaussianRational& z);
Json to_json(const VecQ& v);
Json to_json(const VecQi& v);
/// {"dim": n, "entries": [[...], ...]} for square matrices, {"rows", "cols", "entries"} otherwise.
Json to_json(const MatrixQ& m);
Json to_json(const LieAlgebra& algebra);
Json to_json(const PolyQ& p);
Json to_json(const TorsionEquation& e);
Json to_json(const Automorphism& phi);
Json to_json(const CanonicalForm& c);
Json to_json(const ClassificationResult& r);
Json to_json(const EquivalenceResult& r);
Json to_json(const OrbitClass& c);
Json to_json(const CRStructure& cr);
Json to_json(const ExtensionVerdict& v);

/// Accepts "p/q", "p", decimals, and JSON integers.
Rational rational_from_json(const Json& j);
MatrixQ matrix_from_json(const Json& j);
/// 1-based bracket table with i < j; rejects tables failing the Jacobi identity unless told not to.
AlgebraPtr algebra_from_json(const Json& j, bool check_jacobi = true);
/// {"prefix": "xi", "fixed": [{"i": 1, "j": 2, "value": "lambda"}]}, 1-based; value is a
/// polynomial in named parameters.
struct PatternSpec {
  std::string prefix = "xi";
  EntryPattern pattern;
};
PatternSpec pattern_from_json(const Json& j, std::size_t dim);

Json read_json_file(const std::filesystem::path& path);

/// Built-in name, or "file:PATH" pointing at algebra JSON.
AlgebraPtr resolve_algebra(const std::string& spec, bool check_jacobi = true);

}  // namespace torsionlab
