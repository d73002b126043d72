#include "torsionlab/io.hpp"

#include <fstream>

namespace torsionlab {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_from_json(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) parse_error(std::string(what) + " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const VecQ& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const VecQi& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  Json out;
  if (m.rows() == m.cols()) {
    out["dim"] = m.rows();
  } else {
    out["rows"] = m.rows();
    out["cols"] = m.cols();
  }
  out["entries"] = std::move(rows);
  return out;
}

Json to_json(const LieAlgebra& algebra) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t k = i + 1; k < algebra.dim(); ++k) {
      const VecQ b = algebra.basis_bracket(i, k);
      if (is_zero_vector(b)) continue;
      Json coeffs = Json::object();
      for (std::size_t c = 0; c < b.size(); ++c)
        if (!b[c].is_zero()) coeffs[std::to_string(c + 1)] = to_json(b[c]);
      brackets.push_back(Json{{"i", i + 1}, {"j", k + 1}, {"coeffs", std::move(coeffs)}});
    }
  return Json{{"name", algebra.name()}, {"dim", algebra.dim()}, {"basis", algebra.basis_names()}, {"brackets", brackets}};
}

Json to_json(const PolyQ& p) {
  Json terms = Json::array();
  // Highest degree first, matching the printed form.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json mono = Json::object();
    for (const auto& [var, e] : it->first.exponents()) mono[var] = e;
    terms.push_back(Json{{"coeff", to_json(it->second)}, {"monomial", std::move(mono)}});
  }
  return terms;
}

Json to_json(const TorsionEquation& e) { return Json{{"label", e.label}, {"poly", to_json(e.poly)}}; }

Json to_json(const Automorphism& phi) {
  return Json{{"kind", std::string(to_string(phi.kind()))}, {"matrix", to_json(phi.matrix())}};
}

Json to_json(const CanonicalForm& c) {
  Json params = Json::array();
  for (const auto& p : c.params) params.push_back(to_json(p));
  return Json{{"family", std::string(to_string(c.family))}, {"params", params}, {"algebra", c.algebra->name()},
              {"matrix", to_json(c.matrix)}};
}

Json to_json(const ClassificationResult& r) {
  Json params = Json::array();
  for (const auto& p : r.canonical.params) params.push_back(to_json(p));
  Json out{{"family", std::string(to_string(r.canonical.family))},
           {"params", params},
           {"conjugator", r.conjugator ? to_json(*r.conjugator) : Json(nullptr)},
           {"certified", r.certified}};
  if (r.numeric) out["numeric_eigenvalue"] = r.numeric_eigenvalue;
  return out;
}

Json to_json(const EquivalenceResult& r) {
  if (r.witness) return Json{{"equivalent", true}, {"witness", to_json(*r.witness)}};
  return Json{{"equivalent", false}, {"invariant", r.invariant}};
}

Json to_json(const OrbitClass& c) {
  Json out{{"ad_class", std::string(to_string(c.ad_class))},
           {"aut_class", std::string(to_string(c.aut_class))},
           {"q", to_json(c.q)}};
  out["s"] = c.s ? to_json(*c.s) : Json(nullptr);
  out["s_irrational"] = c.s_irrational;
  return out;
}

Json to_json(const CRStructure& cr) {
  Json basis = Json::array();
  for (const auto& v : cr.p_basis) basis.push_back(to_json(v));
  return Json{{"rank", cr.rank()}, {"p_basis", basis}, {"jp", to_json(cr.jp)}};
}

Json to_json(const ExtensionVerdict& v) {
  Json out{{"extends", v.extends}};
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  out["obstruction"] = v.obstruction ? Json(std::string(to_string(*v.obstruction))) : Json(nullptr);
  out["detail"] = v.detail;
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  parse_error("expected a rational as \"p/q\" or an integer");
}

MatrixQ matrix_from_json(const Json& j) {
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) parse_error("\"entries\" must be an array of rows");
  std::size_t rows = entries.size(), cols = rows == 0 ? 0 : entries.front().size();
  if (j.contains("dim")) {
    const auto dim = j.at("dim").get<std::size_t>();
    if (dim != rows) parse_error("\"dim\" does not match the number of rows");
    cols = dim;
  }
  MatrixQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = entries.at(r);
    if (!row.is_array() || row.size() != cols) parse_error("row " + std::to_string(r + 1) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row.at(c));
  }
  return m;
}

AlgebraPtr algebra_from_json(const Json& j, bool check_jacobi) {
  const Json& dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) parse_error("\"dim\" must be a positive integer");
  const auto dim = dim_j.get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("basis")) {
    names = j.at("basis").get<std::vector<std::string>>();
    if (names.size() != dim) parse_error("\"basis\" must list dim names");
  } else {
    for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  std::vector<LieAlgebra::Relation> rels;
  if (j.contains("brackets")) {
    for (const Json& b : j.at("brackets")) {
      const std::size_t i = index_from_json(field(b, "i"), dim, "bracket index i");
      const std::size_t k = index_from_json(field(b, "j"), dim, "bracket index j");
      if (i >= k) parse_error("bracket entries need i < j");
      VecQ coeffs(dim, Rational(0));
      for (const auto& [key, value] : field(b, "coeffs").items()) {
        std::size_t pos = 0;
        long long c = 0;
        try {
          c = std::stoll(key, &pos);
        } catch (const std::exception&) {
          parse_error("coefficient key \"" + key + "\" is not an index");
        }
        if (pos != key.size() || c < 1 || static_cast<std::size_t>(c) > dim) parse_error("coefficient key \"" + key + "\" out of range");
        coeffs[static_cast<std::size_t>(c - 1)] = rational_from_json(value);
      }
      rels.push_back({i, k, std::move(coeffs)});
    }
  }
  const std::string name = j.contains("name") ? j.at("name").get<std::string>() : "custom";
  auto alg = std::make_shared<const LieAlgebra>(name, std::move(names), std::move(rels));
  if (check_jacobi && !jacobi_check(*alg)) throw Error(ErrorKind::Structure, "bracket table fails the Jacobi identity");
  return alg;
}

PatternSpec pattern_from_json(const Json& j, std::size_t dim) {
  PatternSpec out;
  if (j.contains("prefix")) out.prefix = j.at("prefix").get<std::string>();
  if (j.contains("fixed")) {
    for (const Json& e : j.at("fixed")) {
      const std::size_t r = index_from_json(field(e, "i"), dim, "pattern row");
      const std::size_t c = index_from_json(field(e, "j"), dim, "pattern column");
      const Json& v = field(e, "value");
      out.pattern[{r, c}] = v.is_number_integer() ? PolyQ(Rational(v.get<long long>())) : parse_poly(v.get<std::string>());
    }
  }
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

AlgebraPtr resolve_algebra(const std::string& spec, bool check_jacobi) {
  if (spec.rfind("file:", 0) == 0) return algebra_from_json(read_json_file(spec.substr(5)), check_jacobi);
  if (auto a = builtin_algebra(spec)) return *a;
  parse_error("unknown algebra '" + spec + "'; expected heisenberg3, sl2-H, sl2-Y, nxn, sl2xsl2 or file:PATH");
}

}  // namespace torsionlab
