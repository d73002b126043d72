#include "torsionlab/cli.hpp"

#include "torsionlab/io.hpp"
#include "torsionlab/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace torsionlab::cli {

namespace {

enum class Format { Text, Json, Latex };

struct Options {
  std::string algebra = "heisenberg3";
  std::string matrix, matrix1, matrix2, pattern, vector;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  bool no_jacobi = false;
};

constexpr int kMathFailure = 1;
constexpr int kInputError = 2;
constexpr std::uint64_t kDefaultSeed = 20240611;

/// Input problems in user-supplied files and flags.
bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Dimension:
    case ErrorKind::Parameter:
    case ErrorKind::Assignment:
    case ErrorKind::Structure: return true;
    default: return false;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string latex_matrix(const MatrixQ& m) {
  std::string s = "\\begin{pmatrix}";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Rational& x = m(i, k);
      const Integer num = numerator_of(x), den = denominator_of(x);
      std::string e = den == 1 ? num.str() : "\\frac{" + Integer(abs(num)).str() + "}{" + den.str() + "}";
      if (den != 1 && num < 0) e = "-" + e;
      s += (k ? " & " : "") + e;
    }
    s += i + 1 < m.rows() ? " \\\\ " : "";
  }
  return s + "\\end{pmatrix}";
}

class Command {
 public:
  Command(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (o.format == "json") fmt_ = Format::Json;
    else if (o.format == "latex") fmt_ = Format::Latex;
    else if (o.format != "text") throw UsageError("--format must be json, text or latex");
  }

  AlgebraPtr algebra() const { return resolve_algebra(o_.algebra, !o_.no_jacobi); }

  LinearMap map_from(const std::string& path, const AlgebraPtr& alg, const char* flag) const {
    if (path.empty()) throw UsageError(std::string(flag) + " is required");
    MatrixQ m = matrix_from_json(read_json_file(path));
    if (m.rows() != alg->dim() || m.cols() != alg->dim())
      throw Error(ErrorKind::Dimension, "matrix in " + path + " does not match the algebra dimension " + std::to_string(alg->dim()));
    return LinearMap(alg, std::move(m));
  }

  std::uint64_t seed() const {
    if (o_.seed) return *o_.seed;
    if (const char* env = std::getenv("TORSIONLAB_SEED")) {
      try {
        std::size_t pos = 0;
        const auto v = std::stoull(env, &pos);
        if (pos == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw UsageError("TORSIONLAB_SEED must be a non-negative integer");
    }
    return kDefaultSeed;
  }

  int equations() {
    const AlgebraPtr alg = algebra();
    PatternSpec spec;
    if (!o_.pattern.empty()) spec = pattern_from_json(read_json_file(o_.pattern), alg->dim());
    const TorsionSystem sys = generate_system(alg, spec.pattern, spec.prefix);
    const auto eqs = sys.nonzero();
    if (fmt_ == Format::Json) {
      Json arr = Json::array();
      for (const auto& e : eqs) arr.push_back(to_json(TorsionEquation{e.label, e.poly.sign_normalized()}));
      out_ << arr.dump(2) << '\n';
    } else if (fmt_ == Format::Latex) {
      out_ << "\\begin{align*}\n";
      for (const auto& e : eqs) out_ << "&" << e.label << " && " << e.poly.sign_normalized().to_latex() << " = 0 \\\\\n";
      out_ << "\\end{align*}\n";
    } else {
      for (const auto& e : eqs) out_ << e.label << ": " << e.poly.sign_normalized().to_string() << '\n';
    }
    return 0;
  }

  int verify() {
    const AlgebraPtr alg = algebra();
    const LinearMap j = map_from(o_.matrix, alg, "--matrix");
    const bool zero = has_zero_torsion(j), integrable = is_complex_structure(j);
    const TorsionSystem sys = generate_system(alg);
    std::vector<std::pair<std::string, Rational>> nonzero;
    for (const auto& [label, value] : evaluate_system(sys, entries_of(j.matrix())))
      if (!value.is_zero()) nonzero.emplace_back(label, value);
    if (fmt_ == Format::Json) {
      Json comps = Json::array();
      for (const auto& [l, v] : nonzero) comps.push_back(Json{{"label", l}, {"value", to_json(v)}});
      out_ << Json{{"zero_torsion", zero}, {"integrable", integrable}, {"nonzero_components", comps}}.dump(2) << '\n';
    } else if (fmt_ == Format::Latex) {
      out_ << "\\text{zero torsion: " << yes_no(zero) << "; integrable: " << yes_no(integrable) << "}\n";
    } else {
      out_ << "zero torsion: " << yes_no(zero) << "; integrable: " << yes_no(integrable) << '\n';
      for (const auto& [l, v] : nonzero) out_ << "  " << l << " = " << to_string(v) << '\n';
    }
    return zero ? 0 : kMathFailure;
  }

  int classify() {
    const AlgebraPtr alg = algebra();
    const LinearMap j = map_from(o_.matrix, alg, "--matrix");
    const ClassificationResult r = classify_any(j);
    if (fmt_ == Format::Json) {
      out_ << to_json(r).dump(2) << '\n';
    } else {
      std::string params;
      for (std::size_t i = 0; i < r.canonical.params.size(); ++i) params += (i ? ", " : "") + to_string(r.canonical.params[i]);
      if (fmt_ == Format::Latex) {
        out_ << "\\mathrm{" << to_string(r.canonical.family) << "}(" << params << ")";
        if (r.conjugator) out_ << ",\\quad \\Phi = " << latex_matrix(r.conjugator->matrix());
        out_ << '\n';
      } else {
        out_ << "family: " << to_string(r.canonical.family) << "\nparams: " << params << "\ncertified: " << yes_no(r.certified) << '\n';
        if (r.conjugator) out_ << "conjugator (" << to_string(r.conjugator->kind()) << "): " << to_string(r.conjugator->matrix()) << '\n';
        if (r.numeric) out_ << "numeric eigenvalue: " << r.numeric_eigenvalue << '\n';
      }
    }
    return 0;
  }

  int equivalent() {
    const AlgebraPtr alg = algebra();
    const LinearMap j1 = map_from(o_.matrix1, alg, "--matrix1"), j2 = map_from(o_.matrix2, alg, "--matrix2");
    EquivalenceResult r;
    if (alg->same_structure(*heisenberg3())) r = equivalent_n(j1, j2);
    else if (alg->same_structure(*sl2_h()) || alg->same_structure(*sl2_y())) r = equivalent_sl2(j1, j2);
    else if (alg->same_structure(*n_x_n())) r = equivalent_nxn(j1, j2);
    else throw Error(ErrorKind::Precondition, "equivalence is decided on heisenberg3, sl2 and nxn only");
    const bool undecided = !r.witness && r.invariant.rfind("invariants agree", 0) == 0;
    if (fmt_ == Format::Json) {
      out_ << to_json(r).dump(2) << '\n';
    } else if (r.witness) {
      if (fmt_ == Format::Latex) out_ << "\\Phi = " << latex_matrix(r.witness->matrix()) << '\n';
      else out_ << "equivalent; witness (" << to_string(r.witness->kind()) << "): " << to_string(r.witness->matrix()) << '\n';
    } else {
      out_ << (undecided ? "undecided: " : "non-equivalent: ") << r.invariant << '\n';
    }
    return undecided ? kMathFailure : 0;
  }

  int orbit() {
    if (o_.vector.empty()) throw UsageError("--vector is required");
    VecQ v;
    std::stringstream ss(o_.vector);
    for (std::string part; std::getline(ss, part, ',');) v.push_back(parse_rational(part));
    if (v.size() != 3) throw UsageError("--vector needs three comma-separated coordinates x,y,z");
    const OrbitClass c = classify_orbit(v);
    std::optional<Automorphism> phi;
    if (!c.s_irrational) phi = orbit_transporter(v, c.ad_class);
    if (fmt_ == Format::Json) {
      Json j = to_json(c);
      j["representative"] = to_json(orbit_representative(c.ad_class, c.s.value_or(1)));
      j["transporter"] = phi ? to_json(*phi) : Json(nullptr);
      out_ << j.dump(2) << '\n';
    } else if (fmt_ == Format::Latex) {
      out_ << "q = " << to_string(c.q) << ",\\ \\text{" << to_string(c.ad_class) << "}";
      if (phi) out_ << ",\\quad \\varphi = " << latex_matrix(phi->matrix());
      out_ << '\n';
    } else {
      out_ << "class: " << to_string(c.ad_class) << " (Aut: " << to_string(c.aut_class) << ")\nq: " << to_string(c.q)
           << "\ns: " << (c.s ? to_string(*c.s) : std::string("irrational")) << '\n';
      if (phi) out_ << "transporter (" << to_string(phi->kind()) << "): " << to_string(phi->matrix()) << '\n';
      else out_ << "transporter: none over Q (irrational scale)\n";
    }
    return 0;
  }

  int cr_verdict() {
    const AlgebraPtr alg = algebra();
    const LinearMap j = map_from(o_.matrix, alg, "--matrix");
    const ExtensionVerdict v = cr_extension_verdict(j);
    if (fmt_ == Format::Json) {
      out_ << to_json(v).dump(2) << '\n';
    } else if (v.extends) {
      out_ << (fmt_ == Format::Latex ? "\\text{extends: rank " : "extends: rank ") << v.witness->rank();
      if (fmt_ == Format::Latex) out_ << "},\\quad J_p = " << latex_matrix(v.witness->jp) << '\n';
      else {
        out_ << "\np basis:";
        for (const auto& b : v.witness->p_basis) out_ << " " << to_string(MatrixQ::from_columns({b}).transpose());
        out_ << '\n';
      }
    } else {
      out_ << (fmt_ == Format::Latex ? "\\text{does not extend: " : "does not extend: ") << to_string(*v.obstruction)
           << (fmt_ == Format::Latex ? "}" : "") << '\n';
    }
    return 0;
  }

  int reproduce() {
    const ReproductionReport r = reproduce_paper(seed());
    if (fmt_ == Format::Json) out_ << to_json(r).dump(2) << '\n';
    else if (fmt_ == Format::Latex) out_ << to_latex(r);
    else out_ << to_text(r);
    return r.ok() ? 0 : kMathFailure;
  }

 private:
  ClassificationResult classify_any(const LinearMap& j) const {
    const LieAlgebra& g = j.algebra();
    if (g.same_structure(*heisenberg3())) return classify_n(j);
    if (g.same_structure(*sl2_h()) || g.same_structure(*sl2_y())) return classify_sl2(j);
    if (g.same_structure(*n_x_n())) {
      if (!is_complex_structure(j)) throw Error(ErrorKind::Precondition, "nxn classification needs a complex structure");
      const NxnInvariants inv = nxn_invariants(j);
      const Family f = inv.type == NxnType::Stilde ? Family::Stilde : inv.type == NxnType::Dtilde ? Family::Dtilde : Family::Ttilde;
      CanonicalForm c = build_canonical(f, inv.params);
      auto w = nxn_first_kind_witness(j, c.map());
      const bool ok = w.has_value();
      return ClassificationResult{std::move(c), std::move(w), ok};
    }
    if (g.same_structure(*sl2_x_sl2())) {
      if (!is_complex_structure(j)) throw Error(ErrorKind::Precondition, "sl2xsl2 classification needs a complex structure");
      return ClassificationResult{build_canonical(Family::Jtilde_sl2sl2, sl2xsl2_invariants(j)), std::nullopt, false};
    }
    throw Error(ErrorKind::Precondition, "no classification for algebra " + g.name());
  }

  const Options& o_;
  std::ostream& out_;
  Format fmt_ = Format::Text;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-torsion linear maps on low-dimensional real Lie algebras", "torsionlab"};
  app.require_subcommand(1);
  Options o;

  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "heisenberg3, sl2-H, sl2-Y, nxn, sl2xsl2 or file:PATH")->capture_default_str();
    sub->add_flag("--no-jacobi", o.no_jacobi, "accept bracket tables that fail the Jacobi identity");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, text or latex")->check(CLI::IsMember({"json", "text", "latex"}))->capture_default_str();
  };

  auto* equations = app.add_subcommand("equations", "print the zero-torsion equations of an algebra");
  add_algebra(equations);
  add_format(equations);
  equations->add_option("--pattern", o.pattern, "JSON file with fixed entries");

  auto* verify = app.add_subcommand("verify", "check zero torsion and integrability of a map");
  add_algebra(verify);
  add_format(verify);
  verify->add_option("--matrix", o.matrix, "matrix JSON")->required();

  auto* classify = app.add_subcommand("classify", "reduce a zero-torsion map to its canonical form");
  add_algebra(classify);
  add_format(classify);
  classify->add_option("--matrix", o.matrix, "matrix JSON")->required();
  classify->add_option("--seed", o.seed, "random seed");

  auto* equivalent = app.add_subcommand("equivalent", "decide equivalence of two maps");
  add_algebra(equivalent);
  add_format(equivalent);
  equivalent->add_option("--matrix1", o.matrix1, "first matrix JSON")->required();
  equivalent->add_option("--matrix2", o.matrix2, "second matrix JSON")->required();

  auto* orbit = app.add_subcommand("orbit", "adjoint orbit of a vector xH + yX+ + zX- in sl(2,R)");
  add_format(orbit);
  orbit->add_option("--vector", o.vector, "coordinates \"x,y,z\"")->required();

  auto* cr = app.add_subcommand("cr-verdict", "does a map extend a CR-structure");
  add_algebra(cr);
  add_format(cr);
  cr->add_option("--matrix", o.matrix, "matrix JSON")->required();

  auto* reproduce = app.add_subcommand("reproduce-paper", "run the full list of reproduction checks");
  add_format(reproduce);
  reproduce->add_option("--seed", o.seed, "random seed (falls back to TORSIONLAB_SEED)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kInputError;
  }

  try {
    Command c(o, out);
    if (equations->parsed()) return c.equations();
    if (verify->parsed()) return c.verify();
    if (classify->parsed()) return c.classify();
    if (equivalent->parsed()) return c.equivalent();
    if (orbit->parsed()) return c.orbit();
    if (cr->parsed()) return c.cr_verdict();
    return c.reproduce();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kInputError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (is_input_error(e.kind())) {
      err << app.help();
      return kInputError;
    }
    return kMathFailure;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace torsionlab::cli
