#include "torsionlab/symbolic_torsion.hpp"

#include <algorithm>

namespace torsionlab {

const PolyQ& TorsionSystem::equation(const std::string& label) const {
  for (const auto& e : equations)
    if (e.label == label) return e.poly;
  throw Error(ErrorKind::Structure, "no torsion equation labelled " + label);
}

std::vector<std::string> TorsionSystem::labels() const {
  std::vector<std::string> out;
  for (const auto& e : equations) out.push_back(e.label);
  return out;
}

std::vector<TorsionEquation> TorsionSystem::nonzero() const {
  std::vector<TorsionEquation> out;
  std::copy_if(equations.begin(), equations.end(), std::back_inserter(out), [](const auto& e) { return !e.poly.is_zero(); });
  return out;
}

std::string torsion_label(std::size_t i, std::size_t j, std::size_t k, std::size_t dim) {
  const std::string sep = dim > 9 ? "," : "";
  return std::to_string(i + 1) + sep + std::to_string(j + 1) + "|" + std::to_string(k + 1);
}

std::string unknown_name(const std::string& prefix, std::size_t i, std::size_t j) {
  return prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

TorsionSystem generate_system(AlgebraPtr algebra, const EntryPattern& pattern, const std::string& prefix) {
  const std::size_t n = algebra->dim();
  Matrix<PolyQ> j(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) j(r, c) = PolyQ::variable(unknown_name(prefix, r, c));
  for (const auto& [pos, value] : pattern) {
    if (pos.first >= n || pos.second >= n) throw Error(ErrorKind::Dimension, "pattern entry outside the grid");
    j(pos.first, pos.second) = value;
  }
  TorsionSystem sys{algebra, prefix, j, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector<PolyQ> ea(n, PolyQ(0)), eb(n, PolyQ(0));
      ea[a] = 1;
      eb[b] = 1;
      const Vector<PolyQ> t = torsion_value(*algebra, j, ea, eb);
      for (std::size_t k = 0; k < n; ++k) sys.equations.push_back({torsion_label(a, b, k, n), t[k]});
    }
  return sys;
}

std::vector<std::string> mismatched_labels(const TorsionSystem& generated, const std::vector<TorsionEquation>& reference) {
  if (reference.size() != generated.equations.size())
    throw Error(ErrorKind::Structure, "reference has " + std::to_string(reference.size()) + " equations, system has " +
                                          std::to_string(generated.equations.size()));
  std::vector<std::string> bad;
  for (const auto& ref : reference) {
    if (!generated.equation(ref.label).ratio_to(ref.poly)) bad.push_back(ref.label);
  }
  return bad;
}

bool system_matches(const TorsionSystem& generated, const std::vector<TorsionEquation>& reference) {
  return mismatched_labels(generated, reference).empty();
}

std::map<std::string, Rational> evaluate_system(const TorsionSystem& system,
                                                const std::map<std::string, Rational>& assignment) {
  std::map<std::string, Rational> out;
  for (const auto& e : system.equations) out[e.label] = e.poly.evaluate(assignment);
  return out;
}

std::map<std::string, Rational> entries_of(const MatrixQ& j, const std::string& prefix) {
  std::map<std::string, Rational> out;
  for (std::size_t r = 0; r < j.rows(); ++r)
    for (std::size_t c = 0; c < j.cols(); ++c) out[unknown_name(prefix, r, c)] = j(r, c);
  return out;
}

namespace reference {

namespace {

std::vector<TorsionEquation> listing(std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::vector<TorsionEquation> out;
  for (const auto& [label, text] : rows) out.push_back({label, parse_poly(text)});
  return out;
}

}  // namespace

std::vector<TorsionEquation> heisenberg() {
  return listing({
      {"12|1", "xi_1_3*(xi_2_2 + xi_1_1)"},
      {"12|2", "xi_2_3*(xi_2_2 + xi_1_1)"},
      {"12|3", "xi_3_3*(xi_2_2 + xi_1_1) - xi_2_2*xi_1_1 + xi_2_1*xi_1_2 + 1"},
      {"13|1", "xi_2_3*xi_1_3"},
      {"13|2", "(xi_2_3)^2"},
      {"13|3", "xi_2_3*(xi_3_3 - xi_1_1) + xi_2_1*xi_1_3"},
      {"23|1", "(xi_1_3)^2"},
      {"23|2", "xi_2_3*xi_1_3"},
      {"23|3", "xi_1_3*(xi_2_2 - xi_3_3) - xi_2_3*xi_1_2"},
  });
}

PolyQ heisenberg_13_3_as_printed() { return parse_poly("xi_2_3*(xi_3_3 - xi_1_1) + xi_1_2*xi_1_3"); }

std::vector<TorsionEquation> sl2_h() {
  return listing({
      {"12|1", "2*(xi_2_2 + xi_1_1)*xi_1_2 + (xi_2_2 - xi_1_1)*xi_3_1 - (xi_2_1 + 2*xi_1_3)*xi_3_2"},
      {"12|2", "2*(xi_2_1*xi_1_2 + 1 + (xi_2_2)^2) - xi_3_1*xi_2_1 - 2*xi_3_2*xi_2_3"},
      {"12|3", "(xi_3_1 + 2*xi_1_2)*xi_3_1 - 2*(xi_2_2 + 2*xi_1_1)*xi_3_2 + 2*xi_3_3*xi_3_2"},
      {"13|1", "(xi_2_1 - 2*xi_1_3)*xi_1_1 + 2*xi_2_3*xi_1_2 + xi_3_1*xi_2_3 - (xi_2_1 + 2*xi_1_3)*xi_3_3"},
      {"13|2", "2*(xi_2_2 - 2*xi_1_1)*xi_2_3 + (xi_2_1 + 2*xi_1_3)*xi_2_1 - 2*xi_3_3*xi_2_3"},
      {"13|3", "xi_3_1*xi_2_1 - 2*xi_3_1*xi_1_3 - 2 + 2*xi_3_2*xi_2_3 - 2*(xi_3_3)^2"},
      {"23|1", "4*xi_1_3*xi_1_2 - 1 - xi_2_2*xi_1_1 - xi_3_2*xi_2_3 + (xi_2_2 - xi_1_1)*xi_3_3"},
      {"23|2", "4*xi_2_3*xi_1_2 - (xi_2_2 + xi_3_3)*xi_2_1"},
      {"23|3", "4*xi_3_2*xi_1_3 - (xi_2_2 + xi_3_3)*xi_3_1"},
  });
}

std::vector<TorsionEquation> sl2_y_star() {
  return listing({
      {"12|1", "(eta_3_1 + eta_1_3)*lambda - (eta_3_1 - eta_1_3)*eta_1_1"},
      {"12|2", "(eta_1_1 + lambda)*eta_2_3 - eta_2_1*eta_3_1"},
      {"12|3", "eta_1_1*lambda - 1 + (eta_3_1)^2 - (eta_1_1 + lambda)*eta_3_3"},
      {"13|1", "eta_2_3*eta_1_3 + eta_2_1*eta_1_1 + eta_2_3*eta_3_1 - eta_2_1*eta_3_3"},
      {"13|2", "eta_1_1*lambda + 1 + (eta_2_1)^2 + (eta_2_3)^2 + eta_3_1*eta_1_3 - (eta_1_1 - lambda)*eta_3_3"},
      {"13|3", "eta_2_3*eta_1_1 - eta_2_1*(eta_1_3 + eta_3_1) - eta_2_3*eta_3_3"},
      {"23|1", "eta_1_1*lambda + 1 - (eta_1_3)^2 + (eta_1_1 - lambda)*eta_3_3"},
      {"23|2", "eta_2_3*eta_1_3 - (eta_3_3 + lambda)*eta_2_1"},
      {"23|3", "(eta_3_1 + eta_1_3)*lambda + (eta_3_1 - eta_1_3)*eta_3_3"},
  });
}

EntryPattern sl2_y_star_pattern() {
  return {{{0, 1}, PolyQ(0)}, {{2, 1}, PolyQ(0)}, {{1, 1}, PolyQ::variable("lambda")}};
}

}  // namespace reference

namespace {

using Substitution = std::map<std::string, PolyQ>;

PolyQ var(const char* name) { return PolyQ::variable(name); }

/// Adds name -> value and rewrites earlier values so the map stays fully reduced.
void assign(Substitution& s, const std::string& name, const PolyQ& value) {
  for (auto& [k, v] : s) v = v.substitute(name, value);
  s[name] = value.substitute(s);
}

/// p scaled so that its constant term is 1; requires a nonzero constant term.
PolyQ unit_constant(const PolyQ& p) {
  const Rational c = p.constant_term();
  if (c.is_zero()) throw Error(ErrorKind::Internal, "expected a nonzero constant term");
  return p * PolyQ(1 / c);
}

/// One elimination step: after `subs`, equation `label` must be proportional to `expected`.
bool step(const TorsionSystem& sys, const Substitution& subs, const std::string& label, const PolyQ& expected,
          std::string& detail) {
  const PolyQ got = sys.equation(label).substitute(subs);
  const bool ok = got.ratio_to(expected).has_value();
  detail += label + ": " + got.sign_normalized().to_string() + (ok ? "" : " (unexpected)") + "; ";
  return ok;
}

CaseCheck case_one() {
  CaseCheck c{"case-1", "eigenvector on the cone: xi^1_3 = xi^2_3 = 0 contradicts 13|2 and 13|3", false, ""};
  const TorsionSystem sys = generate_system(sl2_h());
  Substitution s{{"xi_1_3", 0}, {"xi_2_3", 0}};
  bool ok = step(sys, s, "13|2", var("xi_2_1").pow(2), c.detail);
  assign(s, "xi_2_1", 0);
  const PolyQ last = sys.equation("13|3").substitute(s);
  ok = ok && last.is_definite_sum_of_squares() && last.ratio_to(1 + var("xi_3_3").pow(2)).has_value();
  c.detail += "13|3: " + last.sign_normalized().to_string();
  c.passed = ok;
  return c;
}

CaseCheck case_two() {
  CaseCheck c{"case-2", "eigenvector H: 12|2 and 23|1 sum to the constant 2", false, ""};
  const TorsionSystem sys = generate_system(sl2_h());
  Substitution s{{"xi_2_1", 0}, {"xi_3_1", 0}};
  bool ok = step(sys, s, "23|2", var("xi_2_3") * var("xi_1_2"), c.detail);
  ok = step(sys, s, "23|3", var("xi_3_2") * var("xi_1_3"), c.detail) && ok;
  assign(s, "xi_1_2", 0);
  assign(s, "xi_1_3", 0);
  ok = step(sys, s, "12|3", var("xi_3_2") * (var("xi_3_3") - var("xi_2_2") - 2 * var("xi_1_1")), c.detail) && ok;
  assign(s, "xi_3_3", var("xi_2_2") + 2 * var("xi_1_1"));
  ok = step(sys, s, "13|2", var("xi_1_1") * var("xi_2_3"), c.detail) && ok;
  assign(s, "xi_1_1", 0);
  const PolyQ e122 = sys.equation("12|2").substitute(s), e231 = sys.equation("23|1").substitute(s);
  const PolyQ a = unit_constant(e122), b = unit_constant(e231);
  const PolyQ sum = a + b;
  c.detail += "12|2: " + a.to_string() + "; 23|1: " + b.to_string() + "; sum: " + sum.to_string();
  c.passed = ok && a == parse_poly("-xi_2_3*xi_3_2 + (xi_2_2)^2 + 1") &&
             b == parse_poly("xi_2_3*xi_3_2 - (xi_2_2)^2 + 1") && sum == PolyQ(2);
  return c;
}

CaseCheck subcase_one_one() {
  CaseCheck c{"subcase-1.1", "eta^3_1 = eta^1_3 = 0, eta^3_3 = eta^1_1: *23|1 becomes (eta^1_1)^2 + 1", false, ""};
  const TorsionSystem sys = generate_system(sl2_y(), reference::sl2_y_star_pattern(), "eta");
  const Substitution s{{"eta_3_1", 0}, {"eta_1_3", 0}, {"eta_3_3", var("eta_1_1")}};
  const PolyQ p = sys.equation("23|1").substitute(s);
  c.detail = "*23|1: " + p.sign_normalized().to_string();
  c.passed = p.ratio_to(var("eta_1_1").pow(2) + 1).has_value() && p.is_definite_sum_of_squares();
  return c;
}

CaseCheck subcase_one_two() {
  CaseCheck c{"subcase-1.2", "eta^3_1 = eta^1_3, lambda = 0: *13|2 reduces to (eta^2_1)^2 + (eta^2_3)^2 + 2", false, ""};
  const TorsionSystem sys = generate_system(sl2_y(), reference::sl2_y_star_pattern(), "eta");
  const Substitution s{{"eta_1_3", var("eta_3_1")}, {"lambda", 0}};
  const PolyQ p132 = sys.equation("13|2").substitute(s), p231 = sys.equation("23|1").substitute(s);
  // *23|1 fixes eta^1_1 eta^3_3; eliminate that product from *13|2.
  const Monomial m = (var("eta_1_1") * var("eta_3_3")).terms().begin()->first;
  const Rational c1 = p132.coeff(m), c2 = p231.coeff(m);
  if (c2.is_zero()) {
    c.detail = "*23|1 lost the eta^1_1 eta^3_3 term";
    return c;
  }
  const PolyQ reduced = p132 - p231 * PolyQ(c1 / c2);
  c.detail = "*13|2 reduced: " + reduced.sign_normalized().to_string();
  c.passed = reduced.ratio_to(var("eta_2_1").pow(2) + var("eta_2_3").pow(2) + 2).has_value() &&
             reduced.is_definite_sum_of_squares();
  return c;
}

}  // namespace

std::vector<CaseCheck> verify_case_contradictions() {
  return {case_one(), case_two(), subcase_one_one(), subcase_one_two()};
}

}  // namespace torsionlab
