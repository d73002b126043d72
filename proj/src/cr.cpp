#include "torsionlab/cr.hpp"

#include "torsionlab/linalg.hpp"

namespace torsionlab {

std::string_view to_string(CRObstruction o) {
  switch (o) {
    case CRObstruction::KernelTooSmall: return "KernelTooSmall";
    case CRObstruction::ConditionB: return "ConditionB";
    case CRObstruction::ConditionC: return "ConditionC";
  }
  return "?";
}

VecQ CRStructure::apply(const VecQ& p_coords) const {
  const VecQ image = jp * p_coords;
  VecQ out(algebra->dim(), Rational(0));
  for (std::size_t k = 0; k < p_basis.size(); ++k) out = out + scaled(p_basis[k], image[k]);
  return out;
}

CRConditions cr_conditions(const CRStructure& cr) {
  const LieAlgebra& g = *cr.algebra;
  const std::size_t m = cr.p_basis.size();
  if (m == 0 || m % 2 != 0) throw Error(ErrorKind::Structure, "CR subspace needs an even, nonzero number of basis vectors");
  for (const auto& v : cr.p_basis)
    if (v.size() != g.dim()) throw Error(ErrorKind::Dimension, "basis vector length differs from the algebra dimension");
  if (rank(MatrixQ::from_columns(cr.p_basis)) != m) throw Error(ErrorKind::Structure, "CR basis is dependent");
  if (cr.jp.rows() != m || cr.jp.cols() != m) throw Error(ErrorKind::Dimension, "jp must be square of size dim p");

  CRConditions out;
  out.a = cr.jp * cr.jp == -1 * MatrixQ::identity(m);
  out.b = out.c = true;
  for (std::size_t i = 0; i < m && (out.b || out.c); ++i)
    for (std::size_t k = i + 1; k < m; ++k) {
      const VecQ &x = cr.p_basis[i], &y = cr.p_basis[k];
      const VecQ jx = cr.apply(unit_vector(m, i)), jy = cr.apply(unit_vector(m, k));
      if (!coordinates_in(cr.p_basis, g.bracket(x, y) - g.bracket(jx, jy))) out.b = false;
      const auto s = coordinates_in(cr.p_basis, g.bracket(jx, y) + g.bracket(x, jy));
      if (!s || !is_zero_vector(g.bracket(jx, jy) - g.bracket(x, y) - cr.apply(*s))) out.c = false;
    }
  return out;
}

bool is_valid_cr(const CRStructure& cr) { return cr_conditions(cr).valid(); }

bool is_abelian_span(const LieAlgebra& algebra, const std::vector<VecQ>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = i + 1; k < basis.size(); ++k)
      if (!is_zero_vector(algebra.bracket(basis[i], basis[k]))) return false;
  return true;
}

ExtensionVerdict cr_extension_verdict(const LinearMap& j) {
  const std::size_t n = j.dim();
  const MatrixQ& m = j.matrix();
  const auto k = kernel(m * m + MatrixQ::identity(n));
  ExtensionVerdict out;
  if (k.empty()) {
    out.obstruction = CRObstruction::KernelTooSmall;
    out.detail = "ker(J^2 + 1) = 0";
    return out;
  }
  if (k.size() == n) {
    std::vector<VecQ> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
    CRStructure whole{j.algebra_ptr(), basis, m};
    const CRConditions c = cr_conditions(whole);
    if (c.valid()) {
      out.extends = true;
      out.witness = std::move(whole);
      out.detail = "p is the whole algebra";
      return out;
    }
    out.obstruction = c.b ? CRObstruction::ConditionC : CRObstruction::ConditionB;
  }
  // On span(v, Jv) conditions (b) and (c) reduce to identities.
  const VecQ& v = k.front();
  CRStructure plane{j.algebra_ptr(), {v, m * v}, MatrixQ{{0, -1}, {1, 0}}};
  if (is_valid_cr(plane)) {
    out.extends = true;
    out.witness = std::move(plane);
    out.obstruction.reset();
    out.detail = "rank 1 on span(v, Jv)";
  }
  return out;
}

MatrixQ cr_form_i(const Rational& t) { return MatrixQ{{0, -1, 0}, {1, 0, 0}, {0, 0, t}}; }
MatrixQ cr_form_ii(const Rational& t) { return MatrixQ{{t, 0, 0}, {0, 0, 1}, {0, -1, 0}}; }

std::vector<CRFormCheck> canonical_cr_forms_n(const std::vector<Rational>& parameters) {
  const auto n = heisenberg3();
  std::vector<CRFormCheck> out;
  for (const Rational& t : parameters) {
    {
      const LinearMap j(n, cr_form_i(t));
      const ExtensionVerdict v = cr_extension_verdict(j);
      const bool nonabelian = v.witness && !is_abelian_span(*n, v.witness->p_basis);
      out.push_back({"form-i", t, has_zero_torsion(j) && v.extends && nonabelian,
                     "zero torsion: " + std::string(has_zero_torsion(j) ? "true" : "false") +
                         "; extends: " + (v.extends ? "true" : "false") + "; p nonabelian: " + (nonabelian ? "true" : "false")});
    }
    {
      const LinearMap j(n, cr_form_ii(t));
      const VecQ x3 = unit_vector(3, 2);
      const std::vector<VecQ> p{x3, j(x3)};
      const bool abelian = is_abelian_span(*n, p);
      out.push_back({"form-ii", t, !has_zero_torsion(j) && abelian,
                     "zero torsion: " + std::string(has_zero_torsion(j) ? "true" : "false") +
                         "; span(x3, Jx3) abelian: " + (abelian ? "true" : "false")});
    }
    {
      MatrixQ a = cr_form_i(t), b = cr_form_i(t);
      a(0, 2) = 1;
      b(1, 2) = 1;
      const bool za = has_zero_torsion(LinearMap(n, a)), zb = has_zero_torsion(LinearMap(n, b));
      out.push_back({"form-i-perturbed", t, !za && !zb,
                     "xi_1_3 = 1 zero torsion: " + std::string(za ? "true" : "false") +
                         "; xi_2_3 = 1 zero torsion: " + (zb ? "true" : "false")});
    }
  }
  return out;
}

}  // namespace torsionlab
