#pragma once

#include "torsionlab/torsion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torsionlab {

/// Rank r CR-structure: a 2r-dimensional subspace p with an endomorphism jp, written in the
/// coordinates of p_basis (column k is jp applied to p_basis[k]).
struct CRStructure {
  AlgebraPtr algebra;
  std::vector<VecQ> p_basis;
  MatrixQ jp;

  std::size_t rank() const { return p_basis.size() / 2; }
  /// jp applied to a vector given in p coordinates, returned in algebra coordinates.
  VecQ apply(const VecQ& p_coords) const;
};

enum class CRObstruction { KernelTooSmall, ConditionB, ConditionC };

std::string_view to_string(CRObstruction o);

/// Outcome of the three conditions: (a) jp^2 = -1, (b) [X,Y] - [JX,JY] in p,
/// (c) torsion of jp vanishes on p.
struct CRConditions {
  bool a = false;
  bool b = false;
  bool c = false;
  bool valid() const { return a && b && c; }
};

/// Throws Structure on an odd or dependent basis, Dimension on shape mismatch.
CRConditions cr_conditions(const CRStructure& cr);
bool is_valid_cr(const CRStructure& cr);

struct ExtensionVerdict {
  bool extends = false;
  std::optional<CRStructure> witness;
  std::optional<CRObstruction> obstruction;
  std::string detail;
};

/// Looks for p with J(p) = p and J|p a CR-structure. The whole algebra is tried first when
/// J^2 = -1; otherwise p = span(v, Jv) for v in ker(J^2 + 1).
ExtensionVerdict cr_extension_verdict(const LinearMap& j);

/// True iff all brackets between the given vectors vanish.
bool is_abelian_span(const LieAlgebra& algebra, const std::vector<VecQ>& basis);

struct CRFormCheck {
  std::string id;
  Rational parameter;
  bool passed = false;
  std::string detail;
};

/// Canonical CR forms on the Heisenberg algebra, checked for each parameter value:
/// form (i) [[0,-1,0],[1,0,0],[0,0,t]] has zero torsion and extends a CR-structure on a
/// nonabelian p; form (ii) [[t,0,0],[0,0,1],[0,-1,0]] has nonzero torsion and abelian
/// p = span(x3, Jx3); form (i) with a nonzero xi^1_3 or xi^2_3 has nonzero torsion.
std::vector<CRFormCheck> canonical_cr_forms_n(const std::vector<Rational>& parameters);

MatrixQ cr_form_i(const Rational& t);
MatrixQ cr_form_ii(const Rational& t);

}  // namespace torsionlab
