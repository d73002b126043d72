#pragma once

#include "torsionlab/torsion.hpp"

#include <optional>
#include <string>

namespace torsionlab {

enum class AutKind { FirstKind, SecondKind, AdjointComponent, PsiComponent, Generic };

std::string_view to_string(AutKind kind);

bool is_automorphism(const LieAlgebra& algebra, const MatrixQ& m);

/// Bracket-preserving invertible matrix; validated on construction.
class Automorphism {
 public:
  Automorphism(AlgebraPtr algebra, MatrixQ matrix, AutKind kind);

  const LieAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const MatrixQ& matrix() const noexcept { return matrix_; }
  AutKind kind() const noexcept { return kind_; }

  Automorphism inverse() const;
  /// (*this) after other; the kind becomes Generic unless both agree or a rule below applies.
  Automorphism compose(const Automorphism& other) const;

 private:
  AlgebraPtr algebra_;
  MatrixQ matrix_;
  AutKind kind_;
};

/// Phi J Phi^{-1}.
LinearMap conjugate(const LinearMap& j, const Automorphism& phi);
LinearMap conjugate(const LinearMap& j, const MatrixQ& phi);

// sl(2,R), basis (H, X+, X-) unless stated otherwise.

/// Matrix of Ad(sigma), sigma = [[a, b], [c, d]] with ad - bc = 1.
Automorphism ad_matrix(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
/// Ad(sigma) for any invertible rational sigma, computed by conjugating the basis matrices.
/// Tagged AdjointComponent when det sigma > 0 and PsiComponent otherwise.
Automorphism adjoint_action(const MatrixQ& sigma);
Automorphism psi0();
/// Change of coordinates between the H and Y bases for endomorphisms of sl(2,R).
MatrixQ sl2_to_y_basis(const MatrixQ& h_matrix);
MatrixQ sl2_to_h_basis(const MatrixQ& y_matrix);
/// Same automorphism written in the Y basis.
Automorphism in_y_basis(const Automorphism& phi_h);

/// Invariant form x^2 + yz of v = xH + yX+ + zX-.
Rational orbit_form(const VecQ& v);
/// v as the traceless matrix [[x, y], [z, -x]].
MatrixQ sl2_matrix(const VecQ& v);
VecQ sl2_vector(const MatrixQ& x);

enum class AdOrbit { Zero, ConeUpper, ConeLower, OneSheet, TwoSheetUpper, TwoSheetLower };
enum class AutOrbit { Zero, Cone, OneSheet, TwoSheet };

std::string_view to_string(AdOrbit o);
std::string_view to_string(AutOrbit o);
AutOrbit merge(AdOrbit o);

struct OrbitClass {
  AdOrbit ad_class;
  AutOrbit aut_class;
  Rational q;
  /// sqrt(|q|) when it is rational; empty for irrational scales (and 0 on Zero and cones).
  std::optional<Rational> s;
  bool s_irrational = false;
};

OrbitClass classify_orbit(const VecQ& v);
/// Canonical representative of a class at scale s.
VecQ orbit_representative(AdOrbit o, const Rational& s = 1);
VecQ orbit_representative(AutOrbit o, const Rational& s = 1);

/// phi with phi(representative * s) = v. For an Ad(G) target the result lies in Ad(G).
Automorphism orbit_transporter(const VecQ& v, AdOrbit target);
Automorphism orbit_transporter(const VecQ& v, AutOrbit target);

// Heisenberg algebra.

/// [[B, 0], [w, det B]].
Automorphism aut_n_generic(const MatrixQ& b, const VecQ& w);

// n x n.

/// First kind: diagonal blocks b1 (x1, x2) and b2 (x3, x4), rows 5 and 6 given by `lower`
/// (2 x 4), center entries det b1 and det b2.
Automorphism nxn_first_kind(const MatrixQ& b1, const MatrixQ& b2, const MatrixQ& lower);
/// Factor swap x1 <-> x3, x2 <-> x4, x5 <-> x6.
Automorphism nxn_theta();
Automorphism nxn_second_kind(const Automorphism& first_kind);

// sl(2,R) x sl(2,R), Y bases.

/// diag(phi1, phi2), both given in the Y basis of sl(2,R).
Automorphism sl2xsl2_first_kind(const MatrixQ& phi1_y, const MatrixQ& phi2_y);
Automorphism sl2xsl2_gamma();
/// Gamma o diag(phi1, phi2).
Automorphism sl2xsl2_second_kind(const MatrixQ& phi1_y, const MatrixQ& phi2_y);

}  // namespace torsionlab
