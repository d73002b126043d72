#pragma once

#include "torsionlab/automorphism.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torsionlab {

enum class Family {
  S,               // heisenberg3, (t)
  D,               // heisenberg3, (x), x != 0
  T,               // heisenberg3, (a, b), b != 0
  Tprime,          // heisenberg3, (a, b), b != 0
  Jstar_sl2,       // sl2-Y, (lambda)
  Jalpha_sl2,      // sl2-H, (alpha)
  Stilde,          // nxn, (eps, xi), eps = +-1
  Dtilde,          // nxn, (x), x != 0
  Ttilde,          // nxn, (a, b) = (xi^3_3, xi^4_3), a != 0
  Ttilde_remark_a, // nxn, (u, v) = (xi^1_2, xi^2_2), uv != 0
  Ttilde_remark_b, // nxn, (v) = (xi^2_2), v != 0
  Jtilde_sl2sl2,   // sl2xsl2, (p, q) = (xi^2_2, xi^2_5), q != 0
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);
std::size_t parameter_count(Family f);

struct CanonicalForm {
  Family family;
  std::vector<Rational> params;
  AlgebraPtr algebra;
  MatrixQ matrix;

  LinearMap map() const { return LinearMap(algebra, matrix); }
};

CanonicalForm build_canonical(Family family, std::vector<Rational> params);

struct ClassificationResult {
  CanonicalForm canonical;
  /// conjugator * J * conjugator^{-1} == canonical.matrix when certified.
  std::optional<Automorphism> conjugator;
  bool certified = false;
  /// Set when the floating-point eigenvalue path was used; `numeric_eigenvalue` is its real eigenvalue.
  bool numeric = false;
  double numeric_eigenvalue = 0.0;
};

/// Zero-torsion maps on the Heisenberg algebra, reduced to S, D or T.
ClassificationResult classify_n(const LinearMap& j);

struct Sl2Options {
  /// Skip the exact eigenvector path and extract the real eigenvalue numerically.
  bool force_numeric = false;
  double tolerance = 1e-9;
};

/// Zero-torsion maps on sl(2,R) in either built-in basis, reduced to J_*(lambda) (Y basis input)
/// or J(alpha) (H basis input).
ClassificationResult classify_sl2(const LinearMap& j, const Sl2Options& options = {});

struct EquivalenceResult {
  /// phi with phi J1 phi^{-1} = J2.
  std::optional<Automorphism> witness;
  /// Name of a separating invariant when no witness exists.
  std::string invariant;
};

EquivalenceResult equivalent_n(const LinearMap& j1, const LinearMap& j2);
EquivalenceResult equivalent_sl2(const LinearMap& j1, const LinearMap& j2);

// n x n.

enum class NxnType { Stilde, Dtilde, Ttilde };
std::string_view to_string(NxnType t);

/// First-kind invariants of maps in the orbit of the n x n families: the family type and its
/// parameters, read from the quotient blocks (x1..x4) and the center block (x5, x6).
struct NxnInvariants {
  NxnType type;
  std::vector<Rational> params;  // Stilde: (eps, xi); Dtilde: (x); Ttilde: (a, b)
  friend bool operator==(const NxnInvariants&, const NxnInvariants&) = default;
};

/// Requires J to preserve the center span(x5, x6); otherwise a structure error.
NxnInvariants nxn_invariants(const LinearMap& j);

/// First-kind phi with phi J1 phi^{-1} = J2, searched in the solution space of phi J1 = J2 phi.
std::optional<Automorphism> nxn_first_kind_witness(const LinearMap& j1, const LinearMap& j2);

/// Equivalence under first or second kind automorphisms.
EquivalenceResult equivalent_nxn(const LinearMap& j1, const LinearMap& j2);

// sl(2,R) x sl(2,R).

/// (p, q) of the J~_* orbit under first-kind automorphisms: p is the trace of the first diagonal
/// block, q is a Killing-form ratio that equals xi^2_5 on J~_*(p, q).
std::vector<Rational> sl2xsl2_invariants(const LinearMap& j);

struct ProductEquivalence {
  bool reproduced = false;
  CanonicalForm source;
  CanonicalForm target;
  std::optional<Automorphism> witness;  // witness * source * witness^{-1} == target
  std::string detail;
};

/// Second-kind claims: for Stilde(eps, xi) the partner Stilde(-eps, -xi); Dtilde(x) -> Dtilde(-x);
/// Ttilde(a, b) -> Ttilde(-a, -b); Jtilde(p, q) -> Jtilde(-p, -(p^2 + 1)/q). The witness is the
/// swap (Theta or Gamma) composed with a first-kind automorphism and is checked exactly.
ProductEquivalence second_kind_partner(Family family, const std::vector<Rational>& params);

/// Block of an n x n map acting on one Heisenberg factor (0: x1, x2, x5; 1: x3, x4, x6).
MatrixQ nxn_factor_block(const MatrixQ& j, int factor);
/// Block-diagonal map on n x n from two maps on the factors.
MatrixQ nxn_block_diagonal(const MatrixQ& j1, const MatrixQ& j2);

struct MixedTypeResult {
  LinearMap map;
  ClassificationResult first;
  ClassificationResult second;
};

/// Zero-torsion, non-integrable block-diagonal map on n x n whose factor blocks classify to S and D.
std::optional<MixedTypeResult> mixed_type_search();

}  // namespace torsionlab
