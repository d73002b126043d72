#include "torsionlab/automorphism.hpp"

#include <array>

namespace torsionlab {

std::string_view to_string(AutKind kind) {
  switch (kind) {
    case AutKind::FirstKind: return "first-kind";
    case AutKind::SecondKind: return "second-kind";
    case AutKind::AdjointComponent: return "adjoint";
    case AutKind::PsiComponent: return "psi0-adjoint";
    case AutKind::Generic: return "generic";
  }
  return "generic";
}

bool is_automorphism(const LieAlgebra& algebra, const MatrixQ& m) {
  const std::size_t n = algebra.dim();
  if (m.rows() != n || m.cols() != n) return false;
  if (determinant(m).is_zero()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m * algebra.basis_bracket(i, j) != algebra.bracket(m.column(i), m.column(j))) return false;
  return true;
}

Automorphism::Automorphism(AlgebraPtr algebra, MatrixQ matrix, AutKind kind)
    : algebra_(std::move(algebra)), matrix_(std::move(matrix)), kind_(kind) {
  if (!is_automorphism(*algebra_, matrix_))
    throw Error(ErrorKind::Parameter, "matrix is not an automorphism of " + algebra_->name());
}

Automorphism Automorphism::inverse() const { return Automorphism(algebra_, invert(matrix_), kind_); }

Automorphism Automorphism::compose(const Automorphism& other) const {
  AutKind k = AutKind::Generic;
  auto is = [](AutKind a, AutKind x, AutKind y) { return a == x || a == y; };
  if (is(kind_, AutKind::AdjointComponent, AutKind::PsiComponent) &&
      is(other.kind_, AutKind::AdjointComponent, AutKind::PsiComponent))
    k = (kind_ == other.kind_) ? AutKind::AdjointComponent : AutKind::PsiComponent;
  else if (is(kind_, AutKind::FirstKind, AutKind::SecondKind) && is(other.kind_, AutKind::FirstKind, AutKind::SecondKind))
    k = (kind_ == other.kind_) ? AutKind::FirstKind : AutKind::SecondKind;
  return Automorphism(algebra_, matrix_ * other.matrix_, k);
}

LinearMap conjugate(const LinearMap& j, const MatrixQ& phi) {
  return LinearMap(j.algebra_ptr(), phi * j.matrix() * invert(phi));
}

LinearMap conjugate(const LinearMap& j, const Automorphism& phi) {
  if (!j.algebra().same_structure(phi.algebra()))
    throw Error(ErrorKind::Precondition, "map and automorphism live on different algebras");
  return conjugate(j, phi.matrix());
}

Automorphism ad_matrix(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (a * d - b * c != 1) throw Error(ErrorKind::Parameter, "ad_matrix needs ad - bc = 1");
  MatrixQ m{{1 + 2 * b * c, -a * c, b * d}, {-2 * a * b, a * a, -b * b}, {2 * c * d, -c * c, d * d}};
  return Automorphism(sl2_h(), std::move(m), AutKind::AdjointComponent);
}

MatrixQ sl2_matrix(const VecQ& v) {
  if (v.size() != 3) throw Error(ErrorKind::Dimension, "sl2 vector must have 3 coordinates");
  return MatrixQ{{v[0], v[1]}, {v[2], -v[0]}};
}

VecQ sl2_vector(const MatrixQ& x) {
  if (x.rows() != 2 || x.cols() != 2) throw Error(ErrorKind::Dimension, "expected a 2x2 matrix");
  if (!(x(0, 0) + x(1, 1)).is_zero()) throw Error(ErrorKind::Parameter, "matrix is not traceless");
  return VecQ{x(0, 0), x(0, 1), x(1, 0)};
}

Automorphism adjoint_action(const MatrixQ& sigma) {
  if (sigma.rows() != 2 || sigma.cols() != 2) throw Error(ErrorKind::Dimension, "sigma must be 2x2");
  const Rational det = determinant(sigma);
  if (det.is_zero()) throw Error(ErrorKind::Parameter, "sigma is singular");
  const MatrixQ inv = invert(sigma);
  std::vector<VecQ> cols;
  for (std::size_t k = 0; k < 3; ++k) cols.push_back(sl2_vector(sigma * sl2_matrix(unit_vector(3, k)) * inv));
  return Automorphism(sl2_h(), MatrixQ::from_columns(cols), det > 0 ? AutKind::AdjointComponent : AutKind::PsiComponent);
}

Automorphism psi0() { return Automorphism(sl2_h(), MatrixQ::diagonal({1, -1, -1}), AutKind::PsiComponent); }

MatrixQ sl2_to_y_basis(const MatrixQ& h_matrix) {
  const MatrixQ p = sl2_y_to_h();
  return invert(p) * h_matrix * p;
}

MatrixQ sl2_to_h_basis(const MatrixQ& y_matrix) {
  const MatrixQ p = sl2_y_to_h();
  return p * y_matrix * invert(p);
}

Automorphism in_y_basis(const Automorphism& phi_h) {
  if (!phi_h.algebra().same_structure(*sl2_h())) throw Error(ErrorKind::Precondition, "expected an H-basis automorphism");
  return Automorphism(sl2_y(), sl2_to_y_basis(phi_h.matrix()), phi_h.kind());
}

Rational orbit_form(const VecQ& v) {
  if (v.size() != 3) throw Error(ErrorKind::Dimension, "sl2 vector must have 3 coordinates");
  return v[0] * v[0] + v[1] * v[2];
}

std::string_view to_string(AdOrbit o) {
  switch (o) {
    case AdOrbit::Zero: return "zero";
    case AdOrbit::ConeUpper: return "cone-upper";
    case AdOrbit::ConeLower: return "cone-lower";
    case AdOrbit::OneSheet: return "one-sheet";
    case AdOrbit::TwoSheetUpper: return "two-sheet-upper";
    case AdOrbit::TwoSheetLower: return "two-sheet-lower";
  }
  return "zero";
}

std::string_view to_string(AutOrbit o) {
  switch (o) {
    case AutOrbit::Zero: return "zero";
    case AutOrbit::Cone: return "cone";
    case AutOrbit::OneSheet: return "one-sheet";
    case AutOrbit::TwoSheet: return "two-sheet";
  }
  return "zero";
}

AutOrbit merge(AdOrbit o) {
  switch (o) {
    case AdOrbit::Zero: return AutOrbit::Zero;
    case AdOrbit::ConeUpper:
    case AdOrbit::ConeLower: return AutOrbit::Cone;
    case AdOrbit::OneSheet: return AutOrbit::OneSheet;
    case AdOrbit::TwoSheetUpper:
    case AdOrbit::TwoSheetLower: return AutOrbit::TwoSheet;
  }
  return AutOrbit::Zero;
}

OrbitClass classify_orbit(const VecQ& v) {
  const Rational q = orbit_form(v);
  OrbitClass c{AdOrbit::Zero, AutOrbit::Zero, q, Rational(0), false};
  if (is_zero_vector(v)) return c;
  // Sheets are separated by the sign of z - y; off the plane z = 0 this equals the sign of z.
  const int sheet = v[2].is_zero() ? sign(v[2] - v[1]) : sign(v[2]);
  if (q.is_zero()) {
    c.ad_class = sheet > 0 ? AdOrbit::ConeUpper : AdOrbit::ConeLower;
  } else {
    c.ad_class = q > 0 ? AdOrbit::OneSheet : (sheet > 0 ? AdOrbit::TwoSheetUpper : AdOrbit::TwoSheetLower);
    c.s = rational_sqrt(q > 0 ? q : -q);
    c.s_irrational = !c.s.has_value();
  }
  c.aut_class = merge(c.ad_class);
  return c;
}

VecQ orbit_representative(AdOrbit o, const Rational& s) {
  switch (o) {
    case AdOrbit::Zero: return VecQ{0, 0, 0};
    case AdOrbit::ConeUpper: return VecQ{0, 0, 1};
    case AdOrbit::ConeLower: return VecQ{0, 0, -1};
    case AdOrbit::OneSheet: return VecQ{s, 0, 0};
    case AdOrbit::TwoSheetUpper: return VecQ{0, -s, s};
    case AdOrbit::TwoSheetLower: return VecQ{0, s, -s};
  }
  return VecQ{0, 0, 0};
}

VecQ orbit_representative(AutOrbit o, const Rational& s) {
  switch (o) {
    case AutOrbit::Zero: return orbit_representative(AdOrbit::Zero, s);
    case AutOrbit::Cone: return orbit_representative(AdOrbit::ConeUpper, s);
    case AutOrbit::OneSheet: return orbit_representative(AdOrbit::OneSheet, s);
    case AutOrbit::TwoSheet: return orbit_representative(AdOrbit::TwoSheetLower, s);
  }
  return VecQ{0, 0, 0};
}

namespace {

Rational scale_of(const OrbitClass& c) {
  if (c.s_irrational)
    throw Error(ErrorKind::IrrationalScale, "|x^2 + yz| = " + to_string(c.q < 0 ? -c.q : c.q) + " is not a rational square");
  return c.s.value_or(Rational(0));
}

/// sigma with sigma R sigma^{-1} = V, where rep and v are nonzero with equal invariant form.
MatrixQ transporting_sigma(const VecQ& rep, const VecQ& v) {
  const auto w = similarity_witness_2x2(sl2_matrix(rep), sl2_matrix(v));
  if (!w) throw Error(ErrorKind::Internal, "no similarity witness for equal invariant forms");
  return *w;
}

Automorphism transporter_impl(const VecQ& v, const VecQ& rep, bool need_identity_component) {
  if (is_zero_vector(v)) return Automorphism(sl2_h(), MatrixQ::identity(3), AutKind::AdjointComponent);
  MatrixQ sigma = transporting_sigma(rep, v);
  if (need_identity_component && determinant(sigma) < 0) {
    // Only the one-sheet representative sH has a centralizer element of negative determinant (H itself).
    const MatrixQ r = sl2_matrix(rep);
    if (determinant(r) >= 0) throw Error(ErrorKind::Orbit, "target sheet is not reachable inside Ad(G)");
    sigma = sigma * r;
  }
  Automorphism phi = adjoint_action(sigma);
  if (phi.matrix() * rep != v) throw Error(ErrorKind::Internal, "transporter verification failed");
  return phi;
}

}  // namespace

Automorphism orbit_transporter(const VecQ& v, AdOrbit target) {
  const OrbitClass c = classify_orbit(v);
  if (c.ad_class != target)
    throw Error(ErrorKind::Orbit, "vector lies in " + std::string(to_string(c.ad_class)) + ", not " +
                                      std::string(to_string(target)));
  return transporter_impl(v, orbit_representative(target, scale_of(c)), true);
}

Automorphism orbit_transporter(const VecQ& v, AutOrbit target) {
  const OrbitClass c = classify_orbit(v);
  if (c.aut_class != target)
    throw Error(ErrorKind::Orbit, "vector lies in " + std::string(to_string(c.aut_class)) + ", not " +
                                      std::string(to_string(target)));
  return transporter_impl(v, orbit_representative(target, scale_of(c)), false);
}

Automorphism aut_n_generic(const MatrixQ& b, const VecQ& w) {
  if (b.rows() != 2 || b.cols() != 2 || w.size() != 2) throw Error(ErrorKind::Dimension, "expected 2x2 B and w of length 2");
  const Rational det = determinant(b);
  if (det.is_zero()) throw Error(ErrorKind::Parameter, "B must be invertible");
  MatrixQ m{{b(0, 0), b(0, 1), 0}, {b(1, 0), b(1, 1), 0}, {w[0], w[1], det}};
  return Automorphism(heisenberg3(), std::move(m), AutKind::Generic);
}

Automorphism nxn_first_kind(const MatrixQ& b1, const MatrixQ& b2, const MatrixQ& lower) {
  if (b1.rows() != 2 || b1.cols() != 2 || b2.rows() != 2 || b2.cols() != 2 || lower.rows() != 2 || lower.cols() != 4)
    throw Error(ErrorKind::Dimension, "first-kind parts must be 2x2, 2x2 and 2x4");
  const Rational d1 = determinant(b1), d2 = determinant(b2);
  if (d1.is_zero() || d2.is_zero()) throw Error(ErrorKind::Parameter, "first-kind diagonal blocks must be invertible");
  MatrixQ m(6, 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = b1(i, j);
      m(2 + i, 2 + j) = b2(i, j);
    }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(4 + i, j) = lower(i, j);
  m(4, 4) = d1;
  m(5, 5) = d2;
  return Automorphism(n_x_n(), std::move(m), AutKind::FirstKind);
}

Automorphism nxn_theta() {
  MatrixQ m(6, 6);
  for (auto [i, j] : std::array<std::pair<int, int>, 6>{{{0, 2}, {1, 3}, {2, 0}, {3, 1}, {4, 5}, {5, 4}}}) m(i, j) = 1;
  return Automorphism(n_x_n(), std::move(m), AutKind::SecondKind);
}

Automorphism nxn_second_kind(const Automorphism& first_kind) {
  if (first_kind.kind() != AutKind::FirstKind) throw Error(ErrorKind::Parameter, "expected a first-kind automorphism");
  return Automorphism(n_x_n(), nxn_theta().matrix() * first_kind.matrix(), AutKind::SecondKind);
}

namespace {

MatrixQ block_diag(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace

Automorphism sl2xsl2_first_kind(const MatrixQ& phi1_y, const MatrixQ& phi2_y) {
  if (!is_automorphism(*sl2_y(), phi1_y) || !is_automorphism(*sl2_y(), phi2_y))
    throw Error(ErrorKind::Parameter, "factor maps must be automorphisms of sl(2,R)");
  return Automorphism(sl2_x_sl2(), block_diag(phi1_y, phi2_y), AutKind::FirstKind);
}

Automorphism sl2xsl2_gamma() {
  MatrixQ m(6, 6);
  for (std::size_t k = 0; k < 3; ++k) {
    m(k, 3 + k) = 1;
    m(3 + k, k) = 1;
  }
  return Automorphism(sl2_x_sl2(), std::move(m), AutKind::SecondKind);
}

Automorphism sl2xsl2_second_kind(const MatrixQ& phi1_y, const MatrixQ& phi2_y) {
  const Automorphism d = sl2xsl2_first_kind(phi1_y, phi2_y);
  return Automorphism(sl2_x_sl2(), sl2xsl2_gamma().matrix() * d.matrix(), AutKind::SecondKind);
}

}  // namespace torsionlab
