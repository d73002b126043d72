#include "torsionlab/classification.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>

namespace torsionlab {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::D: return "D";
    case Family::T: return "T";
    case Family::Tprime: return "Tprime";
    case Family::Jstar_sl2: return "Jstar_sl2";
    case Family::Jalpha_sl2: return "Jalpha_sl2";
    case Family::Stilde: return "Stilde";
    case Family::Dtilde: return "Dtilde";
    case Family::Ttilde: return "Ttilde";
    case Family::Ttilde_remark_a: return "Ttilde_remark_a";
    case Family::Ttilde_remark_b: return "Ttilde_remark_b";
    case Family::Jtilde_sl2sl2: return "Jtilde_sl2sl2";
  }
  return "?";
}

namespace {

constexpr std::array kFamilies{Family::S,      Family::D,      Family::T,      Family::Tprime,
                               Family::Jstar_sl2, Family::Jalpha_sl2, Family::Stilde, Family::Dtilde,
                               Family::Ttilde, Family::Ttilde_remark_a, Family::Ttilde_remark_b,
                               Family::Jtilde_sl2sl2};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Parameter, what);
}

MatrixQ sub(const MatrixQ& m, std::initializer_list<std::size_t> rows, std::initializer_list<std::size_t> cols) {
  const std::vector<std::size_t> r(rows), c(cols);
  return m.block(r, c);
}

}  // namespace

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : kFamilies)
    if (to_string(f) == name) return f;
  return std::nullopt;
}

std::size_t parameter_count(Family f) {
  switch (f) {
    case Family::S:
    case Family::D:
    case Family::Jstar_sl2:
    case Family::Jalpha_sl2:
    case Family::Dtilde:
    case Family::Ttilde_remark_b: return 1;
    default: return 2;
  }
}

CanonicalForm build_canonical(Family family, std::vector<Rational> params) {
  if (params.size() != parameter_count(family))
    throw Error(ErrorKind::Parameter, std::string(to_string(family)) + " takes " +
                                          std::to_string(parameter_count(family)) + " parameter(s)");
  const auto& p = params;
  AlgebraPtr alg;
  MatrixQ m;
  switch (family) {
    case Family::S:
      alg = heisenberg3();
      m = MatrixQ{{0, -1, 0}, {1, 0, 0}, {0, 0, p[0]}};
      break;
    case Family::D: {
      require(!p[0].is_zero(), "D(x) needs x != 0");
      const Rational& x = p[0];
      alg = heisenberg3();
      m = MatrixQ::diagonal({x, x, (x * x - 1) / (2 * x)});
      break;
    }
    case Family::T:
    case Family::Tprime: {
      require(!p[1].is_zero(), "T(a, b) needs b != 0");
      const Rational &a = p[0], &b = p[1];
      alg = heisenberg3();
      if (family == Family::T) m = MatrixQ{{0, -a * b, 0}, {1, b, 0}, {0, 0, (a * b - 1) / b}};
      else m = MatrixQ{{b, -b, 0}, {a, 0, 0}, {0, 0, (a * b - 1) / b}};
      break;
    }
    case Family::Jstar_sl2:
      alg = sl2_y();
      m = MatrixQ{{0, 0, -1}, {0, p[0], 0}, {1, 0, 0}};
      break;
    case Family::Jalpha_sl2: {
      const Rational& a = p[0];
      const Rational h(1, 2);
      alg = sl2_h();
      m = MatrixQ{{0, -h, -h}, {1, a, -a}, {1, -a, a}};
      break;
    }
    case Family::Stilde: {
      require(p[0] == 1 || p[0] == -1, "Stilde needs eps = +1 or -1");
      const Rational &e = p[0], &x = p[1];
      alg = n_x_n();
      m = MatrixQ{{0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0},
                  {0, 0, 1, 0, 0, 0},  {0, 0, 0, 0, x, -e * (x * x + 1)}, {0, 0, 0, 0, e, -x}};
      break;
    }
    case Family::Dtilde: {
      require(!p[0].is_zero(), "Dtilde(x) needs x != 0");
      const Rational& x = p[0];
      const Rational x2 = x * x;
      alg = n_x_n();
      m = MatrixQ{{x, 0, -(x2 + 1), 0, 0, 0},
                  {0, x, 0, -(x2 + 1), 0, 0},
                  {1, 0, -x, 0, 0, 0},
                  {0, 1, 0, -x, 0, 0},
                  {0, 0, 0, 0, (x2 - 1) / (2 * x), -(x2 + 1) * (x2 + 1) / (2 * x)},
                  {0, 0, 0, 0, 1 / (2 * x), (1 - x2) / (2 * x)}};
      break;
    }
    case Family::Ttilde: {
      require(!p[0].is_zero(), "Ttilde(a, b) needs a = xi^3_3 != 0");
      const Rational &a = p[0], &b = p[1];
      const Rational ba = b * a;
      alg = n_x_n();
      m = MatrixQ{{0, -ba, -ba, ba - 1, 0, 0},
                  {1, -a, -(a * a + 1 - ba) / a, a, 0, 0},
                  {0, a, a, -a, 0, 0},
                  {1, 0, b, 0, 0, 0},
                  {0, 0, 0, 0, -(ba - 1) / a, -((ba - 2) * ba + a * a + 1) / (a * a)},
                  {0, 0, 0, 0, 1, (ba - 1) / a}};
      break;
    }
    case Family::Ttilde_remark_a: {
      const Rational &u = p[0], &v = p[1];
      require(!(u * v).is_zero(), "remark Ttilde(u, v) needs uv != 0");
      alg = n_x_n();
      m = MatrixQ{{0, u, -v / u, -(u + 1), 0, 0},
                  {1, v, (u + 1) / u, -v, 0, 0},
                  {0, -u, 0, u, 0, 0},
                  {1, v, 1, -v, 0, 0},
                  {0, 0, 0, 0, -(u + 1) / v, -(v * v + (u + 1) * (u + 1)) / (v * u)},
                  {0, 0, 0, 0, u / v, (u + 1) / v}};
      break;
    }
    case Family::Ttilde_remark_b: {
      const Rational& v = p[0];
      require(!v.is_zero(), "remark Ttilde(v) needs v != 0");
      alg = n_x_n();
      m = MatrixQ{{0, 0, -1, 0, 0, 0},          {1, v, 0, 1, 0, 0},
                  {1, 0, 0, 0, 0, 0},           {-v, -(v * v + 1), 1, -v, 0, 0},
                  {0, 0, 0, 0, -1 / v, 1 / v}, {0, 0, 0, 0, -(v * v + 1) / v, 1 / v}};
      break;
    }
    case Family::Jtilde_sl2sl2: {
      const Rational &pp = p[0], &q = p[1];
      require(!q.is_zero(), "Jtilde(p, q) needs q != 0");
      alg = sl2_x_sl2();
      m = MatrixQ{{0, 0, -1, 0, 0, 0}, {0, pp, 0, 0, q, 0}, {1, 0, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0, -1}, {0, -(pp * pp + 1) / q, 0, 0, -pp, 0}, {0, 0, 0, 1, 0, 0}};
      break;
    }
  }
  return CanonicalForm{family, std::move(params), std::move(alg), std::move(m)};
}

// ---------------------------------------------------------------------------------------------
// Heisenberg algebra

ClassificationResult classify_n(const LinearMap& j) {
  if (!j.algebra().same_structure(*heisenberg3())) throw Error(ErrorKind::Precondition, "classify_n needs a map on n");
  if (!has_zero_torsion(j)) throw Error(ErrorKind::Precondition, "map has nonzero torsion");
  const MatrixQ& m = j.matrix();
  // Zero torsion forces J(x3) in span(x3) and t tr A = det A - 1.
  if (!m(0, 2).is_zero() || !m(1, 2).is_zero()) throw Error(ErrorKind::Internal, "zero torsion with J(x3) outside span(x3)");
  const MatrixQ a = sub(m, {0, 1}, {0, 1});
  const Rational t = m(2, 2), tr = a.trace(), det = determinant(a);

  CanonicalForm canonical = [&] {
    if (tr.is_zero()) return build_canonical(Family::S, {t});
    if (is_scalar_matrix(a)) return build_canonical(Family::D, {a(0, 0)});
    return build_canonical(Family::T, {det / tr, tr});
  }();
  const MatrixQ b = canonical.family == Family::D ? MatrixQ::identity(2) : invert(cyclic_basis_2x2(a));
  const Rational delta = determinant(b);
  // Bottom row of Phi J Phi^{-1} is (w (A - tI) + delta r) B^{-1}; t is never an eigenvalue of A
  // because the characteristic polynomial of A takes the value t^2 + 1 at t.
  const MatrixQ a_minus_t = a - t * MatrixQ::identity(2);
  const MatrixQ r{{m(2, 0), m(2, 1)}};
  const MatrixQ w = (-delta) * r * invert(a_minus_t);
  const Automorphism phi = aut_n_generic(b, VecQ{w(0, 0), w(0, 1)});
  const bool certified = conjugate(j, phi).matrix() == canonical.matrix;
  if (!certified) throw Error(ErrorKind::Internal, "classify_n failed to certify its conjugator");
  return ClassificationResult{std::move(canonical), phi, true};
}

// ---------------------------------------------------------------------------------------------
// sl(2,R)

namespace {

double numeric_real_eigenvalue(const MatrixQ& m) {
  Eigen::Matrix3d e;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) e(i, k) = m(i, k).convert_to<double>();
  const Eigen::EigenSolver<Eigen::Matrix3d> solver(e, false);
  const auto values = solver.eigenvalues();
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(values[i].imag()) < std::abs(values[best].imag())) best = i;
  // Polish against the characteristic polynomial; conjugated matrices can be badly conditioned.
  const UniPolyQ cp = char_poly(m);
  std::vector<double> c;
  for (int k = 0; k <= cp.degree(); ++k) c.push_back(cp.coeff(static_cast<std::size_t>(k)).convert_to<double>());
  double x = values[best].real();
  for (int it = 0; it < 20; ++it) {
    double f = 0, df = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
      df = df * x + f;
      f = f * x + c[static_cast<std::size_t>(k)];
    }
    if (df == 0) break;
    const double step = f / df;
    x -= step;
    if (std::abs(step) <= 1e-16 * (1 + std::abs(x))) break;
  }
  return x;
}

}  // namespace

ClassificationResult classify_sl2(const LinearMap& j, const Sl2Options& options) {
  const bool y_basis = j.algebra().same_structure(*sl2_y());
  if (!y_basis && !j.algebra().same_structure(*sl2_h()))
    throw Error(ErrorKind::Precondition, "classify_sl2 needs a map on sl(2,R) in the H or Y basis");
  if (!has_zero_torsion(j)) throw Error(ErrorKind::Precondition, "map has nonzero torsion");
  const MatrixQ jh = y_basis ? sl2_to_h_basis(j.matrix()) : j.matrix();
  const Rational trace = jh.trace();
  auto canonical_for = [&](const Rational& lambda) {
    return y_basis ? build_canonical(Family::Jstar_sl2, {lambda}) : build_canonical(Family::Jalpha_sl2, {lambda / 2});
  };

  const std::vector<Rational> roots = options.force_numeric ? std::vector<Rational>{} : char_poly(jh).rational_roots();
  if (roots.empty()) {
    ClassificationResult r{canonical_for(trace), std::nullopt, false, true, numeric_real_eigenvalue(jh)};
    if (std::abs(r.numeric_eigenvalue - trace.convert_to<double>()) > options.tolerance * (1 + std::abs(r.numeric_eigenvalue)))
      throw Error(ErrorKind::Internal, "numeric eigenvalue disagrees with the trace");
    return r;
  }
  if (roots.size() != 1) throw Error(ErrorKind::Internal, "zero-torsion map with several real eigenvalues");
  const Rational lambda = roots.front();

  const auto eig = kernel(jh - lambda * MatrixQ::identity(3));
  const VecQ& v = eig.front();
  const OrbitClass oc = classify_orbit(v);
  if (oc.aut_class != AutOrbit::TwoSheet)
    throw Error(ErrorKind::Internal, "eigenvector of a zero-torsion map off the two-sheet hyperboloid");
  // phi(s (X+ - X-)) = v, so phi^{-1} J phi has eigenvector X+ - X- = 2 Y2.
  Automorphism c = orbit_transporter(v, AutOrbit::TwoSheet).inverse();
  const MatrixQ jy = sl2_to_y_basis(c.matrix() * jh * invert(c.matrix()));
  const Rational eps = jy(2, 0);
  if (eps != 1 && eps != -1) throw Error(ErrorKind::Internal, "reduced map is not of the form J_*");
  if (eps == -1) c = psi0().compose(c);

  const CanonicalForm canonical = canonical_for(lambda);
  const MatrixQ target_h = y_basis ? sl2_to_h_basis(canonical.matrix) : canonical.matrix;
  if (c.matrix() * jh * invert(c.matrix()) != target_h) throw Error(ErrorKind::Internal, "classify_sl2 certification failed");
  if (y_basis) c = in_y_basis(c);
  return ClassificationResult{canonical, c, true};
}

// ---------------------------------------------------------------------------------------------
// Equivalence on n and sl(2,R)

namespace {

std::string versus(const std::string& name, const Rational& a, const Rational& b) {
  return name + " " + to_string(a) + " vs " + to_string(b);
}

}  // namespace

EquivalenceResult equivalent_n(const LinearMap& j1, const LinearMap& j2) {
  const ClassificationResult c1 = classify_n(j1), c2 = classify_n(j2);
  // Aut(n) acts on the top-left block by similarity and fixes xi^3_3.
  const MatrixQ &m1 = j1.matrix(), &m2 = j2.matrix();
  const MatrixQ a1 = sub(m1, {0, 1}, {0, 1}), a2 = sub(m2, {0, 1}, {0, 1});
  if (m1(2, 2) != m2(2, 2)) return {std::nullopt, versus("xi_3_3", m1(2, 2), m2(2, 2))};
  if (a1.trace() != a2.trace()) return {std::nullopt, versus("tr A", a1.trace(), a2.trace())};
  if (determinant(a1) != determinant(a2)) return {std::nullopt, versus("det A", determinant(a1), determinant(a2))};
  if (is_scalar_matrix(a1) != is_scalar_matrix(a2)) return {std::nullopt, "A scalar vs non-scalar"};
  if (c1.canonical.family != c2.canonical.family || c1.canonical.params != c2.canonical.params)
    throw Error(ErrorKind::Internal, "equal invariants but different canonical forms");
  const Automorphism w = c2.conjugator->inverse().compose(*c1.conjugator);
  if (conjugate(j1, w).matrix() != m2) throw Error(ErrorKind::Internal, "equivalence witness failed verification");
  return {w, ""};
}

EquivalenceResult equivalent_sl2(const LinearMap& j1, const LinearMap& j2) {
  const bool y1 = j1.algebra().same_structure(*sl2_y());
  const bool y2 = j2.algebra().same_structure(*sl2_y());
  for (const auto* j : {&j1, &j2})
    if (!j->algebra().same_structure(*sl2_y()) && !j->algebra().same_structure(*sl2_h()))
      throw Error(ErrorKind::Precondition, "equivalent_sl2 needs maps on sl(2,R)");
  // Express J2 in the basis of J1.
  MatrixQ m2 = j2.matrix();
  if (y1 && !y2) m2 = sl2_to_y_basis(m2);
  if (!y1 && y2) m2 = sl2_to_h_basis(m2);
  const LinearMap k2(j1.algebra_ptr(), m2);
  if (!has_zero_torsion(j1) || !has_zero_torsion(k2)) throw Error(ErrorKind::Precondition, "map has nonzero torsion");
  if (j1.matrix().trace() != m2.trace()) return {std::nullopt, versus("trace", j1.matrix().trace(), m2.trace())};
  const ClassificationResult c1 = classify_sl2(j1), c2 = classify_sl2(k2);
  const Automorphism w = c2.conjugator->inverse().compose(*c1.conjugator);
  if (conjugate(j1, w).matrix() != m2) throw Error(ErrorKind::Internal, "equivalence witness failed verification");
  return {w, ""};
}

// ---------------------------------------------------------------------------------------------
// n x n

std::string_view to_string(NxnType t) {
  switch (t) {
    case NxnType::Stilde: return "Stilde";
    case NxnType::Dtilde: return "Dtilde";
    case NxnType::Ttilde: return "Ttilde";
  }
  return "?";
}

NxnInvariants nxn_invariants(const LinearMap& j) {
  if (!j.algebra().same_structure(*n_x_n())) throw Error(ErrorKind::Precondition, "expected a map on n x n");
  const MatrixQ& m = j.matrix();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 4; c < 6; ++c)
      if (!m(r, c).is_zero()) throw Error(ErrorKind::Structure, "map does not preserve the center");
  const MatrixQ a11 = sub(m, {0, 1}, {0, 1}), a12 = sub(m, {0, 1}, {2, 3});
  const MatrixQ a21 = sub(m, {2, 3}, {0, 1}), a22 = sub(m, {2, 3}, {2, 3});
  const MatrixQ c = sub(m, {4, 5}, {4, 5});
  if (a12.is_zero() && a21.is_zero()) {
    // Orientation of each block (sign of the (2,1) entry) flips with det B_i, and so does the
    // sign of the (6,5) entry with det B1 det B2.
    const int o = sign(a11(1, 0)) * sign(a22(1, 0)) * sign(c(1, 0));
    if (o == 0) throw Error(ErrorKind::Structure, "degenerate block in split map");
    return {NxnType::Stilde, {Rational(o), c(0, 0)}};
  }
  if (is_scalar_matrix(a11) && is_scalar_matrix(a22)) return {NxnType::Dtilde, {a11(0, 0)}};
  const Rational a = -a11.trace();
  if (a.is_zero()) throw Error(ErrorKind::Structure, "first block has zero trace");
  return {NxnType::Ttilde, {a, determinant(a11) / a}};
}

namespace {

constexpr std::size_t kUnknowns = 18;  // B1 (4), B2 (4), lower rows (8), d1, d2

MatrixQ phi_from(const VecQ& z) {
  MatrixQ p(6, 6);
  p(0, 0) = z[0], p(0, 1) = z[1], p(1, 0) = z[2], p(1, 1) = z[3];
  p(2, 2) = z[4], p(2, 3) = z[5], p(3, 2) = z[6], p(3, 3) = z[7];
  for (std::size_t k = 0; k < 4; ++k) {
    p(4, k) = z[8 + k];
    p(5, k) = z[12 + k];
  }
  p(4, 4) = z[16];
  p(5, 5) = z[17];
  return p;
}

/// The first-kind constraint det B_i = d_i holds up to a common scale iff d1 det B2 = d2 det B1.
Rational scale_defect(const VecQ& z) {
  const Rational det1 = z[0] * z[3] - z[1] * z[2], det2 = z[4] * z[7] - z[5] * z[6];
  return z[16] * det2 - z[17] * det1;
}

std::optional<Automorphism> realize(const VecQ& z, const LinearMap& j1, const LinearMap& j2) {
  const Rational det1 = z[0] * z[3] - z[1] * z[2], det2 = z[4] * z[7] - z[5] * z[6];
  if (det1.is_zero() || det2.is_zero() || z[16].is_zero() || z[17].is_zero()) return std::nullopt;
  if (!scale_defect(z).is_zero()) return std::nullopt;
  const Rational s = z[16] / det1;
  const MatrixQ p = s * phi_from(z);
  const MatrixQ b1 = sub(p, {0, 1}, {0, 1}), b2 = sub(p, {2, 3}, {2, 3}), lower = sub(p, {4, 5}, {0, 1, 2, 3});
  Automorphism phi = nxn_first_kind(b1, b2, lower);
  if (conjugate(j1, phi).matrix() != j2.matrix()) return std::nullopt;
  return phi;
}

/// Cubic scale_defect(u + tau v) through its values at four points.
UniPolyQ defect_along(const VecQ& u, const VecQ& v) {
  const std::array<Rational, 4> xs{0, 1, -1, 2};
  std::array<Rational, 4> ys;
  for (std::size_t k = 0; k < 4; ++k) ys[k] = scale_defect(u + scaled(v, xs[k]));
  std::vector<Rational> coeffs(4, Rational(0));
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t l = 0; l < 4; ++l) {
      if (l == k) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i] -= basis[i] * xs[l];
        next[i + 1] += basis[i];
      }
      basis = std::move(next);
      denom *= xs[k] - xs[l];
    }
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += ys[k] * basis[i] / denom;
  }
  return UniPolyQ(coeffs);
}

/// The defect only sees B1, B2, d1, d2; keep basis vectors that are independent there.
std::vector<VecQ> independent_on_scale_data(const std::vector<VecQ>& basis) {
  std::vector<VecQ> kept, projected;
  for (const VecQ& z : basis) {
    VecQ p(z.begin(), z.begin() + 8);
    p.push_back(z[16]);
    p.push_back(z[17]);
    projected.push_back(p);
    if (rank(MatrixQ::from_columns(projected)) == projected.size()) kept.push_back(z);
    else projected.pop_back();
  }
  return kept;
}

/// Small integer combinations of the first few basis vectors, coefficients in {-1, 0, 1}.
std::vector<VecQ> small_combinations(const std::vector<VecQ>& basis) {
  std::vector<VecQ> out;
  const std::size_t k = std::min<std::size_t>(basis.size(), 6);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < k; ++i) combos *= 3;
  for (std::size_t code = 1; code < combos; ++code) {
    VecQ u(kUnknowns, Rational(0));
    for (std::size_t i = 0, c = code; i < k; ++i, c /= 3) {
      const int coef = static_cast<int>(c % 3) - 1;
      if (coef != 0) u = u + scaled(basis[i], Rational(coef));
    }
    out.push_back(std::move(u));
  }
  return out;
}

/// `base` spans the solutions with B1 = B2 = 0. The scale defect vanishes to second order
/// there, so each line from a base point meets it in one further point, which is rational.
std::optional<Automorphism> search_space(const std::vector<VecQ>& all, const std::vector<VecQ>& base_all,
                                         const LinearMap& j1, const LinearMap& j2) {
  if (all.empty()) return std::nullopt;
  const std::vector<VecQ> basis = independent_on_scale_data(all), base = independent_on_scale_data(base_all);
  const std::vector<VecQ> directions = small_combinations(basis);
  for (const VecQ& v : directions)
    if (auto phi = realize(v, j1, j2)) return phi;
  for (const VecQ& z0 : small_combinations(base)) {
    if (z0[16].is_zero() && z0[17].is_zero()) continue;
    for (const VecQ& v : directions) {
      const Rational fv = scale_defect(v);
      if (fv.is_zero()) continue;
      const Rational det1 = v[0] * v[3] - v[1] * v[2], det2 = v[4] * v[7] - v[5] * v[6];
      const Rational tau = (z0[17] * det1 - z0[16] * det2) / fv;
      if (auto phi = realize(z0 + scaled(v, tau), j1, j2)) return phi;
    }
  }
  for (const VecQ& u : directions) {
    for (const auto& v : basis) {
      const UniPolyQ f = defect_along(u, v);
      if (f.degree() < 0) continue;
      for (const Rational& tau : f.rational_roots())
        if (auto phi = realize(u + scaled(v, tau), j1, j2)) return phi;
    }
  }
  return std::nullopt;
}

/// Lower rows W of a first-kind map with given diagonal blocks, solved linearly.
std::optional<Automorphism> complete_lower_rows(const MatrixQ& b1, const MatrixQ& b2, const LinearMap& j1,
                                                const LinearMap& j2) {
  VecQ fixed(kUnknowns, Rational(0));
  fixed[0] = b1(0, 0), fixed[1] = b1(0, 1), fixed[2] = b1(1, 0), fixed[3] = b1(1, 1);
  fixed[4] = b2(0, 0), fixed[5] = b2(0, 1), fixed[6] = b2(1, 0), fixed[7] = b2(1, 1);
  fixed[16] = determinant(b1);
  fixed[17] = determinant(b2);
  // Columns: the eight W unknowns, then the fixed part; look for a kernel vector ending in 1.
  MatrixQ system(36, 9);
  for (std::size_t k = 0; k < 9; ++k) {
    const MatrixQ p = phi_from(k < 8 ? unit_vector(kUnknowns, 8 + k) : fixed);
    const MatrixQ e = p * j1.matrix() - j2.matrix() * p;
    for (std::size_t r = 0; r < 36; ++r) system(r, k) = e(r / 6, r % 6);
  }
  for (const VecQ& v : kernel(system)) {
    if (v[8].is_zero()) continue;
    const VecQ z = scaled(v, 1 / v[8]);
    MatrixQ lower(2, 4);
    for (std::size_t c = 0; c < 4; ++c) {
      lower(0, c) = z[c];
      lower(1, c) = z[4 + c];
    }
    Automorphism phi = nxn_first_kind(b1, b2, lower);
    if (conjugate(j1, phi).matrix() == j2.matrix()) return phi;
  }
  return std::nullopt;
}

/// Split maps whose blocks square to -1: bring both blocks to the rotation R by cyclic bases,
/// then match the (6,5) entries with B1 = alpha I + beta R, whose determinant alpha^2 + beta^2
/// must equal their ratio.
std::optional<Automorphism> split_witness(const LinearMap& j1, const LinearMap& j2) {
  struct Normal {
    MatrixQ b1, b2;
    Rational c21;
  };
  auto normalize = [](const MatrixQ& m) -> std::optional<Normal> {
    const MatrixQ a11 = sub(m, {0, 1}, {0, 1}), a22 = sub(m, {2, 3}, {2, 3});
    if (!sub(m, {0, 1}, {2, 3}).is_zero() || !sub(m, {2, 3}, {0, 1}).is_zero()) return std::nullopt;
    for (const MatrixQ* a : {&a11, &a22})
      if (!a->trace().is_zero() || determinant(*a) != 1) return std::nullopt;
    Normal n{invert(cyclic_basis_2x2(a11)), invert(cyclic_basis_2x2(a22)), 0};
    n.c21 = m(5, 4) * determinant(n.b2) / determinant(n.b1);
    return n;
  };
  const auto n1 = normalize(j1.matrix()), n2 = normalize(j2.matrix());
  if (!n1 || !n2 || n2->c21.is_zero()) return std::nullopt;
  const auto x = norm_preimage(n1->c21 / n2->c21);
  if (!x || x->is_zero()) return std::nullopt;
  const MatrixQ rot{{x->re, -x->im}, {x->im, x->re}};
  return complete_lower_rows(invert(n2->b1) * rot * n1->b1, invert(n2->b2) * n1->b2, j1, j2);
}

}  // namespace

std::optional<Automorphism> nxn_first_kind_witness(const LinearMap& j1, const LinearMap& j2) {
  for (const auto* j : {&j1, &j2})
    if (!j->algebra().same_structure(*n_x_n())) throw Error(ErrorKind::Precondition, "expected maps on n x n");
  if (auto phi = split_witness(j1, j2)) return phi;
  // Columns: vec(Phi(e_k) J1 - J2 Phi(e_k)) for each unknown.
  MatrixQ system(36, kUnknowns);
  for (std::size_t k = 0; k < kUnknowns; ++k) {
    const MatrixQ p = phi_from(unit_vector(kUnknowns, k));
    const MatrixQ e = p * j1.matrix() - j2.matrix() * p;
    for (std::size_t r = 0; r < 36; ++r) system(r, k) = e(r / 6, r % 6);
  }
  // Extra rows pinning the listed unknowns to zero.
  auto pinned = [&](std::vector<std::size_t> zero) {
    MatrixQ m(36 + zero.size(), kUnknowns);
    for (std::size_t r = 0; r < 36; ++r)
      for (std::size_t c = 0; c < kUnknowns; ++c) m(r, c) = system(r, c);
    for (std::size_t k = 0; k < zero.size(); ++k) m(36 + k, zero[k]) = 1;
    return kernel(m);
  };
  const std::vector<std::size_t> b_idx{0, 1, 2, 3, 4, 5, 6, 7}, w_idx{8, 9, 10, 11, 12, 13, 14, 15};
  std::vector<std::size_t> bw = b_idx;
  bw.insert(bw.end(), w_idx.begin(), w_idx.end());
  // Lower rows vanishing first, then the general case.
  if (auto phi = search_space(pinned(w_idx), pinned(bw), j1, j2)) return phi;
  return search_space(kernel(system), pinned(b_idx), j1, j2);
}

EquivalenceResult equivalent_nxn(const LinearMap& j1, const LinearMap& j2) {
  const NxnInvariants i1 = nxn_invariants(j1), i2 = nxn_invariants(j2);
  if (i1.type != i2.type)
    return {std::nullopt, "family " + std::string(to_string(i1.type)) + " vs " + std::string(to_string(i2.type))};
  if (i1 == i2) {
    if (auto w = nxn_first_kind_witness(j1, j2)) return {*w, ""};
  }
  const Automorphism theta = nxn_theta();
  const LinearMap swapped = conjugate(j1, theta);
  if (nxn_invariants(swapped) == i2) {
    if (auto w = nxn_first_kind_witness(swapped, j2)) return {w->compose(theta), ""};
  }
  if (i1 == i2 || nxn_invariants(swapped) == i2) return {std::nullopt, "invariants agree; no witness found in the search space"};
  std::string a = "(", b = "(";
  for (const auto& x : i1.params) a += (a.size() > 1 ? ", " : "") + to_string(x);
  for (const auto& x : i2.params) b += (b.size() > 1 ? ", " : "") + to_string(x);
  return {std::nullopt, std::string(to_string(i1.type)) + " parameters " + a + ") vs " + b + ")"};
}

// ---------------------------------------------------------------------------------------------
// sl(2,R) x sl(2,R)

std::vector<Rational> sl2xsl2_invariants(const LinearMap& j) {
  if (!j.algebra().same_structure(*sl2_x_sl2())) throw Error(ErrorKind::Precondition, "expected a map on sl2 x sl2");
  const MatrixQ& m = j.matrix();
  const MatrixQ j1 = sub(m, {0, 1, 2}, {0, 1, 2}), j2 = sub(m, {0, 1, 2}, {3, 4, 5}), j4 = sub(m, {3, 4, 5}, {3, 4, 5});
  const auto y = sl2_y();
  const MatrixQ k = y->killing_form();
  auto form = [&](const VecQ& a, const VecQ& b) {
    const VecQ kb = k * b;
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * kb[i];
    return s;
  };
  const auto ka = kernel(j1 * j1 + MatrixQ::identity(3)), kb = kernel(j4 * j4 + MatrixQ::identity(3));
  if (ka.empty() || kb.empty()) throw Error(ErrorKind::Structure, "diagonal blocks have no J^2 = -1 plane");
  const VecQ &a = ka.front(), &b = kb.front();
  const VecQ f1 = y->bracket(a, j1 * a), f2 = y->bracket(b, j4 * b);
  const Rational den = form(f1, f1) * form(b, b);
  if (den.is_zero()) throw Error(ErrorKind::Structure, "degenerate Killing data");
  return {j1.trace(), form(j2 * f2, f1) * form(a, a) / den};
}

// ---------------------------------------------------------------------------------------------
// Second-kind partners

ProductEquivalence second_kind_partner(Family family, const std::vector<Rational>& params) {
  const CanonicalForm source = build_canonical(family, params);
  const auto& p = params;
  CanonicalForm target = [&] {
    switch (family) {
      case Family::Stilde: return build_canonical(family, {-p[0], -p[1]});
      case Family::Dtilde: return build_canonical(family, {-p[0]});
      case Family::Ttilde: return build_canonical(family, {-p[0], -p[1]});
      case Family::Jtilde_sl2sl2: return build_canonical(family, {-p[0], -(p[0] * p[0] + 1) / p[1]});
      default: throw Error(ErrorKind::Parameter, "no second-kind claim for " + std::string(to_string(family)));
    }
  }();
  ProductEquivalence out{false, source, target, std::nullopt, ""};
  std::optional<Automorphism> w;
  if (family == Family::Jtilde_sl2sl2) {
    w = sl2xsl2_gamma();
    out.detail = "Gamma";
  } else {
    const Automorphism theta = nxn_theta();
    const LinearMap swapped = conjugate(source.map(), theta);
    std::optional<Automorphism> first;
    if (family == Family::Stilde) {
      // B1 = I + xi R with R the rotation block, B2 = I.
      const MatrixQ b1{{1, -p[1]}, {p[1], 1}};
      const Automorphism cand = nxn_first_kind(b1, MatrixQ::identity(2), MatrixQ(2, 4));
      if (conjugate(swapped, cand).matrix() == target.matrix) first = cand;
    }
    if (!first) first = nxn_first_kind_witness(swapped, target.map());
    if (first) {
      w = first->compose(theta);
      out.detail = "Phi o Theta";
    }
  }
  if (w && conjugate(source.map(), *w).matrix() == target.matrix) {
    out.reproduced = true;
    out.witness = w;
  } else {
    out.detail = "no certified witness";
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Mixed block types

namespace {

constexpr std::array<std::array<std::size_t, 3>, 2> kFactorIdx{{{0, 1, 4}, {2, 3, 5}}};

}  // namespace

MatrixQ nxn_factor_block(const MatrixQ& j, int factor) {
  if (j.rows() != 6 || j.cols() != 6) throw Error(ErrorKind::Dimension, "expected a 6x6 matrix");
  const auto& idx = kFactorIdx.at(static_cast<std::size_t>(factor));
  return j.block(idx, idx);
}

MatrixQ nxn_block_diagonal(const MatrixQ& j1, const MatrixQ& j2) {
  if (j1.rows() != 3 || j1.cols() != 3 || j2.rows() != 3 || j2.cols() != 3)
    throw Error(ErrorKind::Dimension, "expected 3x3 blocks");
  MatrixQ m(6, 6);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      m(kFactorIdx[0][r], kFactorIdx[0][c]) = j1(r, c);
      m(kFactorIdx[1][r], kFactorIdx[1][c]) = j2(r, c);
    }
  return m;
}

std::optional<MixedTypeResult> mixed_type_search() {
  const std::array<Rational, 5> grid{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  for (const Rational& t : grid)
    for (const Rational& x : grid) {
      if (x.is_zero()) continue;
      const LinearMap j(n_x_n(), nxn_block_diagonal(build_canonical(Family::S, {t}).matrix,
                                                    build_canonical(Family::D, {x}).matrix));
      if (!has_zero_torsion(j) || is_complex_structure(j)) continue;
      ClassificationResult first = classify_n(LinearMap(heisenberg3(), nxn_factor_block(j.matrix(), 0)));
      ClassificationResult second = classify_n(LinearMap(heisenberg3(), nxn_factor_block(j.matrix(), 1)));
      if (first.canonical.family == Family::S && second.canonical.family == Family::D)
        return MixedTypeResult{j, std::move(first), std::move(second)};
    }
  return std::nullopt;
}

}  // namespace torsionlab
