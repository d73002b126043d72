#include "doctest.h"
#include "support.hpp"

#include "torsionlab/automorphism.hpp"
#include "torsionlab/linalg.hpp"
#include "torsionlab/sampling.hpp"

using namespace torsionlab;

namespace {

// Eq. 5 written out entrywise.
MatrixQ ad_formula(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return MatrixQ{{1 + 2 * b * c, -a * c, b * d}, {-2 * a * b, a * a, -b * b}, {2 * c * d, -c * c, d * d}};
}

MatrixQ sigma_of(testsupport::RandomQ& rnd) {
  for (;;) {
    const Rational a = rnd.nonzero(4, 3), b = rnd(4, 3), c = rnd(4, 3);
    // d chosen so that ad - bc = 1
    const Rational d = (1 + b * c) / a;
    return MatrixQ{{a, b}, {c, d}};
  }
}

}  // namespace

TEST_CASE("is_automorphism examples") {
  CHECK(is_automorphism(*sl2_h(), MatrixQ::diagonal({1, -1, -1})));
  CHECK(is_automorphism(*n_x_n(), nxn_theta().matrix()));
  CHECK_FALSE(is_automorphism(*heisenberg3(), MatrixQ::diagonal({1, 1, 2})));
  CHECK_FALSE(is_automorphism(*heisenberg3(), MatrixQ(3, 3)));
  CHECK_THROWS_AS(Automorphism(heisenberg3(), MatrixQ::diagonal({1, 1, 2}), AutKind::Generic), Error);
}

TEST_CASE("ad_matrix") {
  CHECK(ad_matrix(1, 0, 0, 1).matrix() == MatrixQ::identity(3));
  CHECK(ad_matrix(1, 1, 0, 1).matrix() == MatrixQ{{1, 0, 1}, {-2, 1, -1}, {0, 0, 1}});
  CHECK(ad_matrix(1, 1, 0, 1).kind() == AutKind::AdjointComponent);
  CHECK_THROWS_AS(ad_matrix(1, 1, 1, 1), Error);
  testsupport::RandomQ rnd(11);
  for (int k = 0; k < 50; ++k) {
    const MatrixQ s = sigma_of(rnd);
    const auto phi = ad_matrix(s(0, 0), s(0, 1), s(1, 0), s(1, 1));
    CHECK(phi.matrix() == ad_formula(s(0, 0), s(0, 1), s(1, 0), s(1, 1)));
    CHECK(is_automorphism(*sl2_h(), phi.matrix()));
    CHECK(adjoint_action(s).matrix() == phi.matrix());
  }
}

TEST_CASE("psi0 is Ad of a reflection") {
  CHECK(psi0().matrix() == MatrixQ::diagonal({1, -1, -1}));
  CHECK(adjoint_action(MatrixQ::diagonal({1, -1})).matrix() == psi0().matrix());
  CHECK(adjoint_action(MatrixQ::diagonal({1, -1})).kind() == AutKind::PsiComponent);
  CHECK(in_y_basis(psi0()).matrix() == MatrixQ::diagonal({1, -1, -1}));
  CHECK(is_automorphism(*sl2_y(), in_y_basis(psi0()).matrix()));
}

TEST_CASE("aut_n_generic") {
  CHECK(aut_n_generic(MatrixQ::identity(2), VecQ{0, 0}).matrix() == MatrixQ::identity(3));
  const auto rot = aut_n_generic(MatrixQ{{0, -1}, {1, 0}}, VecQ{Rational(2, 3), -5});
  CHECK(rot.matrix()(2, 2) == 1);
  CHECK(rot.matrix() * unit_vector(3, 2) == unit_vector(3, 2));
  CHECK(aut_n_generic(2 * MatrixQ::identity(2), VecQ{0, 0}).matrix()(2, 2) == 4);
  CHECK_THROWS_AS(aut_n_generic(MatrixQ{{1, 2}, {2, 4}}, VecQ{0, 0}), Error);
}

TEST_CASE("product automorphisms") {
  const auto id = nxn_first_kind(MatrixQ::identity(2), MatrixQ::identity(2), MatrixQ(2, 4));
  CHECK(id.matrix() == MatrixQ::identity(6));
  CHECK(id.kind() == AutKind::FirstKind);
  const auto theta = nxn_theta();
  CHECK(theta.kind() == AutKind::SecondKind);
  CHECK(theta.matrix() * theta.matrix() == MatrixQ::identity(6));
  CHECK(theta.matrix() * unit_vector(6, 0) == unit_vector(6, 2));
  CHECK(theta.matrix() * unit_vector(6, 4) == unit_vector(6, 5));
  const MatrixQ psi_y = in_y_basis(psi0()).matrix();
  const auto second = sl2xsl2_second_kind(psi_y, MatrixQ::identity(3));
  CHECK(is_automorphism(*sl2_x_sl2(), second.matrix()));
  CHECK(second.kind() == AutKind::SecondKind);
  CHECK(is_automorphism(*sl2_x_sl2(), sl2xsl2_gamma().matrix()));
  CHECK_THROWS_AS(nxn_first_kind(MatrixQ(2, 2), MatrixQ::identity(2), MatrixQ(2, 4)), Error);

  // Center block entries equal det B1 and det B2.
  Sampler s(5);
  for (int k = 0; k < 100; ++k) {
    const auto phi = s.nxn_first_kind();
    const MatrixQ& m = phi.matrix();
    CHECK(m(4, 4) == m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    CHECK(m(5, 5) == m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2));
    CHECK(is_automorphism(*n_x_n(), m));
    CHECK(is_automorphism(*sl2_x_sl2(), s.sl2xsl2_first_kind().matrix()));
  }
}

TEST_CASE("conjugate") {
  const LinearMap j(heisenberg3(), MatrixQ{{0, -1, 0}, {1, 0, 0}, {0, 0, 3}});
  CHECK(conjugate(j, aut_n_generic(MatrixQ::identity(2), VecQ{0, 0})).matrix() == j.matrix());
  CHECK_THROWS_AS(conjugate(j, psi0()), Error);
  // J_* with eps = -1 is the Psi0-conjugate of J_*.
  const MatrixQ jstar{{0, 0, -1}, {0, 5, 0}, {1, 0, 0}};
  const MatrixQ flipped{{0, 0, 1}, {0, 5, 0}, {-1, 0, 0}};
  CHECK(conjugate(LinearMap(sl2_y(), jstar), in_y_basis(psi0())).matrix() == flipped);

  Sampler s(9);
  for (int k = 0; k < 50; ++k) {
    const auto phi = s.aut_n();
    CHECK(has_zero_torsion(conjugate(j, phi)));
    CHECK(conjugate(j, phi).matrix().trace() == j.matrix().trace());
  }
}

TEST_CASE("composition and inverse") {
  Sampler s(3);
  for (int k = 0; k < 30; ++k) {
    const auto a = s.aut_sl2(), b = s.aut_sl2();
    const auto ab = a.compose(b);
    CHECK(ab.matrix() == a.matrix() * b.matrix());
    CHECK(a.compose(a.inverse()).matrix() == MatrixQ::identity(3));
    const bool a_ad = a.kind() == AutKind::AdjointComponent, b_ad = b.kind() == AutKind::AdjointComponent;
    CHECK((ab.kind() == AutKind::AdjointComponent) == (a_ad == b_ad));
  }
}

TEST_CASE("orbit classification examples") {
  const auto h = classify_orbit(VecQ{1, 0, 0});
  CHECK(h.ad_class == AdOrbit::OneSheet);
  CHECK(h.s == Rational(1));
  const auto k = classify_orbit(VecQ{0, 1, -1});
  CHECK(k.ad_class == AdOrbit::TwoSheetLower);
  CHECK(k.aut_class == AutOrbit::TwoSheet);
  CHECK(k.s == Rational(1));
  CHECK(classify_orbit(VecQ{0, 0, 0}).ad_class == AdOrbit::Zero);
  CHECK(classify_orbit(VecQ{0, 0, 1}).ad_class == AdOrbit::ConeUpper);
  CHECK(classify_orbit(VecQ{0, 0, -1}).ad_class == AdOrbit::ConeLower);
  CHECK(classify_orbit(VecQ{0, 0, -1}).aut_class == AutOrbit::Cone);
  const auto irr = classify_orbit(VecQ{0, 1, -2});
  CHECK(irr.s_irrational);
  CHECK_FALSE(irr.s.has_value());
  CHECK(irr.aut_class == AutOrbit::TwoSheet);
  CHECK(classify_orbit(VecQ{2, 0, 0}).s == Rational(2));
}

TEST_CASE("orbit transporters") {
  CHECK(orbit_transporter(VecQ{1, 0, 0}, AdOrbit::OneSheet).matrix() == MatrixQ::identity(3));
  const VecQ minus_x{0, 0, -1};
  const auto to_cone = orbit_transporter(minus_x, AutOrbit::Cone);
  CHECK(to_cone.matrix() * orbit_representative(AutOrbit::Cone) == minus_x);
  CHECK(to_cone.kind() == AutKind::PsiComponent);
  const VecQ two{0, 2, -2};
  const auto t2 = orbit_transporter(two, AutOrbit::TwoSheet);
  CHECK(t2.matrix() * orbit_representative(AutOrbit::TwoSheet, 2) == two);
  CHECK_THROWS_AS(orbit_transporter(VecQ{1, 0, 0}, AutOrbit::TwoSheet), Error);
  CHECK_THROWS_AS(orbit_transporter(VecQ{0, 1, -2}, AutOrbit::TwoSheet), Error);

  testsupport::RandomQ rnd(21);
  for (int k = 0; k < 100; ++k) {
    const VecQ v = rnd.vector(3, 4, 3);
    const auto c = classify_orbit(v);
    if (c.s_irrational) continue;
    const auto phi = orbit_transporter(v, c.ad_class);
    CHECK(phi.matrix() * orbit_representative(c.ad_class, c.s.value_or(1)) == v);
    CHECK((phi.kind() == AutKind::AdjointComponent || c.ad_class == AdOrbit::Zero));
  }
}

TEST_CASE("orbit invariance") {
  testsupport::RandomQ rnd(4);
  Sampler s(4);
  for (int k = 0; k < 200; ++k) {
    const VecQ v = rnd.vector(3);
    const auto phi = s.aut_sl2();
    const VecQ w = phi.matrix() * v;
    CHECK(orbit_form(w) == orbit_form(v));
    const auto cv = classify_orbit(v), cw = classify_orbit(w);
    CHECK(cv.aut_class == cw.aut_class);
    if (phi.kind() == AutKind::AdjointComponent) CHECK(cv.ad_class == cw.ad_class);
  }
}
