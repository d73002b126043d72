#include "doctest.h"
#include "support.hpp"

#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

MatrixQ s_matrix(const Rational& t) { return MatrixQ{{0, -1, 0}, {1, 0, 0}, {0, 0, t}}; }

MatrixQ jtilde(const Rational& p, const Rational& q) {
  return MatrixQ{{0, 0, -1, 0, 0, 0}, {0, p, 0, 0, q, 0}, {1, 0, 0, 0, 0, 0},
                 {0, 0, 0, 0, 0, -1}, {0, -(p * p + 1) / q, 0, 0, -p, 0}, {0, 0, 0, 1, 0, 0}};
}

MatrixQ stilde(int eps, const Rational& x) {
  return MatrixQ{{0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0},
                 {0, 0, 1, 0, 0, 0},  {0, 0, 0, 0, x, -eps * (x * x + 1)}, {0, 0, 0, 0, eps, -x}};
}

// Span equality of two families of complex vectors.
bool same_span(const std::vector<VecQi>& a, const std::vector<VecQi>& b) {
  std::vector<VecQi> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto r = rank(MatrixQi::from_columns(a));
  return r == rank(MatrixQi::from_columns(b)) && r == rank(MatrixQi::from_columns(both));
}

}  // namespace

TEST_CASE("torsion tensor values") {
  const auto n = heisenberg3();
  const VecQ x1 = unit_vector(3, 0), x2 = unit_vector(3, 1);
  CHECK(is_zero_vector(torsion_tensor(LinearMap(n, s_matrix(5)), x1, x2)));
  // [x1,x2] - [x1,x2] - 2 J[x1,x2] with J = I
  CHECK(torsion_tensor(LinearMap(n, MatrixQ::identity(3)), x1, x2) == VecQ{0, 0, -2});
  testsupport::RandomQ rnd(2);
  const LinearMap any(abelian(3), rnd.matrix(3, 3));
  CHECK(is_zero_vector(torsion_tensor(any, rnd.vector(3), rnd.vector(3))));
  CHECK_THROWS_AS(torsion_tensor(any, VecQ{1, 2}, VecQ{1, 2, 3}), Error);
  CHECK_THROWS_AS(LinearMap(n, MatrixQ::identity(2)), Error);
}

TEST_CASE("zero torsion") {
  const MatrixQ jstar7{{0, 0, -1}, {0, 7, 0}, {1, 0, 0}};
  CHECK(has_zero_torsion(LinearMap(sl2_y(), jstar7)));
  const MatrixQ form_ii{{Rational(3), 0, 0}, {0, 0, 1}, {0, -1, 0}};
  CHECK_FALSE(has_zero_torsion(LinearMap(heisenberg3(), form_ii)));
  const MatrixQ t11{{0, -1, 0}, {1, 1, 0}, {0, 0, 0}};
  CHECK(has_zero_torsion(LinearMap(heisenberg3(), t11)));
}

TEST_CASE("complex structures") {
  CHECK(is_complex_structure(LinearMap(n_x_n(), stilde(1, 0))));
  CHECK_FALSE(is_complex_structure(LinearMap(heisenberg3(), s_matrix(0))));
  CHECK(is_complex_structure(LinearMap(sl2_x_sl2(), jtilde(0, 1))));
}

TEST_CASE("abelian structures") {
  CHECK(is_abelian_structure(LinearMap(n_x_n(), stilde(-1, 3))));
  CHECK_FALSE(is_abelian_structure(LinearMap(sl2_x_sl2(), jtilde(0, 1))));
  CHECK(is_abelian_structure(LinearMap(abelian(2), MatrixQ{{0, -1}, {1, 0}})));
  CHECK_THROWS_AS(is_abelian_structure(LinearMap(heisenberg3(), s_matrix(1))), Error);
}

TEST_CASE("associated subalgebra") {
  const GaussianRational i = GaussianRational::i();
  const auto m = associated_subalgebra(LinearMap(sl2_x_sl2(), jtilde(0, 1)));
  CHECK(m.basis.size() == 3);
  const std::vector<VecQi> expected{{1, 0, -i, 0, 0, 0}, {0, 0, 0, 1, 0, -i}, {0, -i, 0, 0, 1, 0}};
  CHECK(same_span(m.basis, expected));
  CHECK(subalgebra_closed(m.ambient, expected));

  const auto ms = associated_subalgebra(LinearMap(n_x_n(), stilde(1, 0)));
  CHECK(ms.basis.size() == 3);
  for (const auto& a : ms.basis)
    for (const auto& b : ms.basis) CHECK(is_zero_vector(ms.ambient.bracket(a, b)));

  const auto m2 = associated_subalgebra(LinearMap(abelian(2), MatrixQ{{0, -1}, {1, 0}}));
  CHECK(m2.basis == std::vector<VecQi>{{1, -i}});
  CHECK_THROWS_AS(associated_subalgebra(LinearMap(heisenberg3(), s_matrix(0))), Error);
}

TEST_CASE("basis pairs decide vanishing; antisymmetry") {
  testsupport::RandomQ rnd(9);
  for (int k = 0; k < 20; ++k) {
    const LinearMap j(heisenberg3(), s_matrix(rnd()));
    const LinearMap g(sl2_h(), rnd.matrix(3, 3));
    const VecQ x = rnd.vector(3), y = rnd.vector(3);
    CHECK(is_zero_vector(torsion_tensor(j, x, y)));
    CHECK(torsion_tensor(g, x, y) == scaled(torsion_tensor(g, y, x), Rational(-1)));
  }
}

TEST_CASE("trace of complex structures vanishes") {
  for (int p = -3; p <= 3; ++p) CHECK(jtilde(p, 2).trace() == 0);
  for (int x = -3; x <= 3; ++x) CHECK(stilde(1, x).trace() == 0);
}

TEST_CASE("m closed implies zero torsion on abelian examples") {
  testsupport::RandomQ rnd(4);
  const MatrixQ j0{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  for (int k = 0; k < 10; ++k) {
    const MatrixQ p = rnd.invertible(4);
    const LinearMap j(abelian(4), p * j0 * invert(p));
    REQUIRE(is_complex_structure(j));
    CHECK(subalgebra_closed(associated_subalgebra(j).ambient, associated_subalgebra(j).basis));
  }
}
