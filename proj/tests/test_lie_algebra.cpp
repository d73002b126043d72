#include "doctest.h"
#include "support.hpp"

#include "torsionlab/lie_algebra.hpp"

using namespace torsionlab;

TEST_CASE("bracket examples") {
  const auto y = sl2_y();
  CHECK(y->bracket(unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 2));
  const auto h = sl2_h();
  CHECK(h->bracket(unit_vector(3, 1), unit_vector(3, 2)) == unit_vector(3, 0));
  CHECK(h->bracket(unit_vector(3, 0), unit_vector(3, 2)) == scaled(unit_vector(3, 2), Rational(-2)));
  const auto n = heisenberg3();
  CHECK(is_zero_vector(n->bracket(unit_vector(3, 0), unit_vector(3, 0))));
  CHECK_THROWS_AS(n->bracket(unit_vector(2, 0), unit_vector(3, 0)), Error);
}

TEST_CASE("jacobi") {
  for (const auto& a : {heisenberg3(), sl2_h(), sl2_y(), n_x_n(), sl2_x_sl2(), abelian(4)}) CHECK(jacobi_check(*a));
  // [x1,x2] = x1, [x2,x3] = x2: the Jacobi sum on (x1,x2,x3) is x1.
  const LieAlgebra bad("bad", {"a", "b", "c"}, {{0, 1, VecQ{1, 0, 0}}, {1, 2, VecQ{0, 1, 0}}});
  CHECK_FALSE(jacobi_check(bad));
}

TEST_CASE("direct products") {
  const auto nn = n_x_n();
  REQUIRE(nn->dim() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      VecQ expected(6, Rational(0));
      if (i == 0 && j == 1) expected[4] = 1;
      if (i == 2 && j == 3) expected[5] = 1;
      CHECK(nn->basis_bracket(i, j) == expected);
    }
  const auto ss = sl2_x_sl2();
  CHECK(ss->basis_bracket(0, 1) == unit_vector(6, 2));
  CHECK(ss->basis_bracket(3, 4) == unit_vector(6, 5));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) CHECK(is_zero_vector(ss->basis_bracket(i, j)));
  const auto ab = direct_product(*abelian(1), *abelian(1));
  CHECK(ab->dim() == 2);
  CHECK(ab->is_abelian());
}

TEST_CASE("change of basis") {
  const auto y = change_basis(*sl2_h(), sl2_y_to_h());
  CHECK(y->same_structure(*sl2_y()));
  const auto back = change_basis(*y, invert(sl2_y_to_h()));
  CHECK(back->same_structure(*sl2_h()));
  CHECK(change_basis(*heisenberg3(), MatrixQ::identity(3))->same_structure(*heisenberg3()));
  // new basis (x1, x2, 2 x3): [x1, x2] = x3 = 1/2 (2 x3)
  const auto scaled3 = change_basis(*heisenberg3(), MatrixQ::diagonal({1, 1, 2}));
  CHECK(scaled3->basis_bracket(0, 1) == VecQ{0, 0, Rational(1, 2)});
  CHECK_THROWS_AS(change_basis(*heisenberg3(), MatrixQ(3, 3)), Error);

  testsupport::RandomQ rnd(3);
  for (int k = 0; k < 10; ++k) {
    const MatrixQ p = rnd.invertible(3);
    CHECK(change_basis(*change_basis(*sl2_y(), p), invert(p))->same_structure(*sl2_y()));
    CHECK(jacobi_check(*change_basis(*sl2_y(), p)));
  }
}

TEST_CASE("antisymmetry on random vectors") {
  testsupport::RandomQ rnd(5);
  for (const auto& a : {heisenberg3(), sl2_h(), n_x_n(), sl2_x_sl2()})
    for (int k = 0; k < 20; ++k) {
      const VecQ x = rnd.vector(a->dim()), y = rnd.vector(a->dim());
      CHECK(a->bracket(x, y) == scaled(a->bracket(y, x), Rational(-1)));
    }
}

TEST_CASE("complexification") {
  const auto c = complexify(heisenberg3());
  CHECK(c.bracket(to_complex(unit_vector(3, 0)), to_complex(unit_vector(3, 1))) == to_complex(unit_vector(3, 2)));

  const auto s = complexify(sl2_y());
  const GaussianRational i = GaussianRational::i();
  const VecQi v{1, 0, -i};  // Y1 - i Y3
  CHECK(s.bracket(v, to_complex(unit_vector(3, 1))) == VecQi{i, 0, 1});

  const VecQi x{1, 2, 0}, jx{0, 1, 3};
  VecQi m = x, mbar = x;
  for (std::size_t k = 0; k < 3; ++k) {
    m[k] -= i * jx[k];
    mbar[k] += i * jx[k];
  }
  CHECK(ComplexLieAlgebra::conjugate(m) == mbar);
}

TEST_CASE("subalgebra closure") {
  const auto n = complexify(heisenberg3());
  CHECK(subalgebra_closed(n, {to_complex(unit_vector(3, 2))}));
  const auto s = complexify(sl2_h());
  CHECK(subalgebra_closed(s, {to_complex(unit_vector(3, 0)), to_complex(unit_vector(3, 1))}));
  CHECK_FALSE(subalgebra_closed(s, {to_complex(unit_vector(3, 1)), to_complex(unit_vector(3, 2))}));
  CHECK_THROWS_AS(subalgebra_closed(s, {to_complex(unit_vector(3, 1)), to_complex(unit_vector(3, 1))}), Error);
}

TEST_CASE("killing form of sl2 is nondegenerate, of n is zero") {
  CHECK(determinant(sl2_h()->killing_form()) != 0);
  CHECK(heisenberg3()->killing_form().is_zero());
  // K(H, H) = 8 in the standard normalization
  CHECK(sl2_h()->killing_form()(0, 0) == 8);
}
