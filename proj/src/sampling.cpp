#include "torsionlab/sampling.hpp"

namespace torsionlab {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorKind::Parameter, "empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(gen_() % span);
}

Rational Sampler::rational(int num, int den) {
  const auto p = integer(-num, num);
  const auto q = integer(1, den);
  return Rational(p) / Rational(q);
}

Rational Sampler::nonzero(int num, int den) {
  for (;;) {
    Rational r = rational(num, den);
    if (!r.is_zero()) return r;
  }
}

MatrixQ Sampler::matrix(std::size_t rows, std::size_t cols, int num, int den) {
  MatrixQ m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(num, den);
  return m;
}

MatrixQ Sampler::invertible(std::size_t n, int num, int den) {
  for (;;) {
    MatrixQ m = matrix(n, n, num, den);
    if (!determinant(m).is_zero()) return m;
  }
}

MatrixQ Sampler::sl2_sigma() {
  const Rational a = nonzero(3, 2), b = rational(3, 2), c = rational(3, 2);
  return MatrixQ{{a, b}, {c, (1 + b * c) / a}};
}

Automorphism Sampler::aut_n() { return aut_n_generic(invertible(2), VecQ{rational(), rational()}); }

Automorphism Sampler::aut_sl2() {
  const Automorphism ad = adjoint_action(sl2_sigma());
  return integer(0, 1) == 1 ? psi0().compose(ad) : ad;
}

Automorphism Sampler::nxn_first_kind() {
  const MatrixQ b1 = invertible(2), b2 = invertible(2);
  return torsionlab::nxn_first_kind(b1, b2, matrix(2, 4));
}

Automorphism Sampler::sl2xsl2_first_kind() {
  const MatrixQ p1 = in_y_basis(aut_sl2()).matrix();
  const MatrixQ p2 = in_y_basis(aut_sl2()).matrix();
  return torsionlab::sl2xsl2_first_kind(p1, p2);
}

}  // namespace torsionlab
