#pragma once

#include "torsionlab/lie_algebra.hpp"

namespace torsionlab {

/// Linear endomorphism J of a Lie algebra; column j holds J(x_j), so entry (i, j) is xi^i_j.
class LinearMap {
 public:
  LinearMap(AlgebraPtr algebra, MatrixQ matrix);

  const LieAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const MatrixQ& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  VecQ operator()(const VecQ& x) const { return matrix_ * x; }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.algebra().same_structure(b.algebra()) && a.matrix_ == b.matrix_;
  }

 private:
  AlgebraPtr algebra_;
  MatrixQ matrix_;
};

/// [JX, JY] - [X, Y] - J[JX, Y] - J[X, JY] for any scalar type (used symbolically too).
template <class T>
Vector<T> torsion_value(const LieAlgebra& algebra, const Matrix<T>& j, const Vector<T>& x, const Vector<T>& y) {
  const Vector<T> jx = j * x, jy = j * y;
  return algebra.bracket(jx, jy) - algebra.bracket(x, y) - j * algebra.bracket(jx, y) - j * algebra.bracket(x, jy);
}

VecQ torsion_tensor(const LinearMap& j, const VecQ& x, const VecQ& y);

/// The torsion is bilinear and antisymmetric, so basis pairs i < j decide vanishing.
bool has_zero_torsion(const LinearMap& j);
bool is_complex_structure(const LinearMap& j);
/// [JX, JY] = [X, Y] on basis pairs. Requires an integrable complex structure.
bool is_abelian_structure(const LinearMap& j);

struct ComplexSubalgebra {
  ComplexLieAlgebra ambient;
  std::vector<VecQi> basis;
};

/// m = {X - iJX}, reduced to dim/2 independent vectors and checked to be a subalgebra
/// complementary to its conjugate.
ComplexSubalgebra associated_subalgebra(const LinearMap& j);

}  // namespace torsionlab
