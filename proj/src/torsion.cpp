#include "torsionlab/torsion.hpp"

namespace torsionlab {

LinearMap::LinearMap(AlgebraPtr algebra, MatrixQ matrix) : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
  if (!algebra_) throw Error(ErrorKind::Precondition, "linear map without algebra");
  if (!matrix_.is_square() || matrix_.rows() != algebra_->dim())
    throw Error(ErrorKind::Dimension, "map matrix must be " + std::to_string(algebra_->dim()) + "x" +
                                          std::to_string(algebra_->dim()));
}

VecQ torsion_tensor(const LinearMap& j, const VecQ& x, const VecQ& y) {
  if (x.size() != j.dim() || y.size() != j.dim()) throw Error(ErrorKind::Dimension, "torsion argument length mismatch");
  return torsion_value(j.algebra(), j.matrix(), x, y);
}

bool has_zero_torsion(const LinearMap& j) {
  const std::size_t n = j.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!is_zero_vector(torsion_tensor(j, unit_vector(n, a), unit_vector(n, b)))) return false;
  return true;
}

bool is_complex_structure(const LinearMap& j) {
  return j.matrix() * j.matrix() == -MatrixQ::identity(j.dim()) && has_zero_torsion(j);
}

bool is_abelian_structure(const LinearMap& j) {
  if (!is_complex_structure(j)) throw Error(ErrorKind::NotIntegrable, "abelian test needs an integrable complex structure");
  const std::size_t n = j.dim();
  const LieAlgebra& g = j.algebra();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const VecQ x = unit_vector(n, a), y = unit_vector(n, b);
      if (g.bracket(j(x), j(y)) != g.basis_bracket(a, b)) return false;
    }
  return true;
}

ComplexSubalgebra associated_subalgebra(const LinearMap& j) {
  if (!is_complex_structure(j))
    throw Error(ErrorKind::NotIntegrable, "associated subalgebra needs an integrable complex structure");
  const std::size_t n = j.dim();
  const GaussianRational i = GaussianRational::i();
  std::vector<VecQi> basis;
  for (std::size_t k = 0; k < n && basis.size() < n / 2; ++k) {
    const VecQ jx = j(unit_vector(n, k));
    VecQi v = to_complex(unit_vector(n, k));
    for (std::size_t r = 0; r < n; ++r) v[r] -= i * jx[r];
    auto trial = basis;
    trial.push_back(v);
    if (rank(MatrixQi::from_columns(trial)) == trial.size()) basis = std::move(trial);
  }
  ComplexSubalgebra m{complexify(j.algebra_ptr()), basis};
  if (basis.size() != n / 2) throw Error(ErrorKind::IntegrabilityContradiction, "m has wrong dimension");
  if (!subalgebra_closed(m.ambient, basis)) throw Error(ErrorKind::IntegrabilityContradiction, "m is not closed");
  std::vector<VecQi> both = basis;
  for (const auto& v : basis) both.push_back(conjugate(v));
  if (n > 0 && rank(MatrixQi::from_columns(both)) != n)
    throw Error(ErrorKind::IntegrabilityContradiction, "m and its conjugate do not span");
  return m;
}

}  // namespace torsionlab
