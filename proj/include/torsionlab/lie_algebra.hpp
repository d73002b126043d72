#pragma once

#include "torsionlab/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace torsionlab {

/// Finite-dimensional Lie algebra over Q given by structure constants c^k_{ij}.
/// Only pairs i < j are stored; antisymmetry holds by construction.
class LieAlgebra {
 public:
  /// One nonzero bracket [x_i, x_j] = sum_k coeffs[k] x_k, 0-based, i < j.
  struct Relation {
    std::size_t i;
    std::size_t j;
    VecQ coeffs;
  };

  LieAlgebra(std::string name, std::vector<std::string> basis_names, const std::vector<Relation>& relations);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return basis_; }

  /// [x_i, x_j] for any i, j.
  VecQ basis_bracket(std::size_t i, std::size_t j) const;
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  template <class T>
  Vector<T> bracket(const Vector<T>& x, const Vector<T>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw Error(ErrorKind::Dimension, "bracket argument length mismatch");
    Vector<T> out(dim(), T(0));
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j) {
        const VecQ& c = table_[pair_index(i, j)];
        if (is_zero_vector(c)) continue;
        const T coef = x[i] * y[j] - x[j] * y[i];
        if (coef == T(0)) continue;
        for (std::size_t k = 0; k < dim(); ++k)
          if (!c[k].is_zero()) out[k] += coef * T(c[k]);
      }
    return out;
  }

  /// Matrix of ad(x) = [x, .].
  MatrixQ ad(const VecQ& x) const;
  /// Gram matrix of the Killing form tr(ad x ad y).
  MatrixQ killing_form() const;
  bool is_abelian() const;

  /// Same dimension and identical structure constants (names ignored).
  bool same_structure(const LieAlgebra& other) const;

  std::vector<Relation> relations() const;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * dim() - i * (i + 1) / 2 + (j - i - 1); }

  std::string name_;
  std::vector<std::string> basis_;
  std::vector<VecQ> table_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

AlgebraPtr abelian(std::size_t n);
/// Heisenberg algebra n: [x1, x2] = x3.
AlgebraPtr heisenberg3();
/// sl(2,R) in the basis (H, X+, X-): [H,X+] = 2X+, [H,X-] = -2X-, [X+,X-] = H.
AlgebraPtr sl2_h();
/// sl(2,R) in the basis Y1 = H/2, Y2 = (X+ - X-)/2, Y3 = (X+ + X-)/2.
AlgebraPtr sl2_y();
/// n x n in the basis (x1, x2, x3, x4, x5, x6): [x1,x2] = x5, [x3,x4] = x6.
AlgebraPtr n_x_n();
/// sl(2,R) x sl(2,R) in the basis (Y1', Y2', Y3', Y1'', Y2'', Y3'').
AlgebraPtr sl2_x_sl2();

/// Columns are Y1, Y2, Y3 in (H, X+, X-) coordinates.
MatrixQ sl2_y_to_h();

/// Looks up a built-in algebra by CLI name: heisenberg3, sl2-H, sl2-Y, nxn, sl2xsl2.
std::optional<AlgebraPtr> builtin_algebra(const std::string& name);

bool jacobi_check(const LieAlgebra& algebra);

/// Direct product. Without `order` the basis is L1's followed by L2's; otherwise `order[k]` is the
/// index (in that concatenation) of the k-th basis vector of the result.
AlgebraPtr direct_product(const LieAlgebra& a, const LieAlgebra& b, std::optional<std::vector<std::size_t>> order = {},
                          std::string name = {});

/// New basis given by the columns of p (old coordinates).
AlgebraPtr change_basis(const LieAlgebra& algebra, const MatrixQ& p, std::string name = {});

/// Complexification: same structure constants, Q(i) scalars.
class ComplexLieAlgebra {
 public:
  explicit ComplexLieAlgebra(AlgebraPtr real) : real_(std::move(real)) {}

  const LieAlgebra& real_form() const noexcept { return *real_; }
  const AlgebraPtr& real_ptr() const noexcept { return real_; }
  std::size_t dim() const noexcept { return real_->dim(); }

  VecQi bracket(const VecQi& x, const VecQi& y) const { return real_->bracket(x, y); }
  /// Conjugation with respect to the real form.
  static VecQi conjugate(const VecQi& v) { return torsionlab::conjugate(v); }

 private:
  AlgebraPtr real_;
};

ComplexLieAlgebra complexify(AlgebraPtr algebra);

/// True iff all pairwise brackets of the (independent) vectors stay in their span.
bool subalgebra_closed(const ComplexLieAlgebra& algebra, const std::vector<VecQi>& vectors);

}  // namespace torsionlab
