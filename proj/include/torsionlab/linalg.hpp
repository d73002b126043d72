#pragma once

#include "torsionlab/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torsionlab {

/// Univariate polynomial with rational coefficients, stored low degree first.
class UniPolyQ {
 public:
  UniPolyQ() = default;
  explicit UniPolyQ(std::vector<Rational> coeffs);

  /// Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Rational operator()(const Rational& t) const;
  MatrixQ operator()(const MatrixQ& m) const;
  double evaluate(double t) const;

  /// Distinct rational roots in increasing order.
  std::vector<Rational> rational_roots() const;

  /// "t^3 - 2*t^2 + t - 2"
  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const UniPolyQ&, const UniPolyQ&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// det(tI - m), monic of degree m.rows().
UniPolyQ char_poly(const MatrixQ& m);

/// Fraction-free (Bareiss) determinant.
Rational determinant(const MatrixQ& m);

/// Rank via fraction-free elimination.
std::size_t rank(const MatrixQ& m);
std::size_t rank(const MatrixQi& m);

/// Null space basis; empty iff m is injective.
std::vector<VecQ> kernel(const MatrixQ& m);
std::vector<VecQi> kernel(const MatrixQi& m);

MatrixQ invert(const MatrixQ& m);
MatrixQi invert(const MatrixQi& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<VecQ> solve(const MatrixQ& m, const VecQ& b);
std::optional<VecQi> solve(const MatrixQi& m, const VecQi& b);

/// Reduced row echelon form over a field; returns pivot columns. Plain Gauss-Jordan,
/// kept as an independent route next to the Bareiss code paths.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m);

bool is_scalar_matrix(const MatrixQ& m);

/// Similarity over Q for 2x2 matrices: equal trace and determinant, and either both
/// scalar and equal or both non-scalar.
bool similar_2x2(const MatrixQ& a, const MatrixQ& b);

/// S with S a S^{-1} = b for similar non-scalar (or equal scalar) 2x2 matrices.
std::optional<MatrixQ> similarity_witness_2x2(const MatrixQ& a, const MatrixQ& b);

/// Basis matrix [u, a u] for a cyclic vector u of a non-scalar 2x2 matrix; in that basis
/// a becomes the companion matrix [[0, -det a], [1, tr a]].
MatrixQ cyclic_basis_2x2(const MatrixQ& a);

/// Coordinates of v in the (independent) family `basis`, or nullopt when v is outside the span.
std::optional<VecQ> coordinates_in(const std::vector<VecQ>& basis, const VecQ& v);
std::optional<VecQi> coordinates_in(const std::vector<VecQi>& basis, const VecQi& v);

}  // namespace torsionlab
