#pragma once

#include "torsionlab/automorphism.hpp"

#include <cstdint>
#include <random>

namespace torsionlab {

/// Deterministic source of small rationals and automorphisms. Draws use the raw engine
/// output so sequences do not depend on the standard library's distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// p/q with |p| <= num and 1 <= q <= den.
  Rational rational(int num = 5, int den = 3);
  Rational nonzero(int num = 5, int den = 3);
  MatrixQ matrix(std::size_t rows, std::size_t cols, int num = 3, int den = 2);
  MatrixQ invertible(std::size_t n, int num = 3, int den = 2);
  /// sigma in SL(2, Q).
  MatrixQ sl2_sigma();

  Automorphism aut_n();
  /// Ad(sigma), or Psi0 Ad(sigma) with probability 1/2, in the H basis.
  Automorphism aut_sl2();
  Automorphism nxn_first_kind();
  Automorphism sl2xsl2_first_kind();

 private:
  std::mt19937_64 gen_;
};

}  // namespace torsionlab
