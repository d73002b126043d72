#pragma once

#include "torsionlab/matrix.hpp"

#include <cstdint>
#include <random>

namespace testsupport {

using torsionlab::MatrixQ;
using torsionlab::Rational;
using torsionlab::VecQ;

inline constexpr std::uint64_t kSeed = 20240611;

/// Small random rationals p/q with |p| <= num, 1 <= q <= den.
class RandomQ {
 public:
  explicit RandomQ(std::uint64_t seed = kSeed) : gen_(seed) {}

  Rational operator()(int num = 6, int den = 4) {
    std::uniform_int_distribution<int> p(-num, num), q(1, den);
    return Rational(p(gen_), q(gen_));
  }
  Rational nonzero(int num = 6, int den = 4) {
    Rational r;
    do r = (*this)(num, den);
    while (r.is_zero());
    return r;
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  MatrixQ matrix(std::size_t r, std::size_t c, int num = 6, int den = 4) {
    MatrixQ m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(num, den);
    return m;
  }
  MatrixQ invertible(std::size_t n, int num = 4, int den = 3);
  VecQ vector(std::size_t n, int num = 6, int den = 4) {
    VecQ v(n);
    for (auto& x : v) x = (*this)(num, den);
    return v;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testsupport

#include "torsionlab/linalg.hpp"

inline torsionlab::MatrixQ testsupport::RandomQ::invertible(std::size_t n, int num, int den) {
  for (;;) {
    MatrixQ m = matrix(n, n, num, den);
    if (!torsionlab::determinant(m).is_zero()) return m;
  }
}
