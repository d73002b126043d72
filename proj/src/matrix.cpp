#include "torsionlab/matrix.hpp"

namespace torsionlab {

MatrixQi to_complex(const MatrixQ& m) {
  std::vector<GaussianRational> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.emplace_back(x);
  return MatrixQi(m.rows(), m.cols(), std::move(d));
}

MatrixQi conjugate(const MatrixQi& m) {
  std::vector<GaussianRational> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.push_back(x.conj());
  return MatrixQi(m.rows(), m.cols(), std::move(d));
}

VecQi to_complex(const VecQ& v) { return VecQi(v.begin(), v.end()); }

VecQi conjugate(const VecQi& v) {
  VecQi out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

VecQ unit_vector(std::size_t n, std::size_t k) {
  VecQ e(n, Rational(0));
  e.at(k) = 1;
  return e;
}

std::string to_string(const MatrixQ& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace torsionlab
