#include "torsionlab/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>

namespace torsionlab {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

struct Echelon {
  IntRows rows;
  std::vector<std::size_t> pivots;
  int swaps = 0;
};

Integer lcm_of_denominators(std::span<const Rational> xs) {
  Integer l = 1;
  for (const auto& x : xs) l = boost::multiprecision::lcm(l, denominator_of(x));
  return l;
}

/// Scales every row to integers; `scales[i]` is the factor applied to row i.
IntRows integerize(const MatrixQ& m, std::vector<Integer>& scales) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  scales.assign(m.rows(), Integer(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    const Integer l = lcm_of_denominators(row);
    scales[i] = l;
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = numerator_of(row[j] * Rational(l));
  }
  return out;
}

/// Fraction-free forward elimination. Every intermediate entry is a minor of the input,
/// so the division by the previous pivot is exact.
Echelon bareiss(IntRows rows, std::size_t cols) {
  Echelon e;
  const std::size_t n = rows.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && rows[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      ++e.swaps;
    }
    const Integer& pivot = rows[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      const Integer lead = rows[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer num = pivot * rows[i][j] - lead * rows[r][j];
        Integer q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw Error(ErrorKind::Internal, "inexact Bareiss division");
        rows[i][j] = std::move(q);
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

/// Back substitution on an integer echelon form for the unknowns listed in `values`
/// (free unknowns must already be set).
void back_substitute(const Echelon& e, std::vector<Rational>& x, std::size_t ncols) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const std::size_t c = e.pivots[k];
    Rational s = 0;
    for (std::size_t j = c + 1; j < ncols; ++j)
      if (e.rows[k][j] != 0 && !x[j].is_zero()) s += Rational(e.rows[k][j]) * x[j];
    x[c] = -s / Rational(e.rows[k][c]);
  }
}

template <class T>
std::vector<Vector<T>> kernel_generic(Matrix<T> m) {
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Matrix<T> invert_generic(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorKind::Dimension, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::Singularity, "matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class T>
std::optional<Vector<T>> solve_generic(const Matrix<T>& m, const Vector<T>& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::Dimension, "right-hand side length mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector<T> x(m.cols(), T(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

template <class T>
std::optional<Vector<T>> coordinates_generic(const std::vector<Vector<T>>& basis, const Vector<T>& v) {
  if (basis.empty()) return is_zero_vector(v) ? std::optional<Vector<T>>(Vector<T>{}) : std::nullopt;
  const Matrix<T> m = Matrix<T>::from_columns(basis);
  if (rank(m) != basis.size()) throw Error(ErrorKind::Rank, "basis vectors are linearly dependent");
  return solve_generic(m, v);
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Rationalizes x by continued fractions; returns all convergents with denominator <= max_den.
std::vector<Rational> convergents(double x, long long max_den) {
  std::vector<Rational> out;
  long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // h_{-1}, h_{-2}, ...
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 9e15) break;
    const auto ai = static_cast<long long>(a);
    const long long h = ai * h0 + h1;
    const long long k = ai * k0 + k1;
    if (k > max_den || k <= 0) break;
    out.emplace_back(Rational(h, k));
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    const double frac = r - a;
    if (std::abs(frac) < 1e-15) break;
    r = 1.0 / frac;
  }
  return out;
}

}  // namespace

template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == T(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == T(0)) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template std::vector<std::size_t> rref_in_place<Rational>(MatrixQ&);
template std::vector<std::size_t> rref_in_place<GaussianRational>(MatrixQi&);

UniPolyQ::UniPolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPolyQ::operator()(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
  return acc;
}

MatrixQ UniPolyQ::operator()(const MatrixQ& m) const {
  if (!m.is_square()) throw Error(ErrorKind::Dimension, "polynomial of non-square matrix");
  MatrixQ acc(m.rows(), m.cols());
  const MatrixQ id = MatrixQ::identity(m.rows());
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * m + id * coeffs_[k];
  return acc;
}

double UniPolyQ::evaluate(double t) const {
  double acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k].convert_to<double>();
  return acc;
}

std::vector<Rational> UniPolyQ::rational_roots() const {
  std::set<Rational> roots;
  if (degree() <= 0) return {};
  std::vector<Rational> c = coeffs_;
  std::size_t low = 0;
  while (c[low].is_zero()) ++low;
  if (low > 0) roots.insert(Rational(0));
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() <= 1) return {roots.begin(), roots.end()};

  const Integer l = lcm_of_denominators(c);
  std::vector<Integer> ic;
  for (const auto& x : c) ic.push_back(numerator_of(x * Rational(l)));
  const UniPolyQ reduced(c);

  // Rational root theorem when both end coefficients are small enough to factor by trial division.
  const Integer limit = Integer(1) << 40;
  if (abs(ic.front()) < limit && abs(ic.back()) < limit) {
    for (const auto& p : divisors(ic.front()))
      for (const auto& q : divisors(ic.back()))
        for (int s : {1, -1}) {
          const Rational cand(Integer(s) * p, q);
          if (reduced(cand).is_zero()) roots.insert(cand);
        }
    return {roots.begin(), roots.end()};
  }

  // Large coefficients: numeric real roots, rationalized and verified exactly.
  const int n = reduced.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  const double lead = c.back().convert_to<double>();
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)].convert_to<double>() / lead;
  const Eigen::VectorXcd ev = comp.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i).imag()) > 1e-6 * (1.0 + std::abs(ev(i).real()))) continue;
    for (const auto& cand : convergents(ev(i).real(), 1'000'000'000LL))
      if (reduced(cand).is_zero()) roots.insert(cand);
  }
  return {roots.begin(), roots.end()};
}

std::string UniPolyQ::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    const bool unit = a == 1;
    if (k == 0) s += torsionlab::to_string(a);
    else {
      if (!unit) s += torsionlab::to_string(a) + "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

UniPolyQ char_poly(const MatrixQ& m) {
  if (!m.is_square()) throw Error(ErrorKind::Dimension, "characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  MatrixQ mk(n, n);
  const MatrixQ id = MatrixQ::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return UniPolyQ(std::move(c));
}

Rational determinant(const MatrixQ& m) {
  if (!m.is_square()) throw Error(ErrorKind::Dimension, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  std::vector<Integer> scales;
  const Echelon e = bareiss(integerize(m, scales), m.cols());
  if (e.pivots.size() < m.rows()) return 0;
  Rational d(e.rows.back().back());
  for (const auto& s : scales) d /= Rational(s);
  return e.swaps % 2 ? Rational(-d) : d;
}

std::size_t rank(const MatrixQ& m) {
  std::vector<Integer> scales;
  return bareiss(integerize(m, scales), m.cols()).pivots.size();
}

std::size_t rank(const MatrixQi& m) {
  MatrixQi c = m;
  return rref_in_place(c).size();
}

std::vector<VecQ> kernel(const MatrixQ& m) {
  std::vector<Integer> scales;
  const Echelon e = bareiss(integerize(m, scales), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<VecQ> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    VecQ x(m.cols(), Rational(0));
    x[f] = 1;
    back_substitute(e, x, m.cols());
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<VecQi> kernel(const MatrixQi& m) { return kernel_generic(m); }

MatrixQ invert(const MatrixQ& m) { return invert_generic(m); }
MatrixQi invert(const MatrixQi& m) { return invert_generic(m); }

std::optional<VecQ> solve(const MatrixQ& m, const VecQ& b) { return solve_generic(m, b); }
std::optional<VecQi> solve(const MatrixQi& m, const VecQi& b) { return solve_generic(m, b); }

bool is_scalar_matrix(const MatrixQ& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
      if (i == j && m(i, i) != m(0, 0)) return false;
    }
  return true;
}

bool similar_2x2(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
    throw Error(ErrorKind::Dimension, "similar_2x2 expects 2x2 matrices");
  if (a.trace() != b.trace() || determinant(a) != determinant(b)) return false;
  const bool sa = is_scalar_matrix(a);
  const bool sb = is_scalar_matrix(b);
  if (sa && sb) return a == b;
  return sa == sb;
}

MatrixQ cyclic_basis_2x2(const MatrixQ& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::Dimension, "expected a 2x2 matrix");
  if (is_scalar_matrix(a)) throw Error(ErrorKind::Parameter, "scalar matrix has no cyclic vector");
  // A non-scalar 2x2 matrix has at most two eigenlines, so one of e1, e2, e1 + e2 is cyclic.
  for (const VecQ& u : {unit_vector(2, 0), unit_vector(2, 1), VecQ{1, 1}}) {
    MatrixQ c = MatrixQ::from_columns({u, a * u});
    if (!determinant(c).is_zero()) return c;
  }
  throw Error(ErrorKind::Internal, "no cyclic vector found");
}

std::optional<MatrixQ> similarity_witness_2x2(const MatrixQ& a, const MatrixQ& b) {
  if (!similar_2x2(a, b)) return std::nullopt;
  if (is_scalar_matrix(a)) return MatrixQ::identity(2);
  return cyclic_basis_2x2(b) * invert(cyclic_basis_2x2(a));
}

std::optional<VecQ> coordinates_in(const std::vector<VecQ>& basis, const VecQ& v) {
  return coordinates_generic(basis, v);
}
std::optional<VecQi> coordinates_in(const std::vector<VecQi>& basis, const VecQi& v) {
  return coordinates_generic(basis, v);
}

}  // namespace torsionlab
