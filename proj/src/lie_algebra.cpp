#include "torsionlab/lie_algebra.hpp"

namespace torsionlab {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names, const std::vector<Relation>& relations)
    : name_(std::move(name)), basis_(std::move(basis_names)) {
  const std::size_t n = basis_.size();
  table_.assign(n * (n - (n ? 1 : 0)) / 2, VecQ(n, Rational(0)));
  for (const auto& r : relations) {
    if (r.i >= n || r.j >= n || r.coeffs.size() != n) throw Error(ErrorKind::Dimension, "relation out of range");
    if (r.i >= r.j) throw Error(ErrorKind::Structure, "relations must be given for i < j");
    table_[pair_index(r.i, r.j)] = r.coeffs;
  }
}

VecQ LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw Error(ErrorKind::Dimension, "basis index out of range");
  if (i == j) return VecQ(dim(), Rational(0));
  if (i < j) return table_[pair_index(i, j)];
  return scaled(table_[pair_index(j, i)], Rational(-1));
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  return basis_bracket(i, j).at(k);
}

MatrixQ LieAlgebra::ad(const VecQ& x) const {
  std::vector<VecQ> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket(x, unit_vector(dim(), j)));
  return MatrixQ::from_columns(cols);
}

MatrixQ LieAlgebra::killing_form() const {
  std::vector<MatrixQ> ads;
  for (std::size_t i = 0; i < dim(); ++i) ads.push_back(ad(unit_vector(dim(), i)));
  MatrixQ k(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) k(i, j) = (ads[i] * ads[j]).trace();
  return k;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& c : table_)
    if (!is_zero_vector(c)) return false;
  return true;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const { return dim() == other.dim() && table_ == other.table_; }

std::vector<LieAlgebra::Relation> LieAlgebra::relations() const {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!is_zero_vector(table_[pair_index(i, j)])) out.push_back({i, j, table_[pair_index(i, j)]});
  return out;
}

namespace {

VecQ coeffs(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> entries) {
  VecQ v(n, Rational(0));
  for (const auto& [k, c] : entries) v[k] = c;
  return v;
}

}  // namespace

AlgebraPtr abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return std::make_shared<LieAlgebra>("abelian" + std::to_string(n), names, std::vector<LieAlgebra::Relation>{});
}

AlgebraPtr heisenberg3() {
  return std::make_shared<LieAlgebra>("heisenberg3", std::vector<std::string>{"x1", "x2", "x3"},
                                      std::vector<LieAlgebra::Relation>{{0, 1, coeffs(3, {{2, 1}})}});
}

AlgebraPtr sl2_h() {
  return std::make_shared<LieAlgebra>(
      "sl2-H", std::vector<std::string>{"H", "X+", "X-"},
      std::vector<LieAlgebra::Relation>{
          {0, 1, coeffs(3, {{1, 2}})}, {0, 2, coeffs(3, {{2, -2}})}, {1, 2, coeffs(3, {{0, 1}})}});
}

AlgebraPtr sl2_y() {
  return std::make_shared<LieAlgebra>(
      "sl2-Y", std::vector<std::string>{"Y1", "Y2", "Y3"},
      std::vector<LieAlgebra::Relation>{
          {0, 1, coeffs(3, {{2, 1}})}, {0, 2, coeffs(3, {{1, 1}})}, {1, 2, coeffs(3, {{0, 1}})}});
}

MatrixQ sl2_y_to_h() {
  const Rational h(1, 2);
  return MatrixQ{{h, 0, 0}, {0, h, h}, {0, -h, h}};
}

AlgebraPtr n_x_n() {
  // Concatenated order is (x1, x2, x3 | x1', x2', x3'); centers go last.
  return direct_product(*heisenberg3(), *heisenberg3(), std::vector<std::size_t>{0, 1, 3, 4, 2, 5}, "nxn");
}

AlgebraPtr sl2_x_sl2() { return direct_product(*sl2_y(), *sl2_y(), std::nullopt, "sl2xsl2"); }

std::optional<AlgebraPtr> builtin_algebra(const std::string& name) {
  if (name == "heisenberg3" || name == "n") return heisenberg3();
  if (name == "sl2-H" || name == "sl2") return sl2_h();
  if (name == "sl2-Y") return sl2_y();
  if (name == "nxn") return n_x_n();
  if (name == "sl2xsl2") return sl2_x_sl2();
  return std::nullopt;
}

bool jacobi_check(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const VecQ ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
        const VecQ s = algebra.bracket(ea, algebra.basis_bracket(b, c)) + algebra.bracket(eb, algebra.basis_bracket(c, a)) +
                       algebra.bracket(ec, algebra.basis_bracket(a, b));
        if (!is_zero_vector(s)) return false;
      }
  return true;
}

AlgebraPtr direct_product(const LieAlgebra& a, const LieAlgebra& b, std::optional<std::vector<std::size_t>> order,
                          std::string name) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  if (order) {
    perm = *order;
    std::vector<bool> seen(n, false);
    if (perm.size() != n) throw Error(ErrorKind::Dimension, "basis order has wrong length");
    for (auto p : perm) {
      if (p >= n || seen[p]) throw Error(ErrorKind::Parameter, "basis order is not a permutation");
      seen[p] = true;
    }
  }
  std::vector<std::size_t> pos(n);  // concatenated index -> result index
  for (std::size_t k = 0; k < n; ++k) pos[perm[k]] = k;

  std::vector<std::string> concat_names;
  for (const auto& s : a.basis_names()) concat_names.push_back(s + "(1)");
  for (const auto& s : b.basis_names()) concat_names.push_back(s + "(2)");
  std::vector<std::string> names(n);
  for (std::size_t k = 0; k < n; ++k) names[k] = concat_names[perm[k]];

  std::vector<LieAlgebra::Relation> rels;
  auto add = [&](const LieAlgebra& f, std::size_t offset) {
    for (const auto& r : f.relations()) {
      VecQ c(n, Rational(0));
      for (std::size_t k = 0; k < f.dim(); ++k) c[pos[offset + k]] = r.coeffs[k];
      std::size_t i = pos[offset + r.i], j = pos[offset + r.j];
      if (i > j) {
        std::swap(i, j);
        c = scaled(c, Rational(-1));
      }
      rels.push_back({i, j, c});
    }
  };
  add(a, 0);
  add(b, a.dim());
  if (name.empty()) name = a.name() + "x" + b.name();
  return std::make_shared<LieAlgebra>(name, names, rels);
}

AlgebraPtr change_basis(const LieAlgebra& algebra, const MatrixQ& p, std::string name) {
  const std::size_t n = algebra.dim();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorKind::Dimension, "basis change matrix has wrong shape");
  const MatrixQ pinv = invert(p);  // throws Singularity
  std::vector<LieAlgebra::Relation> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VecQ c = pinv * algebra.bracket(p.column(i), p.column(j));
      if (!is_zero_vector(c)) rels.push_back({i, j, std::move(c)});
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return std::make_shared<LieAlgebra>(name.empty() ? algebra.name() + "'" : std::move(name), names, rels);
}

ComplexLieAlgebra complexify(AlgebraPtr algebra) { return ComplexLieAlgebra(std::move(algebra)); }

bool subalgebra_closed(const ComplexLieAlgebra& algebra, const std::vector<VecQi>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != algebra.dim()) throw Error(ErrorKind::Dimension, "vector length mismatch");
  if (!vectors.empty() && rank(MatrixQi::from_columns(vectors)) != vectors.size())
    throw Error(ErrorKind::Rank, "subalgebra generators are linearly dependent");
  for (std::size_t a = 0; a < vectors.size(); ++a)
    for (std::size_t b = a + 1; b < vectors.size(); ++b)
      if (!coordinates_in(vectors, algebra.bracket(vectors[a], vectors[b]))) return false;
  return true;
}

}  // namespace torsionlab
