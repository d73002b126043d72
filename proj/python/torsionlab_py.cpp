#include "torsionlab/cli.hpp"
#include "torsionlab/io.hpp"
#include "torsionlab/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace torsionlab;

namespace {

using Rows = std::vector<std::vector<std::string>>;

MatrixQ to_matrix(const Rows& rows) {
  const std::size_t n = rows.size();
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::Dimension, "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

LinearMap to_map(const std::string& algebra, const Rows& rows, bool check_jacobi) {
  const AlgebraPtr a = resolve_algebra(algebra, check_jacobi);
  MatrixQ m = to_matrix(rows);
  if (m.rows() != a->dim()) throw Error(ErrorKind::Dimension, "matrix does not match the algebra dimension");
  return LinearMap(a, std::move(m));
}

// Results cross the boundary as JSON text; the Python side decodes them.
std::string dumps(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact zero-torsion computations on low-dimensional Lie algebras";
  py::register_exception<Error>(m, "TorsionlabError", PyExc_ValueError);

  m.def("equations", [](const std::string& algebra, bool check_jacobi) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : generate_system(resolve_algebra(algebra, check_jacobi)).nonzero())
      out.emplace_back(e.label, e.poly.to_string());
    return out;
  }, py::arg("algebra") = "heisenberg3", py::arg("check_jacobi") = true);

  m.def("verify", [](const std::string& algebra, const Rows& rows, bool check_jacobi) {
    const LinearMap j = to_map(algebra, rows, check_jacobi);
    return dumps(Json{{"zero_torsion", has_zero_torsion(j)}, {"integrable", is_complex_structure(j)}});
  }, py::arg("algebra"), py::arg("matrix"), py::arg("check_jacobi") = true);

  m.def("classify", [](const std::string& algebra, const Rows& rows) {
    const LinearMap j = to_map(algebra, rows, true);
    const LieAlgebra& g = j.algebra();
    if (g.same_structure(*heisenberg3())) return dumps(to_json(classify_n(j)));
    if (g.same_structure(*sl2_h()) || g.same_structure(*sl2_y())) return dumps(to_json(classify_sl2(j)));
    throw Error(ErrorKind::Precondition, "classify covers heisenberg3 and sl2; use the CLI for product algebras");
  }, py::arg("algebra"), py::arg("matrix"));

  m.def("equivalent", [](const std::string& algebra, const Rows& a, const Rows& b) {
    const LinearMap j1 = to_map(algebra, a, true), j2 = to_map(algebra, b, true);
    const LieAlgebra& g = j1.algebra();
    if (g.same_structure(*heisenberg3())) return dumps(to_json(equivalent_n(j1, j2)));
    if (g.same_structure(*n_x_n())) return dumps(to_json(equivalent_nxn(j1, j2)));
    return dumps(to_json(equivalent_sl2(j1, j2)));
  }, py::arg("algebra"), py::arg("matrix1"), py::arg("matrix2"));

  m.def("orbit", [](const std::vector<std::string>& v) {
    if (v.size() != 3) throw Error(ErrorKind::Dimension, "orbit needs three coordinates");
    return dumps(to_json(classify_orbit({parse_rational(v[0]), parse_rational(v[1]), parse_rational(v[2])})));
  }, py::arg("vector"));

  m.def("cr_verdict", [](const std::string& algebra, const Rows& rows) {
    return dumps(to_json(cr_extension_verdict(to_map(algebra, rows, true))));
  }, py::arg("algebra"), py::arg("matrix"));

  m.def("reproduce_paper", [](std::uint64_t seed) { return dumps(to_json(reproduce_paper(seed))); }, py::arg("seed"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
