#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glattice/certificates.hpp"
#include "glattice/cohomology.hpp"
#include "glattice/errors.hpp"
#include "glattice/expr.hpp"
#include "glattice/paperlab.hpp"

namespace py = pybind11;
using namespace glattice;

namespace {

py::int_ to_py(const Integer& x) {
  if (x.is_small()) return py::int_(x.to_int64());
  return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10)));
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::dict cohomology_to_py(const CohomologyReport& r) {
  py::dict d;
  d["degree"] = r.degree;
  d["value"] = r.value.str();
  py::list f;
  for (const auto& x : r.value.invariant_factors()) f.append(to_py(x));
  d["invariant_factors"] = f;
  d["free_rank"] = r.value.free_rank();
  d["method"] = method_name(r.method);
  return d;
}

Limits limits_from(std::uint64_t seed, int iso_bound) {
  Limits lim;
  lim.seed = seed;
  lim.iso_search_bound = iso_bound;
  return lim;
}

}  // namespace

PYBIND11_MODULE(_glattice, m) {
  m.doc() = "Integral G-lattices, Tate cohomology and isomorphism certificates";

  py::register_exception<SizeLimitError>(m, "SizeLimitError");
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ExpressionError>(m, "ExpressionError", PyExc_ValueError);
  py::register_exception<ContainmentError>(m, "ContainmentError", PyExc_ValueError);

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("degree", &FiniteGroup::degree)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">"; });

  m.def("group", [](const std::string& spec) { return std::make_shared<FiniteGroup>(parse_group_spec(spec)); },
        py::arg("spec"), "Parses sym(n), cyclic(m), klein4, trivial, gens(d; ...) or product(a, b).");

  py::class_<GLattice>(m, "Lattice")
      .def_property_readonly("rank", &GLattice::rank)
      .def_property_readonly("name", &GLattice::name)
      .def("generator_matrices",
           [](const GLattice& l) {
             py::list out;
             for (const auto& a : l.gen_actions()) out.append(matrix_to_py(a));
             return out;
           })
      .def("__repr__", [](const GLattice& l) { return "<Lattice " + l.name() + " of rank " + std::to_string(l.rank()) + ">"; });

  m.def(
      "lattice", [](const std::string& expr, const std::shared_ptr<FiniteGroup>& g) { return build_lattice(expr, g); },
      py::arg("expr"), py::arg("group"));

  m.def(
      "tate", [](const GLattice& l, int q) { return cohomology_to_py(tate(l, q)); }, py::arg("lattice"), py::arg("q"));
  m.def(
      "bar_oracle", [](const GLattice& l, int q) { return cohomology_to_py(bar_oracle(l, q)); }, py::arg("lattice"),
      py::arg("q"));
  m.def(
      "ext1", [](const GLattice& a, const GLattice& b) { return cohomology_to_py(ext1(a, b)); }, py::arg("a"),
      py::arg("b"));
  m.def(
      "is_faithful", [](const GLattice& l) { return is_faithful(l).faithful; }, py::arg("lattice"));
  m.def(
      "character", [](const GLattice& l) { return rational_character(l).str(); }, py::arg("lattice"));
  m.def(
      "iso_certificate",
      [](const GLattice& a, const GLattice& b, std::uint64_t seed) -> py::object {
        IsoSearchOptions o;
        o.seed = seed;
        IsoSearchResult r = zg_iso_certificate(a, b, o);
        if (!r.certificate) return py::none();
        return matrix_to_py(r.certificate->intertwiner);
      },
      py::arg("a"), py::arg("b"), py::arg("seed") = 0,
      "Unimodular intertwiner as a list of rows, or None when none was found.");

  m.def(
      "run_fp", [](int n, std::uint64_t seed, int bound) { return run_formanek_procesi(n, limits_from(seed, bound)).to_json(); },
      py::arg("n"), py::arg("seed") = 0, py::arg("iso_search_bound") = 2);
  m.def(
      "run_prop_ll",
      [](int n, std::uint64_t seed, int bound) { return run_stable_permutation(n, limits_from(seed, bound)).to_json(); },
      py::arg("n"), py::arg("seed") = 0, py::arg("iso_search_bound") = 2);
  m.def(
      "run_ext", [](int n, std::uint64_t seed, int bound) { return run_ext_vanishing(n, limits_from(seed, bound)).to_json(); },
      py::arg("n"), py::arg("seed") = 0, py::arg("iso_search_bound") = 2);
  m.def(
      "run_prop31",
      [](int n, std::uint64_t seed, int bound) { return run_sym_square_diagram(n, limits_from(seed, bound)).to_json(); },
      py::arg("n"), py::arg("seed") = 0, py::arg("iso_search_bound") = 2);
  m.def(
      "run_section6", [](std::uint64_t seed, int bound) { return run_degree_four(limits_from(seed, bound)).to_json(); },
      py::arg("seed") = 0, py::arg("iso_search_bound") = 2);
  m.def(
      "run_crossed_bound",
      [](const std::string& group, int degree, const std::string& gens) {
        CrossedBoundResult r = run_crossed_bound(group, degree, gens);
        return py::make_tuple(r.report.to_json(), r.bound.to_json());
      },
      py::arg("group"), py::arg("degree"), py::arg("gens"));
  m.def(
      "bounds_table", [](long n_max) { return bounds_table_json(bounds_table(n_max)); }, py::arg("n_max"));
}
