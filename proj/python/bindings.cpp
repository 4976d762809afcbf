#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "levelcomplex/betti.hpp"
#include "levelcomplex/canonical.hpp"
#include "levelcomplex/cli.hpp"
#include "levelcomplex/error.hpp"
#include "levelcomplex/fixtures.hpp"
#include "levelcomplex/path_complex.hpp"
#include "levelcomplex/shelling.hpp"

namespace py = pybind11;
using namespace levelcomplex;

namespace {

using CellList = std::vector<std::pair<int, int>>;

CellList cells(const SimplicialComplex& c, Face f) {
  CellList out;
  for (const Cell& x : c.cells_of(f)) out.emplace_back(x.row, x.col);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Initial ideals of 2-minors: complexes, canonical modules, Betti tables, shellings";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit code, stdout, stderr).");

  m.def(
      "facets",
      [](int rows, int cols, const std::string& order) {
        const auto oc = order_complex(resolve_order(MatrixShape(rows, cols), order));
        std::vector<CellList> out;
        for (Face f : oc.reduced.facets()) out.push_back(cells(oc.reduced, f));
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("order") = "rows",
      "Facets of the complex of the initial ideal, cone points removed.");

  m.def(
      "betti",
      [](int rows, int cols, const std::string& order, const std::string& field, int threads, bool force) {
        py::gil_scoped_release release;
        const auto oc = order_complex(resolve_order(MatrixShape(rows, cols), order));
        HochsterOptions options;
        options.force = force;
        return hochster_betti_table(oc.full, FieldSpec::parse(field),
                                    WorkerPool(static_cast<std::size_t>(threads)), options)
            .entries();
      },
      py::arg("m"), py::arg("n"), py::arg("order") = "rows", py::arg("field") = "Q", py::arg("threads") = 1,
      py::arg("force") = false, "Graded Betti numbers as {(i, j): beta}.");

  m.def(
      "level",
      [](int rows, int cols, const std::string& order, const std::string& field) {
        const auto r = level_report(resolve_order(MatrixShape(rows, cols), order), FieldSpec::parse(field));
        py::dict d;
        d["level"] = r.is_level;
        d["gorenstein"] = r.is_gorenstein;
        d["cohen_macaulay"] = r.cohen_macaulay;
        d["type"] = r.cm_type;
        d["a_invariant"] = r.a_invariant;
        d["ambient_a_invariant"] = r.ambient_a_invariant;
        d["degrees"] = r.generator_degrees;
        d["omega_dims"] = r.omega_dims;
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("order") = "rows", py::arg("field") = "Q",
      "Levelness verdict for the canonical module.");

  m.def(
      "shelling",
      [](int rows, int cols) {
        const MatrixShape shape(rows, cols);
        const auto delta = path_complex(shape);
        const auto r = verify_shelling(delta, shelling_order(shape));
        py::dict d;
        d["ok_forward"] = r.ok_forward;
        d["ok_backward"] = r.ok_backward;
        std::vector<CellList> order;
        for (Face f : r.order) order.push_back(cells(delta, f));
        d["order"] = order;
        d["h_vector"] = r.ok_forward ? py::cast(h_vector_from_shelling(r)) : py::none();
        return d;
      },
      py::arg("m"), py::arg("n"), "Check the facet order as a two-way shelling.");

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixtures()) out.push_back(f.name);
    return out;
  });
}
