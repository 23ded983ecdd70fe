#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mfnps/mfnps.hpp"

namespace py = pybind11;
using namespace mfnps;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quartic anharmonic oscillator levels from the self-consistent "
            "nonlinear perturbation series";

  py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("cubic_positive_root", &cubic_positive_root, py::arg("a"), py::arg("b"),
        "Positive root of x^3 - a x - b = 0 (a, b >= 0).");
  m.def("solve_base_frequency", &solve_base_frequency, py::arg("lam"));
  m.def("solve_variational_W", &solve_variational_W, py::arg("lam"),
        py::arg("n"), py::arg("base") = 1.0);

  py::class_<SplitChain>(m, "SplitChain")
      .def_readonly("lam", &SplitChain::lambda)
      .def_readonly("base_w", &SplitChain::base_w)
      .def_readonly("steps", &SplitChain::steps)
      .def_property_readonly("depth", &SplitChain::depth)
      .def_property_readonly("counterterm_sum", &SplitChain::counterterm_sum);
  m.def("build_chain", &build_chain, py::arg("lam"), py::arg("depth"));

  py::enum_<SchemeKind>(m, "SchemeKind")
      .value("ChainStateIndependent", SchemeKind::ChainStateIndependent)
      .value("VariationalSingleStep", SchemeKind::VariationalSingleStep)
      .value("VariationalTwoStep", SchemeKind::VariationalTwoStep)
      .value("Unsplit", SchemeKind::Unsplit);

  py::class_<SchemeSpec>(m, "SchemeSpec")
      .def_readonly("kind", &SchemeSpec::kind)
      .def_readonly("lam", &SchemeSpec::lambda)
      .def_readonly("depth", &SchemeSpec::depth)
      .def_readonly("state_n", &SchemeSpec::state_n)
      .def_readonly("effective_W", &SchemeSpec::effective_W)
      .def_readonly("counterterm_sum", &SchemeSpec::counterterm_sum)
      .def_readonly("parameters", &SchemeSpec::parameters)
      .def_property_readonly("descriptor", &SchemeSpec::descriptor)
      .def("__repr__", [](const SchemeSpec& s) {
        return "<SchemeSpec " + s.descriptor() + ">";
      });
  m.def("scheme", &parse_scheme, py::arg("descriptor"), py::arg("lam"),
        py::arg("n") = 0, "Scheme from 'chain:k', 'var1', 'var2' or 'unsplit'.");

  m.def("diag_element", &diag_element, py::arg("scheme"), py::arg("m"));
  m.def("offdiag2", &offdiag2, py::arg("scheme"), py::arg("m"));
  m.def("offdiag4", &offdiag4, py::arg("scheme"), py::arg("m"));

  py::class_<SeriesEvaluation>(m, "SeriesEvaluation")
      .def_readonly("per_order_terms", &SeriesEvaluation::per_order_terms)
      .def_readonly("total", &SeriesEvaluation::total);
  m.def(
      "evaluate_series",
      [](const SchemeSpec& scheme, int n, double energy, int order) {
        return evaluate_series(build_banded(scheme, required_dimension(n, order)),
                               n, energy, order);
      },
      py::arg("scheme"), py::arg("n"), py::arg("energy"), py::arg("order"));

  py::enum_<SolveStatus>(m, "SolveStatus")
      .value("Converged", SolveStatus::Converged)
      .value("NoConvergence", SolveStatus::NoConvergence)
      .value("SmallDenominator", SolveStatus::SmallDenominator);

  py::class_<EnergySolution>(m, "EnergySolution")
      .def_readonly("scheme", &EnergySolution::scheme)
      .def_readonly("n", &EnergySolution::state_n)
      .def_readonly("order", &EnergySolution::order_K)
      .def_readonly("energy", &EnergySolution::energy)
      .def_readonly("iterations", &EnergySolution::iterations)
      .def_readonly("residual", &EnergySolution::final_residual)
      .def_readonly("status", &EnergySolution::status)
      .def_property_readonly("converged", &EnergySolution::converged);

  m.def(
      "energy",
      [](const SchemeSpec& scheme, int n, int order, double tolerance,
         int max_iterations) {
        return self_consistent_energy(scheme, n, order, {tolerance, max_iterations});
      },
      py::arg("scheme"), py::arg("n"), py::arg("order") = 15,
      py::arg("tolerance") = 1e-14, py::arg("max_iterations") = 500);

  m.def(
      "convergence_table",
      [](const SchemeSpec& scheme, int n, int max_order) {
        return convergence_table(scheme, n, max_order).rows;
      },
      py::arg("scheme"), py::arg("n"), py::arg("max_order") = 15);

  m.def(
      "table",
      [](int id) {
        const auto t = compute_table(id);
        py::list rows;
        for (std::size_t r = 0; r < t.cells.size(); ++r) {
          py::list values;
          for (const auto& c : t.cells[r]) {
            values.append(c.energy ? py::cast(*c.energy) : py::none());
          }
          rows.append(py::make_tuple(t.layout.row_values[r], values));
        }
        return py::make_tuple(t.layout.columns, rows);
      },
      py::arg("id"), "(columns, [(row_key, [value or None, ...]), ...])");

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("dimension", &OracleResult::dimension)
      .def_readonly("eigenvalues", &OracleResult::eigenvalues)
      .def_readonly("truncation_estimate", &OracleResult::truncation_estimate);
  m.def("diagonalize", &diagonalize, py::arg("lam"), py::arg("dimension"),
        py::arg("count"));
  m.def("oracle_energy", &oracle_energy, py::arg("lam"), py::arg("n"),
        py::arg("tolerance") = 1e-10);
}
