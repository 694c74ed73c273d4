#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gup1d/analytic.hpp"
#include "gup1d/oracle.hpp"
#include "gup1d/scattering.hpp"
#include "gup1d/specfun.hpp"
#include "gup1d/stark.hpp"
#include "gup1d/verify.hpp"

namespace py = pybind11;
using namespace gup1d;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deformed one-dimensional quantum systems: closed forms and oracles";

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init([](double mass, double hbar, double lambda, double slope,
                       double strength, double kappa, double field) {
             PhysicalParams p;
             p.mass = mass;
             p.hbar = hbar;
             p.lambda = lambda;
             p.slope = slope;
             p.strength = strength;
             p.kappa = kappa;
             p.field = field;
             return p;
           }),
           py::arg("mass") = 1.0, py::arg("hbar") = 1.0, py::arg("lambda_") = 0.0,
           py::arg("slope") = 1.0, py::arg("strength") = 1.0, py::arg("kappa") = 1.0,
           py::arg("field") = 0.01)
      .def_readwrite("mass", &PhysicalParams::mass)
      .def_readwrite("hbar", &PhysicalParams::hbar)
      .def_readwrite("lambda_", &PhysicalParams::lambda)
      .def_readwrite("slope", &PhysicalParams::slope)
      .def_readwrite("strength", &PhysicalParams::strength)
      .def_readwrite("kappa", &PhysicalParams::kappa)
      .def_readwrite("field", &PhysicalParams::field)
      .def("gauge_shift", &PhysicalParams::gauge_shift);

  // specfun
  m.def("airy_ai", &specfun::airy_ai, py::arg("x"));
  m.def("airy_ai_prime", &specfun::airy_ai_prime, py::arg("x"));
  m.def("airy_bi", &specfun::airy_bi, py::arg("x"));
  m.def("airy_bi_prime", &specfun::airy_bi_prime, py::arg("x"));
  m.def("airy_zero", &specfun::airy_zero, py::arg("n"));
  m.def(
      "airy_zeros",
      [](int count) { return specfun::airy_zero_table(count).zeros; },
      py::arg("count"));
  m.def("gamma_fn", &specfun::gamma_fn, py::arg("x"));
  m.def("kummer_1f1", &specfun::kummer_1f1, py::arg("a"), py::arg("b"), py::arg("z"));
  m.def("laguerre", &specfun::laguerre, py::arg("n"), py::arg("mu"), py::arg("z"));
  m.def("laguerre_weighted_integral", &specfun::laguerre_weighted_integral,
        py::arg("alpha"), py::arg("n"), py::arg("beta"));

  // analytic
  py::enum_<analytic::CoulombBranch>(m, "CoulombBranch")
      .value("A", analytic::CoulombBranch::A)
      .value("B", analytic::CoulombBranch::B);
  m.def("linear_energy", &analytic::linear_energy, py::arg("n"), py::arg("params"));
  m.def("linear_wavefunction", &analytic::linear_wavefunction, py::arg("n"),
        py::arg("x"), py::arg("params"));
  m.def("delta_well_energy", &analytic::delta_well_energy, py::arg("params"));
  m.def("delta_well_wavefunction", &analytic::delta_well_wavefunction, py::arg("x"),
        py::arg("params"));
  m.def("coulomb_energy", &analytic::coulomb_energy, py::arg("n"), py::arg("params"));
  m.def("coulomb_wavefunction", &analytic::coulomb_wavefunction, py::arg("n"),
        py::arg("branch"), py::arg("x"), py::arg("params"),
        py::arg("normalized") = false);
  m.def("coulomb_norm_squared", &analytic::coulomb_norm_squared, py::arg("n"),
        py::arg("params"));

  // scattering
  py::class_<scattering::ScatteringResult>(m, "ScatteringResult")
      .def_readonly("S", &scattering::ScatteringResult::S)
      .def_readonly("R", &scattering::ScatteringResult::R)
      .def_readonly("T", &scattering::ScatteringResult::T)
      .def_readonly("Rc", &scattering::ScatteringResult::Rc)
      .def_readonly("k_plus", &scattering::ScatteringResult::k_plus)
      .def_readonly("k_minus", &scattering::ScatteringResult::k_minus)
      .def_readonly("excess_exact", &scattering::ScatteringResult::excess_exact)
      .def_readonly("excess_leading", &scattering::ScatteringResult::excess_leading);
  m.def("barrier_amplitudes", &scattering::barrier_amplitudes, py::arg("energy"),
        py::arg("params"));
  m.def(
      "excess_tunneling_current",
      [](double energy, const PhysicalParams& p) {
        const auto ex = scattering::excess_tunneling_current(energy, p);
        return py::make_tuple(ex.exact, ex.leading);
      },
      py::arg("energy"), py::arg("params"));
  m.def("barrier_wavefunction", &scattering::barrier_wavefunction, py::arg("x"),
        py::arg("energy"), py::arg("params"));

  // stark
  py::enum_<stark::MatrixElementMethod>(m, "MatrixElementMethod")
      .value("closed_form", stark::MatrixElementMethod::closed_form)
      .value("quadrature", stark::MatrixElementMethod::quadrature);
  py::class_<stark::StarkReport>(m, "StarkReport")
      .def_readonly("n", &stark::StarkReport::n)
      .def_readonly("h11", &stark::StarkReport::h11)
      .def_readonly("h22", &stark::StarkReport::h22)
      .def_readonly("h12", &stark::StarkReport::h12)
      .def_readonly("h21", &stark::StarkReport::h21)
      .def_readonly("h12_quadrature", &stark::StarkReport::h12_quadrature)
      .def_readonly("e1_first", &stark::StarkReport::e1_first)
      .def_readonly("e2_first", &stark::StarkReport::e2_first)
      .def_readonly("e1_second", &stark::StarkReport::e1_second)
      .def_readonly("e2_second", &stark::StarkReport::e2_second)
      .def_readonly("total_plus", &stark::StarkReport::total_plus)
      .def_readonly("total_minus", &stark::StarkReport::total_minus)
      .def_readonly("norm_squared", &stark::StarkReport::norm_squared)
      .def_readonly("h12_normalized", &stark::StarkReport::h12_normalized)
      .def_readonly("second_order_is_rotated_first_order",
                    &stark::StarkReport::second_order_is_rotated_first_order);
  m.def("stark_matrix_element", &stark::stark_matrix_element, py::arg("n"),
        py::arg("params"), py::arg("method") = stark::MatrixElementMethod::closed_form);
  m.def(
      "stark_first_order",
      [](int n, const PhysicalParams& p) {
        const auto s = stark::stark_first_order(n, p);
        return py::make_tuple(s.e_plus, s.e_minus);
      },
      py::arg("n"), py::arg("params"));
  m.def(
      "stark_second_order",
      [](int n, const PhysicalParams& p) {
        const auto s = stark::stark_second_order(n, p);
        return py::make_tuple(s.e_plus, s.e_minus);
      },
      py::arg("n"), py::arg("params"));
  m.def("stark_split_wavefunction", &stark::stark_split_wavefunction, py::arg("n"),
        py::arg("which"), py::arg("x"), py::arg("params"));
  m.def(
      "stark_total_energies",
      [](int n, const PhysicalParams& p) {
        const auto s = stark::stark_total_energies(n, p);
        return py::make_tuple(s.e_plus, s.e_minus);
      },
      py::arg("n"), py::arg("params"));
  m.def("stark_report", &stark::stark_report, py::arg("n"), py::arg("params"));

  // oracle
  py::class_<oracle::Grid>(m, "Grid")
      .def(py::init([](double x_min, double x_max, int n_points) {
             oracle::Grid g{x_min, x_max, n_points};
             g.require_valid();
             return g;
           }),
           py::arg("x_min"), py::arg("x_max"), py::arg("n_points"))
      .def_readonly("x_min", &oracle::Grid::x_min)
      .def_readonly("x_max", &oracle::Grid::x_max)
      .def_readonly("n_points", &oracle::Grid::n_points)
      .def("spacing", &oracle::Grid::spacing);
  py::class_<oracle::GridHamiltonian>(m, "GridHamiltonian")
      .def("dimension", &oracle::GridHamiltonian::dimension)
      .def("hermiticity_residual", &oracle::GridHamiltonian::hermiticity_residual)
      .def("node", &oracle::GridHamiltonian::node, py::arg("i"));
  py::class_<oracle::EigenMode>(m, "EigenMode")
      .def_readonly("energy", &oracle::EigenMode::energy)
      .def_readonly("amplitudes", &oracle::EigenMode::amplitudes);
  m.def("build_hamiltonian", &oracle::build_hamiltonian, py::arg("potential"),
        py::arg("params"), py::arg("grid"));
  m.def("build_delta_well_hamiltonian", &oracle::build_delta_well_hamiltonian,
        py::arg("params"), py::arg("grid"));
  m.def("eigen_lowest", &oracle::eigen_lowest, py::arg("hamiltonian"), py::arg("k"));
  m.def("eigenvalues_lowest", &oracle::eigenvalues_lowest, py::arg("hamiltonian"),
        py::arg("k"));
  m.def(
      "scattering_transfer",
      [](double energy, const PhysicalParams& p, double reg_width) {
        const auto t = oracle::scattering_transfer(energy, p, reg_width);
        return py::make_tuple(t.T, t.Rc);
      },
      py::arg("energy"), py::arg("params"), py::arg("reg_width") = 1e-3);
  m.def(
      "adaptive_quadrature",
      [](const std::function<double(double)>& f, double a, double b, double tol,
         double tail_scale, double abs_tol) {
        const auto r = oracle::adaptive_quadrature(f, a, b, tol, tail_scale, abs_tol);
        return py::make_tuple(r.value, r.error);
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10,
      py::arg("tail_scale") = 1.0, py::arg("abs_tol") = 0.0);
  m.def("ode_residual", &oracle::ode_residual, py::arg("psi"), py::arg("energy"),
        py::arg("potential"), py::arg("params"), py::arg("points"),
        py::arg("fd_step") = 0.02);
  m.def("coulomb_halfline_energies", &oracle::coulomb_halfline_energies,
        py::arg("params"), py::arg("n_max"), py::arg("softening"), py::arg("n_points"),
        py::arg("x_max"));

  // verify
  py::class_<verify::CheckResult>(m, "CheckResult")
      .def_readonly("name", &verify::CheckResult::name)
      .def_readonly("measured", &verify::CheckResult::measured)
      .def_readonly("tolerance", &verify::CheckResult::tolerance)
      .def_readonly("passed", &verify::CheckResult::pass)
      .def("__repr__", [](const verify::CheckResult& c) {
        return "<CheckResult " + c.name + (c.pass ? " pass>" : " FAIL>");
      });
  m.def("verify_run_all", &verify::run_all, py::arg("filter") = std::string(),
        py::arg("tol_scale") = 1.0);
}
