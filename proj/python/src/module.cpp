#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "affineqm/analytic.hpp"
#include "affineqm/cli.hpp"
#include "affineqm/eigensolve.hpp"
#include "affineqm/specfun.hpp"
#include "affineqm/verify.hpp"

namespace py = pybind11;
using namespace affineqm;

namespace {

SpikedPotential make_potential(const std::string& model, double b, const PhysicalParams& p) {
  const auto kind = cli::parse_model(model);
  if (kind == cli::ModelKind::Free) return SpikedPotential::free_particle();
  if (kind == cli::ModelKind::HalfHO) return SpikedPotential::half_oscillator(p);
  return SpikedPotential::shifted_oscillator(p, b);
}

py::dict spectrum(const std::string& model, double b, double xmax, int npoints, int count,
                  const PhysicalParams& params, bool vectors) {
  params.validate();
  const auto pot = make_potential(model, b, params);
  const auto grid = eigensolve::grid_for(pot, xmax, npoints);
  const auto op = eigensolve::build_hamiltonian(pot, grid);
  eigensolve::SpectrumResult res;
  {
    py::gil_scoped_release release;
    res = eigensolve::solve_spectrum(op, count, vectors);
  }
  std::vector<double> energies;
  for (double e : res.eigenvalues) energies.push_back(params.to_energy(e));
  py::dict out;
  out["eps"] = res.eigenvalues;
  out["energies"] = energies;
  out["x"] = grid.nodes();
  out["h"] = res.h;
  if (vectors) {
    std::vector<std::vector<double>> vs;
    for (const auto& v : res.eigenvectors) vs.push_back(v.values);
    out["vectors"] = vs;
  }
  return out;
}

py::tuple run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "affineqm");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, log;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, log);
  return py::make_tuple(code, out.str(), log.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Affine quantization on the half-line: closed forms and a finite-difference solver.";
  m.attr("__version__") = AFFINEQM_VERSION;

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init([](double mass, double omega, double hbar) {
             return PhysicalParams{mass, omega, hbar};
           }),
           py::arg("mass") = 1.0, py::arg("omega") = 1.0, py::arg("hbar") = 1.0)
      .def_readwrite("mass", &PhysicalParams::mass)
      .def_readwrite("omega", &PhysicalParams::omega)
      .def_readwrite("hbar", &PhysicalParams::hbar)
      .def_property_readonly("lambda_", &PhysicalParams::lambda)
      .def("to_energy", &PhysicalParams::to_energy)
      .def("to_dimensionless", &PhysicalParams::to_dimensionless);

  // specfun
  m.def("gamma", &specfun::gamma_fn, py::arg("z"));
  m.def("pochhammer", &specfun::pochhammer, py::arg("g"), py::arg("n"));
  m.def("bessel_j1", py::vectorize(&specfun::bessel_j1), py::arg("x"));
  m.def("bessel_j1_zero", &specfun::bessel_j1_zero, py::arg("j"));
  m.def(
      "kummer_1f1",
      [](int n, double c, double y) {
        return specfun::kummer_1f1(specfun::KummerParams::polynomial(n, c), y);
      },
      py::arg("n"), py::arg("c"), py::arg("y"), "1F1(-n; c; y)");

  // analytic
  py::enum_<analytic::Branch>(m, "Branch")
      .value("FIRST", analytic::Branch::First)
      .value("SECOND", analytic::Branch::Second);
  m.def("landau_integral", &analytic::landau_integral, py::arg("n"), py::arg("m"),
        py::arg("gamma"), py::arg("rate"));
  m.def("normalization_constant", &analytic::normalization_constant, py::arg("n"),
        py::arg("branch") = analytic::Branch::First, py::arg("params") = PhysicalParams{});
  m.def(
      "ho_eigenfunction",
      [](int n, const std::vector<double>& x, analytic::Branch branch,
         const PhysicalParams& params) {
        std::vector<double> out;
        out.reserve(x.size());
        for (double xi : x) out.push_back(analytic::ho_eigenfunction(n, branch, params, xi));
        return out;
      },
      py::arg("n"), py::arg("x"), py::arg("branch") = analytic::Branch::First,
      py::arg("params") = PhysicalParams{});
  m.def("ho_energy", &analytic::ho_energy, py::arg("n"), py::arg("params") = PhysicalParams{});
  m.def("free_energy", &analytic::free_energy, py::arg("k"), py::arg("params") = PhysicalParams{});
  m.def("free_eigenfunction", py::vectorize(&analytic::free_eigenfunction), py::arg("k"),
        py::arg("x"));

  // eigensolve
  m.def("spectrum", &spectrum, py::arg("model") = "half-ho", py::arg("b") = 0.0,
        py::arg("xmax") = 12.0, py::arg("npoints") = 8000, py::arg("count") = 8,
        py::arg("params") = PhysicalParams{}, py::arg("vectors") = false,
        "Lowest eigenvalues (dimensionless 'eps' and physical 'energies').");
  m.def(
      "sweep_b",
      [](const std::vector<double>& bvalues, int count, const PhysicalParams& params,
         double xmax, int npoints) {
        eigensolve::SweepOptions opts;
        opts.xmax = xmax;
        opts.npoints = npoints;
        std::vector<eigensolve::SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = eigensolve::sweep_b(bvalues, count, params, opts);
        }
        std::vector<std::pair<double, std::vector<double>>> out;
        for (const auto& r : rows) {
          std::vector<double> e;
          for (double v : r.eigenvalues) e.push_back(params.to_energy(v));
          out.emplace_back(r.b, e);
        }
        return out;
      },
      py::arg("bvalues"), py::arg("count") = 3, py::arg("params") = PhysicalParams{},
      py::arg("xmax") = 12.0, py::arg("npoints") = 8000,
      "(b, energies) for each b of the shifted oscillator.");

  // verify
  m.def(
      "closure_errors",
      [](const std::vector<double>& kmax) {
        return verify::closure_check(verify::closure_bump, "bump", kmax).error_curve;
      },
      py::arg("kmax") = std::vector<double>{10.0, 20.0, 30.0, 40.0});
  m.def(
      "orthonormality_matrix",
      [](int nmax, const PhysicalParams& params) {
        return verify::orthonormality_matrix(nmax, params);
      },
      py::arg("nmax"), py::arg("params") = PhysicalParams{});
  m.def(
      "commutator_orders",
      [](const std::vector<int>& npoints) {
        const auto s = verify::commutator_convergence(npoints, verify::kCommutatorXmax, {});
        return py::make_tuple(s.residuals, s.orders);
      },
      py::arg("npoints") = std::vector<int>{1000, 2000, 4000});
  m.def("count_sign_changes",
        [](const std::vector<double>& v, double tol) { return verify::count_sign_changes(v, tol); },
        py::arg("values"), py::arg("tol") = 1e-10);

  m.def("run_cli", &run_cli, py::arg("args"),
        "Run the command-line tool in-process; returns (exit_code, stdout, log).");
}
