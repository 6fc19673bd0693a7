// Python bindings for the core operations: fields, geometry, projection,
// algebra, dynamics and the fibration checks.

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ymh/dynamics.hpp"
#include "ymh/hopf.hpp"
#include "ymh/runner.hpp"
#include "ymh/sampling.hpp"
#include "ymh/verify.hpp"

namespace py = pybind11;
using namespace ymh;

namespace {

std::vector<long> real_shape(const TorusGrid& g) {
  return std::vector<long>(static_cast<size_t>(g.dim), g.n);
}

py::array_t<double> to_numpy(const SpectralScalarField& f) {
  auto samples = f.to_real();
  py::array_t<double> out(real_shape(f.grid()));
  std::copy(samples.begin(), samples.end(), out.mutable_data());
  return out;
}

SpectralScalarField from_numpy(const TorusGrid& g, const py::array_t<double>& arr) {
  auto buf = arr.request();
  if (buf.ndim != g.dim) throw ArgumentError("array rank does not match grid dimension");
  for (int i = 0; i < g.dim; ++i)
    if (buf.shape[static_cast<size_t>(i)] != g.n)
      throw ArgumentError("array shape does not match grid resolution");
  auto contiguous = py::array_t<double, py::array::c_style | py::array::forcecast>::ensure(arr);
  std::vector<double> samples(contiguous.data(), contiguous.data() + g.points());
  return SpectralScalarField::from_real(g, samples);
}

VectorField vector_from_numpy(const TorusGrid& g, const std::vector<py::array_t<double>>& comps) {
  if (static_cast<int>(comps.size()) != g.dim)
    throw ArgumentError("component count does not match grid dimension");
  VectorField v(g);
  for (int i = 0; i < g.dim; ++i) v.comp[static_cast<size_t>(i)] = from_numpy(g, comps[static_cast<size_t>(i)]);
  return v;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pseudo-spectral incompressible charged ideal fluids on flat tori";

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::class_<TorusGrid>(m, "TorusGrid")
      .def(py::init<int, int, double>(), py::arg("dim"), py::arg("n"),
           py::arg("length") = 6.283185307179586476925287)
      .def_readonly("dim", &TorusGrid::dim)
      .def_readonly("n", &TorusGrid::n)
      .def_readonly("length", &TorusGrid::length)
      .def("dealias_limit", &TorusGrid::dealias_limit)
      .def("__repr__", [](const TorusGrid& g) {
        std::ostringstream s;
        s << "TorusGrid(dim=" << g.dim << ", n=" << g.n << ", length=" << g.length << ")";
        return s.str();
      });

  py::class_<SpectralScalarField>(m, "Field")
      .def(py::init([](const TorusGrid& g) { return SpectralScalarField(g); }))
      .def_static("constant", &SpectralScalarField::constant)
      .def_static("from_values",
                  [](const TorusGrid& g, const py::array_t<double>& arr) {
                    return from_numpy(g, arr);
                  })
      .def("values", &to_numpy)
      .def("add_cosine", &SpectralScalarField::add_cosine, py::arg("k"), py::arg("amplitude"),
           py::arg("phase") = 0.0)
      .def("mode",
           [](const SpectralScalarField& f, std::array<int, 3> k) { return f.mode(k); })
      .def("mean", &SpectralScalarField::mean)
      .def("grid", &SpectralScalarField::grid)
      .def("__add__", [](const SpectralScalarField& a, const SpectralScalarField& b) { return a + b; })
      .def("__sub__", [](const SpectralScalarField& a, const SpectralScalarField& b) { return a - b; })
      .def("__rmul__", [](const SpectralScalarField& a, double s) { return s * a; });

  m.def("derivative", &derivative, py::arg("field"), py::arg("axis"));
  m.def("dealiased_product", &dealiased_product);
  m.def("integrate", py::overload_cast<const SpectralScalarField&, const SpectralScalarField&>(&integrate));
  m.def("integrate", py::overload_cast<const SpectralScalarField&>(&integrate));
  m.def("max_abs", py::overload_cast<const SpectralScalarField&>(&max_abs));

  py::class_<WeightFunction>(m, "WeightFunction")
      .def_static("constant", &WeightFunction::constant)
      .def_static("from_field", &WeightFunction::from_field)
      .def("is_constant", &WeightFunction::is_constant)
      .def("mean_value", &WeightFunction::mean_value);

  py::class_<ProjectionWorkspace>(m, "ProjectionWorkspace")
      .def(py::init<const TorusGrid&, WeightFunction, double, int>(), py::arg("grid"),
           py::arg("weight"), py::arg("tolerance") = 1e-12, py::arg("max_iterations") = 500);

  m.def("solve_weighted_poisson", &solve_weighted_poisson);
  m.def(
      "weighted_leray_project",
      [](const std::vector<py::array_t<double>>& comps, const ProjectionWorkspace& ws) {
        VectorField v = vector_from_numpy(ws.grid, comps);
        VectorField p = weighted_leray_project(v, ws);
        std::vector<py::array_t<double>> out;
        for (const auto& c : p.comp) out.push_back(to_numpy(c));
        return out;
      },
      "Project numpy velocity components onto weighted-divergence-free fields");

  py::class_<LieAlgebraSpec>(m, "LieAlgebraSpec")
      .def_static("abelian", &LieAlgebraSpec::abelian)
      .def_static("su2", &LieAlgebraSpec::su2)
      .def(py::init<int, std::vector<double>, std::vector<double>, bool>(), py::arg("dim"),
           py::arg("structure_constants"), py::arg("inner_product"),
           py::arg("require_ad_invariant") = false)
      .def("dim", &LieAlgebraSpec::dim);

  py::class_<GaugeField>(m, "GaugeField")
      .def(py::init<const TorusGrid&, int>())
      .def("component", [](const GaugeField& f, int a) { return f.comp.at(static_cast<size_t>(a)); })
      .def("add_cosine",
           [](GaugeField& f, int lie_index, std::array<int, 3> k, double amp, double phase) {
             f.comp.at(static_cast<size_t>(lie_index)).add_cosine(k, amp, phase);
           });

  py::class_<VectorField>(m, "VectorField")
      .def(py::init<const TorusGrid&>())
      .def("component", [](const VectorField& f, int i) { return f.comp.at(static_cast<size_t>(i)); })
      .def("add_cosine",
           [](VectorField& f, int comp, std::array<int, 3> k, double amp, double phase) {
             f.comp.at(static_cast<size_t>(comp)).add_cosine(k, amp, phase);
           });

  py::class_<GaugeGeometry>(m, "GaugeGeometry")
      .def_static("trivial", &GaugeGeometry::trivial, py::arg("grid"), py::arg("algebra"),
                  py::arg("weight"), py::arg("solver_tol") = 1e-12,
                  py::arg("solver_max_iter") = 500)
      .def_static("from_potential", &GaugeGeometry::from_potential, py::arg("grid"),
                  py::arg("algebra"), py::arg("potential"), py::arg("weight"),
                  py::arg("solver_tol") = 1e-12, py::arg("solver_max_iter") = 500)
      .def_static("abelian_from_magnetic_field", &GaugeGeometry::abelian_from_magnetic_field,
                  py::arg("grid"), py::arg("b"), py::arg("weight"),
                  py::arg("solver_tol") = 1e-12, py::arg("solver_max_iter") = 500);

  py::class_<GaugePotential>(m, "GaugePotential")
      .def(py::init<const TorusGrid&, int>())
      .def("add_cosine", [](GaugePotential& a, int axis, int lie_index, std::array<int, 3> k,
                            double amp, double phase) {
        a.axis.at(static_cast<size_t>(axis)).comp.at(static_cast<size_t>(lie_index)).add_cosine(k, amp, phase);
      });

  py::class_<AlgebraElement>(m, "AlgebraElement")
      .def(py::init<VectorField, GaugeField>())
      .def_readonly("velocity", &AlgebraElement::velocity)
      .def_readonly("charge", &AlgebraElement::charge);

  py::class_<DualElement>(m, "DualElement")
      .def(py::init<VectorField, GaugeField>())
      .def_readonly("momentum", &DualElement::momentum)
      .def_readonly("charge_density", &DualElement::charge_density);

  m.def("make_algebra_element", &make_algebra_element);
  m.def("make_dual_element", &make_dual_element);
  m.def("bracket", &bracket);
  m.def("flat", &flat);
  m.def("sharp", &sharp);
  m.def("pairing", &pairing);
  m.def("coadjoint", &coadjoint);

  py::class_<FluidState>(m, "FluidState")
      .def(py::init([](double t, const AlgebraElement& u) {
             FluidState s;
             s.t = t;
             s.u = u;
             return s;
           }),
           py::arg("t"), py::arg("u"))
      .def_readonly("t", &FluidState::t)
      .def_readonly("u", &FluidState::u);

  py::class_<DiagnosticsRecord>(m, "DiagnosticsRecord")
      .def_readonly("t", &DiagnosticsRecord::t)
      .def_readonly("kinetic_energy", &DiagnosticsRecord::kinetic_energy)
      .def_readonly("charge_energy", &DiagnosticsRecord::charge_energy)
      .def_readonly("total_energy", &DiagnosticsRecord::total_energy)
      .def_readonly("divergence_inf", &DiagnosticsRecord::divergence_inf)
      .def_readonly("enstrophy", &DiagnosticsRecord::enstrophy)
      .def_readonly("charge_l2", &DiagnosticsRecord::charge_l2)
      .def_readonly("charge_l4", &DiagnosticsRecord::charge_l4);

  m.def("velocity_rhs", &velocity_rhs);
  m.def("charge_rhs", &charge_rhs);
  m.def("step_rk4", &step_rk4);
  m.def("compute_diagnostics", &compute_diagnostics);

  m.def("hopf_orbit_volume", &hopf_orbit_volume, py::arg("quadrature_order") = 32);
  m.def("hopf_orbit_volume_at", &hopf_orbit_volume_at, py::arg("base_direction"),
        py::arg("quadrature_order") = 32);
  m.def(
      "hopf_integration_check",
      [](const std::vector<double>& z_poly, long samples, uint64_t seed) {
        HopfSampler s;
        s.samples = samples;
        s.seed = seed;
        auto r = hopf_integration_check(SphericalFunction::from_z_polynomial(z_poly), s);
        return py::make_tuple(r.lhs, r.rhs, r.standard_error);
      },
      py::arg("z_polynomial"), py::arg("samples") = 1'000'000, py::arg("seed") = 0,
      "Returns (lhs, rhs, standard_error) for a polynomial in z");

  py::class_<SimConfig>(m, "SimConfig")
      .def_readwrite("steps", &SimConfig::steps)
      .def_readwrite("dt", &SimConfig::dt)
      .def_readwrite("output_dir", &SimConfig::output_dir)
      .def("__eq__", [](const SimConfig& a, const SimConfig& b) { return a == b; });
  m.def("parse_config_file", &parse_config_file);
  m.def("parse_config_text", &parse_config_text);
  m.def("emit_config", &emit_config);
  m.def("config_template", &config_template);
  m.def("build_geometry", &build_geometry);
  m.def("build_initial_state", &build_initial_state);
  m.def(
      "run_simulation",
      [](const SimConfig& c, const std::string& output_dir) {
        SimConfig cfg = c;
        if (!output_dir.empty()) cfg.output_dir = output_dir;
        RunSinks sinks;
        std::ofstream csv;
        if (!output_dir.empty()) {
          std::filesystem::create_directories(cfg.output_dir);
          csv.open(std::filesystem::path(cfg.output_dir) / "diagnostics.csv", std::ios::binary);
          sinks.diagnostics = &csv;
        }
        RunResult r = run_simulation(cfg, sinks);
        return py::make_tuple(r.steps_completed, r.final_state);
      },
      py::arg("config"), py::arg("output_dir") = "");

  m.attr("__version__") = "0.1.0";
}
