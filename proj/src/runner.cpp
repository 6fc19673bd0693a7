#include "ymh/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <ostream>

#include "ymh/snapshot.hpp"

namespace ymh {
namespace {

LieAlgebraSpec build_algebra(const SimConfig& c) {
  if (c.h_matrix.empty())
    return c.algebra == AlgebraKind::Su2 ? LieAlgebraSpec::su2() : LieAlgebraSpec::abelian();
  if (c.algebra == AlgebraKind::Su2) {
    LieAlgebraSpec base = LieAlgebraSpec::su2();
    std::vector<double> sc(27);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int e = 0; e < 3; ++e) sc[(a * 3 + b) * 3 + e] = base.c(a, b, e);
    // A custom metric is accepted without the Ad-invariance requirement.
    return LieAlgebraSpec(3, std::move(sc), c.h_matrix, false);
  }
  return LieAlgebraSpec(1, std::vector<double>{0.0}, c.h_matrix, false);
}

WeightFunction build_weight(const SimConfig& c, const TorusGrid& grid) {
  if (c.weight_modes.empty()) return WeightFunction::constant(grid, c.weight_constant);
  SpectralScalarField v = SpectralScalarField::constant(grid, c.weight_constant);
  for (const auto& mo : c.weight_modes) v.add_cosine(mo.k, mo.amplitude, mo.phase);
  return WeightFunction::from_field(std::move(v));
}

std::string snapshot_path(const std::string& dir, long step) {
  char name[40];
  std::snprintf(name, sizeof name, "snapshot_%06ld.ymh", step);
  return (std::filesystem::path(dir) / name).string();
}

Snapshot state_snapshot(const FluidState& s, const GaugeGeometry& geom) {
  Snapshot snap;
  snap.grid = geom.grid();
  for (int i = 0; i < geom.grid().dim; ++i)
    snap.fields.emplace_back("X" + std::to_string(i), s.u.velocity.comp[i].to_real());
  for (int a = 0; a < geom.algebra().dim(); ++a)
    snap.fields.emplace_back("f" + std::to_string(a), s.u.charge.comp[a].to_real());
  return snap;
}

} // namespace

GaugeGeometry build_geometry(const SimConfig& c) {
  validate_config(c);
  TorusGrid grid(c.dim, c.resolution, c.length);
  LieAlgebraSpec alg = build_algebra(c);
  WeightFunction weight = build_weight(c, grid);

  if (!c.magnetic_modes.empty()) {
    VectorField b(grid);
    for (const auto& mo : c.magnetic_modes)
      b.comp[static_cast<size_t>(mo.component)].add_cosine(mo.k, mo.amplitude, mo.phase);
    return GaugeGeometry::abelian_from_magnetic_field(grid, b, std::move(weight),
                                                      c.solver_tolerance,
                                                      c.solver_max_iterations);
  }
  if (!c.potential_modes.empty()) {
    GaugePotential a(grid, alg.dim());
    for (const auto& mo : c.potential_modes)
      a.axis[static_cast<size_t>(mo.axis)].comp[static_cast<size_t>(mo.lie_index)].add_cosine(
          mo.k, mo.amplitude, mo.phase);
    return GaugeGeometry::from_potential(grid, std::move(alg), std::move(a), std::move(weight),
                                         c.solver_tolerance, c.solver_max_iterations);
  }
  return GaugeGeometry::trivial(grid, std::move(alg), std::move(weight), c.solver_tolerance,
                                c.solver_max_iterations);
}

FluidState build_initial_state(const SimConfig& c, const GaugeGeometry& geom) {
  const TorusGrid& grid = geom.grid();
  VectorField x(grid);
  for (const auto& mo : c.velocity_modes)
    x.comp[static_cast<size_t>(mo.component)].add_cosine(mo.k, mo.amplitude, mo.phase);
  GaugeField f(grid, geom.algebra().dim());
  for (const auto& mo : c.charge_modes)
    f.comp[static_cast<size_t>(mo.lie_index)].add_cosine(mo.k, mo.amplitude, mo.phase);
  FluidState s;
  s.t = 0.0;
  s.u = make_algebra_element(geom, std::move(x), std::move(f));
  return s;
}

std::string diagnostics_csv_header() {
  return "t,E_kin,E_charge,E_total,div_inf,enstrophy,charge_L2,charge_L4,wall_ms";
}

std::string diagnostics_csv_row(const DiagnosticsRecord& r) {
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", r.t,
                r.kinetic_energy, r.charge_energy, r.total_energy, r.divergence_inf,
                r.enstrophy, r.charge_l2, r.charge_l4, r.wall_ms);
  return buf;
}

RunResult run_simulation(const SimConfig& c, const RunSinks& sinks) {
  GaugeGeometry geom = build_geometry(c);
  FluidState state = build_initial_state(c, geom);

  if (!sinks.snapshot_dir.empty()) std::filesystem::create_directories(sinks.snapshot_dir);

  auto emit_diag = [&](const FluidState& s, double wall_ms) {
    DiagnosticsRecord rec = compute_diagnostics(s, geom);
    rec.wall_ms = wall_ms;
    if (sinks.diagnostics) {
      (*sinks.diagnostics) << diagnostics_csv_row(rec) << "\n";
      sinks.diagnostics->flush();
    }
    if (sinks.observer) sinks.observer(s, rec);
    return rec;
  };
  auto emit_snapshot = [&](const FluidState& s, long step) {
    if (sinks.snapshot_dir.empty()) return;
    write_snapshot(snapshot_path(sinks.snapshot_dir, step), state_snapshot(s, geom));
  };

  if (sinks.diagnostics) {
    (*sinks.diagnostics) << diagnostics_csv_header() << "\n";
    sinks.diagnostics->flush();
  }
  emit_diag(state, 0.0);
  if (c.snap_every > 0) emit_snapshot(state, 0);

  if (sinks.warnings && cfl_number(state, c.dt) > 0.5)
    (*sinks.warnings) << "YMH-WARN: advective CFL number "
                      << cfl_number(state, c.dt) << " exceeds 0.5\n";

  RunResult result;
  for (long step = 1; step <= c.steps; ++step) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      state = step_rk4(state, c.dt, geom);
    } catch (const SolverError&) {
      // Flush the last valid state before propagating.
      emit_snapshot(state, step - 1);
      result.final_state = state;
      result.steps_completed = step - 1;
      result.aborted = true;
      throw;
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (!std::isfinite(state.u.velocity.comp[0].mean()) ||
        !std::isfinite(l2_integral(state.u.velocity))) {
      emit_snapshot(state, step);
      result.final_state = state;
      result.steps_completed = step;
      result.aborted = true;
      result.abort_reason = "state became non-finite at step " + std::to_string(step);
      throw SolverError(result.abort_reason, std::numeric_limits<double>::quiet_NaN());
    }

    if (step % c.diag_every == 0 || step == c.steps) {
      emit_diag(state, wall_ms);
      if (sinks.warnings && cfl_number(state, c.dt) > 0.5)
        (*sinks.warnings) << "YMH-WARN: advective CFL number " << cfl_number(state, c.dt)
                          << " exceeds 0.5\n";
    }
    if (c.snap_every > 0 && step % c.snap_every == 0) emit_snapshot(state, step);
  }

  result.final_state = state;
  result.steps_completed = c.steps;
  return result;
}

} // namespace ymh
