#ifndef YMH_RUNNER_HPP
#define YMH_RUNNER_HPP

#include <functional>
#include <iosfwd>
#include <string>

#include "ymh/config.hpp"
#include "ymh/dynamics.hpp"

namespace ymh {

/// Output hooks of a simulation run. Diagnostics stream receives the CSV
/// (header plus one flushed row per record); snapshots are written under
/// snapshot_dir when non-empty; the observer sees every accepted step.
struct RunSinks {
  std::ostream* diagnostics = nullptr;
  std::ostream* warnings = nullptr;
  std::string snapshot_dir;
  std::function<void(const FluidState&, const DiagnosticsRecord&)> observer;
};

struct RunResult {
  FluidState final_state;
  long steps_completed = 0;
  bool aborted = false;
  std::string abort_reason;
};

GaugeGeometry build_geometry(const SimConfig& c);
FluidState build_initial_state(const SimConfig& c, const GaugeGeometry& geom);

/// Integrates the configured run, emitting diagnostics every diag_every
/// steps and snapshots every snap_every steps (step 0 included). Solver
/// failures flush the last valid state and rethrow.
RunResult run_simulation(const SimConfig& c, const RunSinks& sinks);

/// CSV header: t,E_kin,E_charge,E_total,div_inf,enstrophy,charge_L2,charge_L4,wall_ms
std::string diagnostics_csv_header();
std::string diagnostics_csv_row(const DiagnosticsRecord& rec);

} // namespace ymh

#endif
