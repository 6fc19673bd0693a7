#ifndef YMH_DYNAMICS_HPP
#define YMH_DYNAMICS_HPP

#include <utility>

#include "ymh/algebra_element.hpp"

namespace ymh {

/// Primal state (X, f) at time t; the dual pair is recomputed via flat
/// whenever needed.
struct FluidState {
  double t = 0.0;
  AlgebraElement u;
};

/// Conserved-quantity record emitted along a run. Column order of the CSV
/// schema: t, E_kin, E_charge, E_total, div_inf, enstrophy, charge_L2,
/// charge_L4, wall_ms.
struct DiagnosticsRecord {
  double t = 0.0;
  double kinetic_energy = 0.0;
  double charge_energy = 0.0;
  double total_energy = 0.0;
  double divergence_inf = 0.0;
  double enstrophy = 0.0;  // 2D only; 0 in 3D
  double charge_l2 = 0.0;
  double charge_l4 = 0.0;
  double wall_ms = 0.0;
};

/// dX/dt = P(-grad_X X - (xi,Df)~ + (xi,i_X Omega)~), with the advection
/// evaluated in rotational form (the difference is an exact gradient
/// removed by the projection P).
VectorField velocity_rhs(const FluidState& s, const GaugeGeometry& geom);

/// df/dt through the inertia operator: sharp of
/// d(xi)/dt = -ad*(f)xi - D_X xi.
GaugeField charge_rhs(const FluidState& s, const GaugeGeometry& geom);

/// Both right-hand sides from one shared pointwise evaluation.
std::pair<VectorField, GaugeField> euler_rhs(const FluidState& s, const GaugeGeometry& geom);

/// Classical RK4 step on (X, f); the final velocity is re-projected.
FluidState step_rk4(const FluidState& s, double dt, const GaugeGeometry& geom);

/// Advective CFL number max|X| dt n / L; callers treat > 0.5 as advisory.
double cfl_number(const FluidState& s, double dt);

/// Flat-curvature specialization: with Omega = 0 the velocity equation
/// decouples from the charge. Returns (pure-Euler velocity RHS, charge
/// transport RHS); throws if the curvature does not vanish.
std::pair<VectorField, GaugeField> passive_transport_rhs(const FluidState& s,
                                                         const GaugeGeometry& geom);

/// Independently coded abelian route: P(-(X.grad)X + f X x B) in advective
/// form with an explicit cross product. Cross-checks the general RHS.
VectorField superconductivity_velocity_rhs(const FluidState& s, const VectorField& b,
                                           const ProjectionWorkspace& ws);

/// Independently coded abelian charge equation df/dt = -X(f).
GaugeField superconductivity_charge_rhs(const FluidState& s, const ProjectionWorkspace& ws);

/// Diagnostics of a state; wall_ms is left 0 for the caller to fill.
DiagnosticsRecord compute_diagnostics(const FluidState& s, const GaugeGeometry& geom);

/// sup |ad*(f) flat(f)|: identically zero for an Ad-invariant constant
/// metric, tracked as a per-step consistency check.
double charge_coadjoint_defect(const FluidState& s, const GaugeGeometry& geom);

} // namespace ymh

#endif
