#include "ymh/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace ymh {
namespace {

// Shared pointwise data for one RHS evaluation.
struct RhsData {
  PointwiseContext ctx;
  std::vector<std::vector<double>> vel;       // [i]
  std::vector<std::vector<double>> vort;      // 2D: [0] scalar; 3D: [i]
  std::vector<std::vector<double>> charge;    // f_a
  std::vector<std::vector<double>> dcharge;   // [i*m + a] = d_i f_a
  std::vector<std::vector<double>> dual;      // xi_a = h(a,b) f_b
  std::vector<std::vector<double>> ddual;     // d_i xi_a
  std::vector<std::vector<double>> ax;        // A(X)_a, empty if no potential

  RhsData(const FluidState& s, const GaugeGeometry& geom) : ctx(geom.grid()) {
    const TorusGrid& grid = geom.grid();
    const int d = grid.dim;
    const LieAlgebraSpec& alg = geom.algebra();
    const int m = alg.dim();

    vel.resize(d);
    for (int i = 0; i < d; ++i) vel[i] = ctx.lift(s.u.velocity.comp[i]);

    if (d == 2) {
      vort.resize(1);
      vort[0] = ctx.lift(curl_2d(s.u.velocity));
    } else {
      VectorField w = curl_3d(s.u.velocity);
      vort.resize(3);
      for (int i = 0; i < 3; ++i) vort[i] = ctx.lift(w.comp[i]);
    }

    charge.resize(m);
    for (int a = 0; a < m; ++a) charge[a] = ctx.lift(s.u.charge.comp[a]);
    dcharge.resize(static_cast<size_t>(d) * m);
    for (int i = 0; i < d; ++i)
      for (int a = 0; a < m; ++a)
        dcharge[i * m + a] = ctx.lift_derivative(s.u.charge.comp[a], i);

    // Constant metric: the dual components are pointwise combinations.
    dual.assign(m, std::vector<double>(ctx.points(), 0.0));
    ddual.assign(static_cast<size_t>(d) * m, std::vector<double>(ctx.points(), 0.0));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const double hab = alg.h(a, b);
        if (hab == 0.0) continue;
        for (long s2 = 0; s2 < ctx.points(); ++s2) dual[a][s2] += hab * charge[b][s2];
        for (int i = 0; i < d; ++i)
          for (long s2 = 0; s2 < ctx.points(); ++s2)
            ddual[i * m + a][s2] += hab * dcharge[i * m + b][s2];
      }

    if (!geom.potential_is_zero()) {
      ax.assign(m, std::vector<double>(ctx.points(), 0.0));
      for (int p = 0; p < m; ++p)
        for (int i = 0; i < d; ++i) {
          const auto& apw = geom.potential_samples(i, p);
          for (long s2 = 0; s2 < ctx.points(); ++s2) ax[p][s2] += vel[i][s2] * apw[s2];
        }
    }
  }
};

VectorField assemble_velocity_force(const RhsData& rd, const GaugeGeometry& geom,
                                    bool include_charge_terms) {
  const TorusGrid& grid = geom.grid();
  const int d = grid.dim;
  const LieAlgebraSpec& alg = geom.algebra();
  const int m = alg.dim();
  const long np = rd.ctx.points();

  VectorField force(grid);
  std::vector<double> acc(np);
  for (int i = 0; i < d; ++i) {
    // -(curl X x X)_i: advection minus an exact gradient.
    if (d == 2) {
      const auto& w = rd.vort[0];
      const auto& other = rd.vel[1 - i];
      const double sgn = i == 0 ? 1.0 : -1.0;  // -(w JX): JX = (-X1, X0)
      for (long s = 0; s < np; ++s) acc[s] = sgn * w[s] * other[s];
    } else {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      for (long s = 0; s < np; ++s)
        acc[s] = -(rd.vort[j][s] * rd.vel[k][s] - rd.vort[k][s] * rd.vel[j][s]);
    }

    if (include_charge_terms) {
      // -(xi, Df)~_i
      for (int a = 0; a < m; ++a)
        for (long s = 0; s < np; ++s) acc[s] -= rd.dual[a][s] * rd.dcharge[i * m + a][s];
      if (!rd.ax.empty()) {
        for (int a = 0; a < m; ++a)
          for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
              const double cpq = alg.c(p, q, a);
              if (cpq == 0.0) continue;
              const auto& apw = geom.potential_samples(i, p);
              for (long s = 0; s < np; ++s)
                acc[s] -= rd.dual[a][s] * cpq * apw[s] * rd.charge[q][s];
            }
      }
      // +(xi, i_X Omega)~_i
      if (!geom.curvature_is_zero()) {
        for (int j = 0; j < d; ++j) {
          if (j == i) continue;
          const double sign = j < i ? 1.0 : -1.0;
          const int pair = Curvature::pair_index(std::min(i, j), std::max(i, j));
          for (int a = 0; a < m; ++a) {
            const auto& om = geom.curvature_samples(pair, a);
            for (long s = 0; s < np; ++s) acc[s] += sign * rd.vel[j][s] * rd.dual[a][s] * om[s];
          }
        }
      }
    }
    force.comp[i] = rd.ctx.lower(acc);
  }
  return force;
}

GaugeField assemble_charge_rate(const RhsData& rd, const GaugeGeometry& geom) {
  const TorusGrid& grid = geom.grid();
  const int d = grid.dim;
  const LieAlgebraSpec& alg = geom.algebra();
  const int m = alg.dim();
  const long np = rd.ctx.points();

  // d(xi)/dt_c = C(a,c,b) (f_a + A(X)_a) xi_b - X.grad xi_c, then back
  // through the inverse metric.
  std::vector<std::vector<double>> xidot(m, std::vector<double>(np, 0.0));
  for (int c = 0; c < m; ++c) {
    auto& acc = xidot[c];
    for (int i = 0; i < d; ++i)
      for (long s = 0; s < np; ++s) acc[s] -= rd.vel[i][s] * rd.ddual[i * m + c][s];
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const double cab = alg.c(a, c, b);
        if (cab == 0.0) continue;
        for (long s = 0; s < np; ++s) acc[s] += cab * rd.charge[a][s] * rd.dual[b][s];
        if (!rd.ax.empty())
          for (long s = 0; s < np; ++s) acc[s] += cab * rd.ax[a][s] * rd.dual[b][s];
      }
  }
  GaugeField fdot(grid, m);
  std::vector<double> acc(np);
  for (int a = 0; a < m; ++a) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int b = 0; b < m; ++b) {
      const double hab = alg.h_inv(a, b);
      if (hab == 0.0) continue;
      for (long s = 0; s < np; ++s) acc[s] += hab * xidot[b][s];
    }
    fdot.comp[a] = rd.ctx.lower(acc);
  }
  return fdot;
}

} // namespace

std::pair<VectorField, GaugeField> euler_rhs(const FluidState& s, const GaugeGeometry& geom) {
  RhsData rd(s, geom);
  VectorField force = assemble_velocity_force(rd, geom, true);
  VectorField xdot = weighted_leray_project(force, geom.projection());
  GaugeField fdot = assemble_charge_rate(rd, geom);
  return {std::move(xdot), std::move(fdot)};
}

VectorField velocity_rhs(const FluidState& s, const GaugeGeometry& geom) {
  RhsData rd(s, geom);
  return weighted_leray_project(assemble_velocity_force(rd, geom, true), geom.projection());
}

GaugeField charge_rhs(const FluidState& s, const GaugeGeometry& geom) {
  RhsData rd(s, geom);
  return assemble_charge_rate(rd, geom);
}

FluidState step_rk4(const FluidState& s, double dt, const GaugeGeometry& geom) {
  if (!(dt > 0.0)) throw ArgumentError("dt must be positive");

  auto advance = [&](const AlgebraElement& base, double c, const VectorField& kx,
                     const GaugeField& kf) {
    FluidState out;
    out.t = s.t + c * dt;
    out.u = base;
    out.u.velocity.axpy(c * dt, kx);
    out.u.charge.axpy(c * dt, kf);
    return out;
  };

  auto [k1x, k1f] = euler_rhs(s, geom);
  FluidState s2 = advance(s.u, 0.5, k1x, k1f);
  auto [k2x, k2f] = euler_rhs(s2, geom);
  FluidState s3 = advance(s.u, 0.5, k2x, k2f);
  auto [k3x, k3f] = euler_rhs(s3, geom);
  FluidState s4 = advance(s.u, 1.0, k3x, k3f);
  auto [k4x, k4f] = euler_rhs(s4, geom);

  FluidState out;
  out.t = s.t + dt;
  out.u = s.u;
  const double w = dt / 6.0;
  out.u.velocity.axpy(w, k1x);
  out.u.velocity.axpy(2.0 * w, k2x);
  out.u.velocity.axpy(2.0 * w, k3x);
  out.u.velocity.axpy(w, k4x);
  out.u.charge.axpy(w, k1f);
  out.u.charge.axpy(2.0 * w, k2f);
  out.u.charge.axpy(2.0 * w, k3f);
  out.u.charge.axpy(w, k4f);
  out.u.velocity = weighted_leray_project(out.u.velocity, geom.projection());
  return out;
}

double cfl_number(const FluidState& s, double dt) {
  const TorusGrid& g = s.u.velocity.grid();
  return max_abs(s.u.velocity) * dt * g.n / g.length;
}

std::pair<VectorField, GaugeField> passive_transport_rhs(const FluidState& s,
                                                         const GaugeGeometry& geom) {
  const double scale = std::max(1.0, max_abs(s.u.velocity));
  if (geom.curvature().max_abs_component() > 1e-12 * scale)
    throw ArgumentError("passive transport requires vanishing curvature");
  RhsData rd(s, geom);
  VectorField xdot =
      weighted_leray_project(assemble_velocity_force(rd, geom, false), geom.projection());
  GaugeField fdot = assemble_charge_rate(rd, geom);
  return {std::move(xdot), std::move(fdot)};
}

VectorField superconductivity_velocity_rhs(const FluidState& s, const VectorField& b,
                                           const ProjectionWorkspace& ws) {
  const TorusGrid& grid = ws.grid;
  if (grid.dim != 3) throw ArgumentError("superconductivity route requires a 3D base");
  require_same_grid(grid, s.u.velocity.grid());
  require_same_grid(grid, b.grid());
  if (s.u.charge.lie_dim() != 1) throw ArgumentError("superconductivity route is abelian");

  PointwiseContext ctx(grid);
  std::vector<std::vector<double>> x(3), bb(3);
  std::vector<std::vector<double>> dx(9);
  for (int i = 0; i < 3; ++i) {
    x[i] = ctx.lift(s.u.velocity.comp[i]);
    bb[i] = ctx.lift(b.comp[i]);
    for (int j = 0; j < 3; ++j) dx[i * 3 + j] = ctx.lift_derivative(s.u.velocity.comp[j], i);
  }
  auto f = ctx.lift(s.u.charge.comp[0]);

  VectorField force(grid);
  std::vector<double> acc(ctx.points());
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    for (long p = 0; p < ctx.points(); ++p) {
      double adv = x[0][p] * dx[0 * 3 + i][p] + x[1][p] * dx[1 * 3 + i][p] +
                   x[2][p] * dx[2 * 3 + i][p];
      double cross = x[j][p] * bb[k][p] - x[k][p] * bb[j][p];
      acc[p] = -adv + f[p] * cross;
    }
    force.comp[i] = ctx.lower(acc);
  }
  return weighted_leray_project(force, ws);
}

GaugeField superconductivity_charge_rhs(const FluidState& s, const ProjectionWorkspace& ws) {
  const TorusGrid& grid = ws.grid;
  if (s.u.charge.lie_dim() != 1) throw ArgumentError("superconductivity route is abelian");
  PointwiseContext ctx(grid);
  std::vector<double> acc(ctx.points(), 0.0);
  for (int i = 0; i < grid.dim; ++i) {
    auto xi = ctx.lift(s.u.velocity.comp[i]);
    auto df = ctx.lift_derivative(s.u.charge.comp[0], i);
    for (long p = 0; p < ctx.points(); ++p) acc[p] -= xi[p] * df[p];
  }
  GaugeField out(grid, 1);
  out.comp[0] = ctx.lower(acc);
  return out;
}

DiagnosticsRecord compute_diagnostics(const FluidState& s, const GaugeGeometry& geom) {
  const TorusGrid& grid = geom.grid();
  const LieAlgebraSpec& alg = geom.algebra();
  const int m = alg.dim();

  PointwiseContext ctx(grid);
  std::vector<std::vector<double>> x(grid.dim), f(m);
  for (int i = 0; i < grid.dim; ++i) x[i] = ctx.lift(s.u.velocity.comp[i]);
  for (int a = 0; a < m; ++a) f[a] = ctx.lift(s.u.charge.comp[a]);

  const long np = ctx.points();
  std::vector<double> kin(np, 0.0), phi(np, 0.0);
  for (int i = 0; i < grid.dim; ++i)
    for (long p = 0; p < np; ++p) kin[p] += x[i][p] * x[i][p];
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const double hab = alg.h(a, b);
      if (hab == 0.0) continue;
      for (long p = 0; p < np; ++p) phi[p] += hab * f[a][p] * f[b][p];
    }

  std::vector<double> kin_v = kin, phi_v = phi, phi2_v(np);
  if (geom.weight().is_constant()) {
    const double vb = geom.weight().mean_value();
    for (long p = 0; p < np; ++p) {
      kin_v[p] *= vb;
      phi_v[p] *= vb;
      phi2_v[p] = phi[p] * phi[p] * vb;
    }
  } else {
    const auto& v = geom.weight_samples();
    for (long p = 0; p < np; ++p) {
      kin_v[p] *= v[p];
      phi_v[p] *= v[p];
      phi2_v[p] = phi[p] * phi[p] * v[p];
    }
  }

  DiagnosticsRecord rec;
  rec.t = s.t;
  rec.kinetic_energy = 0.5 * ctx.integral(kin_v);
  rec.charge_energy = 0.5 * ctx.integral(phi_v);
  rec.total_energy = rec.kinetic_energy + rec.charge_energy;
  rec.divergence_inf = incompressibility_defect(s.u.velocity, geom);
  rec.enstrophy = grid.dim == 2 ? 0.5 * l2_integral(curl_2d(s.u.velocity)) : 0.0;
  rec.charge_l2 = ctx.integral(phi_v);
  rec.charge_l4 = ctx.integral(phi2_v);
  return rec;
}

double charge_coadjoint_defect(const FluidState& s, const GaugeGeometry& geom) {
  const LieAlgebraSpec& alg = geom.algebra();
  const int m = alg.dim();
  if (alg.abelian_algebra()) return 0.0;

  PointwiseContext ctx(geom.grid());
  std::vector<std::vector<double>> f(m);
  for (int a = 0; a < m; ++a) f[a] = ctx.lift(s.u.charge.comp[a]);
  const long np = ctx.points();
  std::vector<double> xi(m);
  double defect = 0.0;
  for (long p = 0; p < np; ++p) {
    for (int a = 0; a < m; ++a) {
      xi[a] = 0.0;
      for (int b = 0; b < m; ++b) xi[a] += alg.h(a, b) * f[b][p];
    }
    for (int c = 0; c < m; ++c) {
      double acc = 0.0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          const double cab = alg.c(a, c, b);
          if (cab != 0.0) acc -= cab * f[a][p] * xi[b];
        }
      defect = std::max(defect, std::abs(acc));
    }
  }
  return defect;
}

} // namespace ymh
