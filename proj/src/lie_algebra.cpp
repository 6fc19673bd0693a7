#include "ymh/algebra_element.hpp"

#include <cmath>

namespace ymh {
namespace {

struct Lifted {
  std::vector<std::vector<double>> vel;      // [i]
  std::vector<std::vector<double>> dvel;     // [i*d + j] = d_i X_j
  std::vector<std::vector<double>> charge;   // [a]
  std::vector<std::vector<double>> dcharge;  // [i*m + a] = d_i f_a
};

Lifted lift_element(const PointwiseContext& ctx, const VectorField& x, const GaugeField& f,
                    bool with_velocity_grad, bool with_charge_grad) {
  const int d = ctx.grid().dim;
  const int m = f.lie_dim();
  Lifted out;
  out.vel.resize(d);
  for (int i = 0; i < d; ++i) out.vel[i] = ctx.lift(x.comp[i]);
  if (with_velocity_grad) {
    out.dvel.resize(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.dvel[i * d + j] = ctx.lift_derivative(x.comp[j], i);
  }
  out.charge.resize(m);
  for (int a = 0; a < m; ++a) out.charge[a] = ctx.lift(f.comp[a]);
  if (with_charge_grad) {
    out.dcharge.resize(static_cast<size_t>(d) * m);
    for (int i = 0; i < d; ++i)
      for (int a = 0; a < m; ++a) out.dcharge[i * m + a] = ctx.lift_derivative(f.comp[a], i);
  }
  return out;
}

// A(X)_p at each padded point, or empty when the potential vanishes.
std::vector<std::vector<double>> potential_contraction(const GaugeGeometry& geom,
                                                       const PointwiseContext& ctx,
                                                       const std::vector<std::vector<double>>& vel) {
  const int d = geom.grid().dim;
  const int m = geom.algebra().dim();
  std::vector<std::vector<double>> ax;
  if (geom.potential_is_zero()) return ax;
  ax.assign(m, std::vector<double>(ctx.points(), 0.0));
  for (int p = 0; p < m; ++p)
    for (int i = 0; i < d; ++i) {
      const auto& apw = geom.potential_samples(i, p);
      for (long s = 0; s < ctx.points(); ++s) ax[p][s] += vel[i][s] * apw[s];
    }
  return ax;
}

} // namespace

double incompressibility_defect(const VectorField& x, const GaugeGeometry& geom) {
  return max_abs(weighted_divergence(x, geom.projection()));
}

AlgebraElement make_algebra_element(const GaugeGeometry& geom, VectorField x, GaugeField f) {
  require_same_grid(geom.grid(), x.grid());
  if (f.lie_dim() != geom.algebra().dim())
    throw ArgumentError("charge field does not match algebra dimension");
  require_same_grid(geom.grid(), f.grid());
  const int kd = geom.grid().dealias_limit();
  x.truncate(kd);
  f.truncate(kd);
  VectorField projected = weighted_leray_project(x, geom.projection());
  const double scale = std::max(max_abs(projected), 1.0);
  if (incompressibility_defect(projected, geom) > 1e-10 * scale)
    throw SolverError("projection left a residual weighted divergence", 0.0);
  return AlgebraElement(std::move(projected), std::move(f));
}

DualElement make_dual_element(const GaugeGeometry& geom, VectorField alpha, GaugeField xi) {
  AlgebraElement tmp = make_algebra_element(geom, std::move(alpha), std::move(xi));
  return DualElement(std::move(tmp.velocity), std::move(tmp.charge));
}

AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v,
                       const GaugeGeometry& geom) {
  const TorusGrid& grid = geom.grid();
  require_same_grid(grid, u.velocity.grid());
  require_same_grid(grid, v.velocity.grid());
  const int d = grid.dim;
  const int m = geom.algebra().dim();
  if (u.charge.lie_dim() != m || v.charge.lie_dim() != m)
    throw ArgumentError("charge fields do not match algebra dimension");
  const LieAlgebraSpec& alg = geom.algebra();

  PointwiseContext ctx(grid);
  Lifted lu = lift_element(ctx, u.velocity, u.charge, true, true);
  Lifted lv = lift_element(ctx, v.velocity, v.charge, true, true);
  auto axu = potential_contraction(geom, ctx, lu.vel);
  auto axv = potential_contraction(geom, ctx, lv.vel);

  // Base: -[Z,Z'] = -(Z.grad Z' - Z'.grad Z).
  VectorField base(grid);
  std::vector<double> acc(ctx.points());
  for (int j = 0; j < d; ++j) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int i = 0; i < d; ++i)
      for (long s = 0; s < ctx.points(); ++s)
        acc[s] -= lu.vel[i][s] * lv.dvel[i * d + j][s] - lv.vel[i][s] * lu.dvel[i * d + j][s];
    base.comp[j] = ctx.lower(acc);
  }
  if (!geom.weight().is_constant()) base = weighted_leray_project(base, geom.projection());

  GaugeField charge(grid, m);
  for (int e = 0; e < m; ++e) {
    std::fill(acc.begin(), acc.end(), 0.0);
    // [f, f'] and the A(Z)-commutators share the structure constants. The
    // p<q pairing keeps the whole sum an exact FP negation under u <-> v.
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) {
        const double cpq = alg.c(p, q, e);
        if (cpq == 0.0) continue;
        for (long s = 0; s < ctx.points(); ++s)
          acc[s] += cpq * (lu.charge[p][s] * lv.charge[q][s] - lu.charge[q][s] * lv.charge[p][s]);
      }
    if (!axu.empty()) {
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
          const double cpq = alg.c(p, q, e);
          if (cpq == 0.0) continue;
          for (long s = 0; s < ctx.points(); ++s)
            acc[s] += cpq * (axu[p][s] * lv.charge[q][s] - axv[p][s] * lu.charge[q][s]);
        }
    }
    // Transport terms Z(f') - Z'(f).
    for (int i = 0; i < d; ++i)
      for (long s = 0; s < ctx.points(); ++s)
        acc[s] += lu.vel[i][s] * lv.dcharge[i * m + e][s] - lv.vel[i][s] * lu.dcharge[i * m + e][s];
    // Curvature term Omega(Z, Z').
    if (!geom.curvature_is_zero()) {
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          const auto& om = geom.curvature_samples(Curvature::pair_index(i, j), e);
          for (long s = 0; s < ctx.points(); ++s)
            acc[s] += (lu.vel[i][s] * lv.vel[j][s] - lu.vel[j][s] * lv.vel[i][s]) * om[s];
        }
    }
    for (long s = 0; s < ctx.points(); ++s) acc[s] = -acc[s];
    charge.comp[e] = ctx.lower(acc);
  }
  return AlgebraElement(std::move(base), std::move(charge));
}

DualElement flat(const AlgebraElement& u, const GaugeGeometry& geom) {
  const LieAlgebraSpec& alg = geom.algebra();
  const int m = alg.dim();
  GaugeField xi(geom.grid(), m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (alg.h(a, b) != 0.0) xi.comp[a].axpy(alg.h(a, b), u.charge.comp[b]);
  return DualElement(u.velocity, std::move(xi));
}

AlgebraElement sharp(const DualElement& d, const GaugeGeometry& geom) {
  const LieAlgebraSpec& alg = geom.algebra();
  const int m = alg.dim();
  GaugeField f(geom.grid(), m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (alg.h_inv(a, b) != 0.0) f.comp[a].axpy(alg.h_inv(a, b), d.charge_density.comp[b]);
  return AlgebraElement(weighted_leray_project(d.momentum, geom.projection()), std::move(f));
}

double pairing(const DualElement& d, const AlgebraElement& u, const GaugeGeometry& geom) {
  const TorusGrid& grid = geom.grid();
  require_same_grid(grid, d.momentum.grid());
  require_same_grid(grid, u.velocity.grid());
  const int m = geom.algebra().dim();

  PointwiseContext ctx(grid);
  std::vector<double> acc(ctx.points(), 0.0);
  for (int i = 0; i < grid.dim; ++i) {
    auto a = ctx.lift(d.momentum.comp[i]);
    auto x = ctx.lift(u.velocity.comp[i]);
    for (long s = 0; s < ctx.points(); ++s) acc[s] += a[s] * x[s];
  }
  for (int a = 0; a < m; ++a) {
    auto xi = ctx.lift(d.charge_density.comp[a]);
    auto f = ctx.lift(u.charge.comp[a]);
    for (long s = 0; s < ctx.points(); ++s) acc[s] += xi[s] * f[s];
  }
  if (geom.weight().is_constant()) {
    return geom.weight().mean_value() * ctx.integral(acc);
  }
  const auto& vpw = geom.weight_samples();
  for (long s = 0; s < ctx.points(); ++s) acc[s] *= vpw[s];
  return ctx.integral(acc);
}

DualElement coadjoint(const AlgebraElement& u, const DualElement& d, const GaugeGeometry& geom) {
  const TorusGrid& grid = geom.grid();
  require_same_grid(grid, u.velocity.grid());
  require_same_grid(grid, d.momentum.grid());
  const int dd = grid.dim;
  const LieAlgebraSpec& alg = geom.algebra();
  const int m = alg.dim();

  PointwiseContext ctx(grid);
  Lifted lu = lift_element(ctx, u.velocity, u.charge, true, true);
  Lifted ld = lift_element(ctx, d.momentum, d.charge_density, true, true);
  auto ax = potential_contraction(geom, ctx, lu.vel);

  // Base 1-form: -L_X alpha - (xi, Df)~ + (xi, i_X Omega)~.
  VectorField base(grid);
  std::vector<double> acc(ctx.points());
  for (int i = 0; i < dd; ++i) {
    std::fill(acc.begin(), acc.end(), 0.0);
    // L_X alpha = X.grad alpha_i + alpha_j d_i X_j
    for (int j = 0; j < dd; ++j)
      for (long s = 0; s < ctx.points(); ++s)
        acc[s] -= lu.vel[j][s] * ld.dvel[j * dd + i][s] + ld.vel[j][s] * lu.dvel[i * dd + j][s];
    // (xi, Df)~_i = xi_a (d_i f_a + [A_i, f]_a)
    for (int a = 0; a < m; ++a)
      for (long s = 0; s < ctx.points(); ++s)
        acc[s] -= ld.charge[a][s] * lu.dcharge[i * m + a][s];
    if (!geom.potential_is_zero()) {
      for (int a = 0; a < m; ++a)
        for (int p = 0; p < m; ++p)
          for (int q = 0; q < m; ++q) {
            const double cpq = alg.c(p, q, a);
            if (cpq == 0.0) continue;
            const auto& apw = geom.potential_samples(i, p);
            for (long s = 0; s < ctx.points(); ++s)
              acc[s] -= ld.charge[a][s] * cpq * apw[s] * lu.charge[q][s];
          }
    }
    // (xi, i_X Omega)~_i = X_j (xi, Omega_{ji})
    if (!geom.curvature_is_zero()) {
      for (int j = 0; j < dd; ++j) {
        if (j == i) continue;
        const double sign = j < i ? 1.0 : -1.0;
        const int pair = Curvature::pair_index(std::min(i, j), std::max(i, j));
        for (int a = 0; a < m; ++a) {
          const auto& om = geom.curvature_samples(pair, a);
          for (long s = 0; s < ctx.points(); ++s)
            acc[s] += sign * lu.vel[j][s] * ld.charge[a][s] * om[s];
        }
      }
    }
    base.comp[i] = ctx.lower(acc);
  }
  base = weighted_leray_project(base, geom.projection());

  // Charge density: -ad*(f)xi - D_X xi
  //   = sum_{a,b} C(a,c,b) (f_a + A(X)_a) xi_b - X.grad xi_c.
  GaugeField xi_dot(grid, m);
  for (int c = 0; c < m; ++c) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int i = 0; i < dd; ++i)
      for (long s = 0; s < ctx.points(); ++s) acc[s] -= lu.vel[i][s] * ld.dcharge[i * m + c][s];
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const double cab = alg.c(a, c, b);
        if (cab == 0.0) continue;
        for (long s = 0; s < ctx.points(); ++s) acc[s] += cab * lu.charge[a][s] * ld.charge[b][s];
        if (!ax.empty())
          for (long s = 0; s < ctx.points(); ++s) acc[s] += cab * ax[a][s] * ld.charge[b][s];
      }
    xi_dot.comp[c] = ctx.lower(acc);
  }
  return DualElement(std::move(base), std::move(xi_dot));
}

} // namespace ymh
