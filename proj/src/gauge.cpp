#include "ymh/gauge.hpp"

#include <cmath>

namespace ymh {

WeightFunction WeightFunction::constant(const TorusGrid& grid, double value) {
  if (!(value > 0.0)) throw ArgumentError("weight function must be positive");
  WeightFunction w;
  w.field_ = SpectralScalarField::constant(grid, value);
  w.constant_ = true;
  return w;
}

WeightFunction WeightFunction::from_field(SpectralScalarField v) {
  auto samples = v.to_real();
  for (double s : samples)
    if (!(s > 0.0)) throw ArgumentError("weight function must be positive at every point");

  WeightFunction w;
  double off_dc = 0.0;
  for (size_t i = 1; i < v.coeffs().size(); ++i) off_dc = std::max(off_dc, std::abs(v.coeffs()[i]));
  w.constant_ = off_dc <= 1e-13 * std::max(1.0, std::abs(v.mean()));
  w.field_ = std::move(v);
  return w;
}

Curvature curvature_from_potential(const GaugePotential& a, const LieAlgebraSpec& alg) {
  const TorusGrid& grid = a.grid();
  const int m = a.lie_dim();
  if (m != alg.dim()) throw ArgumentError("potential does not match Lie algebra dimension");
  Curvature omega(grid, m);

  PointwiseContext ctx(grid);
  // Lift every A_i^a once; the commutator is assembled pointwise.
  std::vector<std::vector<std::vector<double>>> apw(static_cast<size_t>(grid.dim));
  if (!alg.abelian_algebra()) {
    for (int i = 0; i < grid.dim; ++i) {
      apw[i].resize(static_cast<size_t>(m));
      for (int e = 0; e < m; ++e) apw[i][e] = ctx.lift(a.axis[i].comp[e]);
    }
  }

  for (int i = 0; i < grid.dim; ++i) {
    for (int j = i + 1; j < grid.dim; ++j) {
      GaugeField& slot = omega.upper[Curvature::pair_index(i, j)];
      for (int e = 0; e < m; ++e)
        slot.comp[e] = derivative(a.axis[j].comp[e], i) - derivative(a.axis[i].comp[e], j);
      if (!alg.abelian_algebra()) {
        for (int e = 0; e < m; ++e) {
          std::vector<double> acc(ctx.points(), 0.0);
          for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
              const double cpq = alg.c(p, q, e);
              if (cpq == 0.0) continue;
              const auto& ap = apw[i][p];
              const auto& aq = apw[j][q];
              for (long s = 0; s < ctx.points(); ++s) acc[s] += cpq * ap[s] * aq[s];
            }
          slot.comp[e] += ctx.lower(acc);
        }
      }
    }
  }
  return omega;
}

GaugeField covariant_derivative(const VectorField& x, const GaugeField& f,
                                const GaugePotential& a, const LieAlgebraSpec& alg) {
  const TorusGrid& grid = f.grid();
  require_same_grid(grid, x.grid());
  require_same_grid(grid, a.grid());
  const int m = f.lie_dim();
  if (m != alg.dim() || a.lie_dim() != m)
    throw ArgumentError("field does not match Lie algebra dimension");

  PointwiseContext ctx(grid);
  std::vector<std::vector<double>> xpw(static_cast<size_t>(grid.dim));
  for (int i = 0; i < grid.dim; ++i) xpw[i] = ctx.lift(x.comp[i]);

  GaugeField out(grid, m);
  for (int e = 0; e < m; ++e) {
    std::vector<double> acc(ctx.points(), 0.0);
    for (int i = 0; i < grid.dim; ++i) {
      auto df = ctx.lift_derivative(f.comp[e], i);
      const auto& xi = xpw[i];
      for (long s = 0; s < ctx.points(); ++s) acc[s] += xi[s] * df[s];
    }
    if (!alg.abelian_algebra()) {
      // [A(X), f]_e as one pointwise triple sum: no intermediate truncation.
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
          const double cpq = alg.c(p, q, e);
          if (cpq == 0.0) continue;
          auto fq = ctx.lift(f.comp[q]);
          for (int i = 0; i < grid.dim; ++i) {
            auto ap = ctx.lift(a.axis[i].comp[p]);
            const auto& xi = xpw[i];
            for (long s = 0; s < ctx.points(); ++s) acc[s] += cpq * xi[s] * ap[s] * fq[s];
          }
        }
    }
    out.comp[e] = ctx.lower(acc);
  }
  return out;
}

} // namespace ymh
