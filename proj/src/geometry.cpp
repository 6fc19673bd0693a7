#include "ymh/geometry.hpp"

#include <cmath>

namespace ymh {

GaugeGeometry::GaugeGeometry(const TorusGrid& grid, LieAlgebraSpec alg, GaugePotential a,
                             bool has_a, Curvature omega, WeightFunction v, double tol,
                             int max_iter)
    : grid_(grid), alg_(std::move(alg)), potential_(std::move(a)), has_potential_(has_a),
      curvature_(std::move(omega)), projection_(grid, std::move(v), tol, max_iter) {
  const int m = alg_.dim();
  PointwiseContext ctx(grid_);

  potential_zero_ = true;
  if (has_potential_) {
    for (const auto& g : potential_.axis)
      for (const auto& c : g.comp)
        for (const auto& z : c.coeffs())
          if (z != std::complex<double>(0.0)) potential_zero_ = false;
  }
  potential_pw_.assign(static_cast<size_t>(grid_.dim) * m, {});
  if (has_potential_ && !potential_zero_)
    for (int i = 0; i < grid_.dim; ++i)
      for (int e = 0; e < m; ++e)
        potential_pw_[static_cast<size_t>(i) * m + e] = ctx.lift(potential_.axis[i].comp[e]);

  curvature_zero_ = curvature_.max_abs_component() == 0.0;
  curvature_pw_.assign(static_cast<size_t>(Curvature::pair_count(grid_.dim)) * m, {});
  if (!curvature_zero_)
    for (int p = 0; p < Curvature::pair_count(grid_.dim); ++p)
      for (int e = 0; e < m; ++e)
        curvature_pw_[static_cast<size_t>(p) * m + e] = ctx.lift(curvature_.upper[p].comp[e]);

  if (!projection_.weight.is_constant()) weight_pw_ = ctx.lift(projection_.weight.field());
}

GaugeGeometry GaugeGeometry::from_potential(const TorusGrid& grid, LieAlgebraSpec alg,
                                            GaugePotential a, WeightFunction v, double tol,
                                            int max_iter) {
  require_same_grid(grid, a.grid());
  if (a.lie_dim() != alg.dim()) throw ArgumentError("potential does not match algebra dimension");
  Curvature omega = curvature_from_potential(a, alg);
  return GaugeGeometry(grid, std::move(alg), std::move(a), true, std::move(omega), std::move(v),
                       tol, max_iter);
}

GaugeGeometry GaugeGeometry::abelian_from_magnetic_field(const TorusGrid& grid,
                                                         const VectorField& b, WeightFunction v,
                                                         double tol, int max_iter) {
  if (grid.dim != 3) throw ArgumentError("magnetic-field geometry requires a 3D base");
  require_same_grid(grid, b.grid());
  const double scale = std::max(max_abs(b), 1e-300);
  if (max_abs(divergence(b)) > 1e-10 * scale)
    throw ArgumentError("magnetic field must be divergence-free");

  LieAlgebraSpec alg = LieAlgebraSpec::abelian();
  Curvature omega(grid, 1);
  // Oriented so that the charge force term contracts to +f (X x B).
  omega.upper[Curvature::pair_index(0, 1)].comp[0] = -1.0 * b.comp[2];
  omega.upper[Curvature::pair_index(0, 2)].comp[0] = b.comp[1];
  omega.upper[Curvature::pair_index(1, 2)].comp[0] = -1.0 * b.comp[0];
  return GaugeGeometry(grid, std::move(alg), GaugePotential(grid, 1), false, std::move(omega),
                       std::move(v), tol, max_iter);
}

GaugeGeometry GaugeGeometry::trivial(const TorusGrid& grid, LieAlgebraSpec alg, WeightFunction v,
                                     double tol, int max_iter) {
  const int m = alg.dim();
  return GaugeGeometry(grid, std::move(alg), GaugePotential(grid, m), false, Curvature(grid, m),
                       std::move(v), tol, max_iter);
}

} // namespace ymh
