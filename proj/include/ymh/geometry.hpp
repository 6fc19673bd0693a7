#ifndef YMH_GEOMETRY_HPP
#define YMH_GEOMETRY_HPP

#include <memory>
#include <optional>
#include <vector>

#include "ymh/gauge.hpp"
#include "ymh/hodge.hpp"

namespace ymh {

/// All static gauge-theoretic data of one trivialized bundle over a torus:
/// Lie algebra, potential, curvature, weight, and the projection workspace.
/// Padded-grid lifts of the static fields are precomputed so right-hand
/// sides can be assembled pointwise without re-transforming geometry.
/// Immutable after construction; safe to share across threads.
class GaugeGeometry {
public:
  static GaugeGeometry from_potential(const TorusGrid& grid, LieAlgebraSpec alg,
                                      GaugePotential a, WeightFunction v,
                                      double solver_tol = 1e-12, int solver_max_iter = 500);

  /// Abelian shortcut on T^3: the user supplies the divergence-free
  /// magnetic field directly; the curvature is its 2-form image (oriented
  /// so the charge force reduces to +f X x B) and the potential is unused.
  static GaugeGeometry abelian_from_magnetic_field(const TorusGrid& grid, const VectorField& b,
                                                   WeightFunction v, double solver_tol = 1e-12,
                                                   int solver_max_iter = 500);

  /// Zero potential and curvature.
  static GaugeGeometry trivial(const TorusGrid& grid, LieAlgebraSpec alg, WeightFunction v,
                               double solver_tol = 1e-12, int solver_max_iter = 500);

  const TorusGrid& grid() const { return grid_; }
  const LieAlgebraSpec& algebra() const { return alg_; }
  const GaugePotential& potential() const { return potential_; }
  bool has_potential() const { return has_potential_; }
  const Curvature& curvature() const { return curvature_; }
  const WeightFunction& weight() const { return projection_.weight; }
  const ProjectionWorkspace& projection() const { return projection_; }

  // Cached padded-grid samples of the static fields (empty when the
  // corresponding object is zero/absent).
  const std::vector<double>& potential_samples(int axis, int a) const {
    return potential_pw_[static_cast<size_t>(axis) * alg_.dim() + a];
  }
  const std::vector<double>& curvature_samples(int pair, int a) const {
    return curvature_pw_[static_cast<size_t>(pair) * alg_.dim() + a];
  }
  bool potential_is_zero() const { return potential_zero_; }
  bool curvature_is_zero() const { return curvature_zero_; }
  const std::vector<double>& weight_samples() const { return weight_pw_; }

private:
  GaugeGeometry(const TorusGrid& grid, LieAlgebraSpec alg, GaugePotential a, bool has_a,
                Curvature omega, WeightFunction v, double tol, int max_iter);

  TorusGrid grid_;
  LieAlgebraSpec alg_;
  GaugePotential potential_;
  bool has_potential_ = false;
  bool potential_zero_ = true;
  Curvature curvature_;
  bool curvature_zero_ = true;
  ProjectionWorkspace projection_;
  std::vector<std::vector<double>> potential_pw_;
  std::vector<std::vector<double>> curvature_pw_;
  std::vector<double> weight_pw_;
};

} // namespace ymh

#endif
