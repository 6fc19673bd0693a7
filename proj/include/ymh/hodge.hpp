#ifndef YMH_HODGE_HPP
#define YMH_HODGE_HPP

#include "ymh/gauge.hpp"
#include "ymh/vector_field.hpp"

namespace ymh {

/// Weighted Helmholtz decomposition X(B) = X(B, V mu) + grad O^0(B).
/// Holds the weight and the elliptic-solver settings; immutable and
/// shareable once constructed.
struct ProjectionWorkspace {
  TorusGrid grid;
  WeightFunction weight;
  double tolerance = 1e-12;
  int max_iterations = 500;

  ProjectionWorkspace(const TorusGrid& g, WeightFunction w, double tol = 1e-12,
                      int max_iter = 500)
      : grid(g), weight(std::move(w)), tolerance(tol), max_iterations(max_iter) {
    require_same_grid(grid, weight.field().grid());
    if (!(tolerance >= 1e-14)) throw ArgumentError("solver tolerance must be >= 1e-14");
    if (max_iterations < 1) throw ArgumentError("max iterations must be >= 1");
  }
};

/// Solves div(V grad p) = rhs for zero-mean p. Constant V inverts the
/// Laplacian spectrally; variable V runs preconditioned CG on the SPD
/// operator -div(V grad .) with the mean-V inverse Laplacian as
/// preconditioner. Throws ArgumentError on nonzero-mean rhs (solvability)
/// and SolverError on non-convergence.
SpectralScalarField solve_weighted_poisson(const SpectralScalarField& rhs,
                                           const ProjectionWorkspace& ws);

/// X - grad p with p = solve_weighted_poisson(div(V X)): the projection
/// onto weighted-divergence-free fields along gradients.
VectorField weighted_leray_project(const VectorField& x, const ProjectionWorkspace& ws);

/// div(V X), exact for constant V and dealiased otherwise.
SpectralScalarField weighted_divergence(const VectorField& x, const ProjectionWorkspace& ws);

} // namespace ymh

#endif
