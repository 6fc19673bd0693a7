#include "ymh/hodge.hpp"

#include <cmath>
#include <string>

namespace ymh {
namespace {

double coeff_l2(const SpectralScalarField& f) { return std::sqrt(spectral_dot(f, f)); }

// p(k) = -rhs(k) / (vbar |kappa|^2), zero mean.
SpectralScalarField inverse_laplacian(const SpectralScalarField& rhs, double vbar) {
  const TorusGrid& g = rhs.grid();
  SpectralScalarField p(g);
  for_each_mode(g, [&](long li, const std::array<int, 3>& k) {
    double k2 = 0.0;
    for (int i = 0; i < g.dim; ++i) {
      const double kappa = g.wavenumber(k[i]);
      k2 += kappa * kappa;
    }
    p.coeffs()[li] = k2 == 0.0 ? 0.0 : -rhs.coeffs()[li] / (vbar * k2);
  });
  return p;
}

// SPD operator -div(V grad p) with dealiased products.
SpectralScalarField neg_weighted_laplacian(const SpectralScalarField& p,
                                           const ProjectionWorkspace& ws) {
  SpectralScalarField acc(p.grid());
  for (int i = 0; i < p.grid().dim; ++i) {
    SpectralScalarField vd = dealiased_product(ws.weight.field(), derivative(p, i));
    acc -= derivative(vd, i);
  }
  return acc;
}

} // namespace

SpectralScalarField solve_weighted_poisson(const SpectralScalarField& rhs,
                                           const ProjectionWorkspace& ws) {
  require_same_grid(rhs.grid(), ws.grid);
  const double scale = coeff_l2(rhs);
  if (std::abs(rhs.mean()) > 1e-12 * std::max(scale, 1e-300))
    throw ArgumentError("solvability requires zero mean");
  if (scale == 0.0) return SpectralScalarField(ws.grid);

  if (ws.weight.is_constant()) return inverse_laplacian(rhs, ws.weight.mean_value());

  // PCG on -div(V grad p) = -rhs.
  const double vbar = ws.weight.mean_value();
  SpectralScalarField b = -1.0 * rhs;
  const double bnorm = coeff_l2(b);
  SpectralScalarField x(ws.grid);
  SpectralScalarField r = b;
  SpectralScalarField z = inverse_laplacian(-1.0 * r, vbar);
  SpectralScalarField p = z;
  double rz = spectral_dot(r, z);
  double resid = coeff_l2(r) / bnorm;
  for (int it = 0; it < ws.max_iterations; ++it) {
    SpectralScalarField ap = neg_weighted_laplacian(p, ws);
    const double alpha = rz / spectral_dot(p, ap);
    x.axpy(alpha, p);
    r.axpy(-alpha, ap);
    resid = coeff_l2(r) / bnorm;
    if (resid <= ws.tolerance) return x;
    z = inverse_laplacian(-1.0 * r, vbar);
    const double rz_new = spectral_dot(r, z);
    p *= rz_new / rz;
    p += z;
    rz = rz_new;
  }
  throw SolverError("weighted Poisson solve did not converge in " +
                        std::to_string(ws.max_iterations) +
                        " iterations (relative residual " + std::to_string(resid) + ")",
                    resid);
}

SpectralScalarField weighted_divergence(const VectorField& x, const ProjectionWorkspace& ws) {
  require_same_grid(x.grid(), ws.grid);
  if (ws.weight.is_constant()) {
    SpectralScalarField d = divergence(x);
    d *= ws.weight.mean_value();
    return d;
  }
  SpectralScalarField acc(ws.grid);
  for (int i = 0; i < x.dim(); ++i)
    acc += derivative(dealiased_product(ws.weight.field(), x.comp[i]), i);
  return acc;
}

VectorField weighted_leray_project(const VectorField& x, const ProjectionWorkspace& ws) {
  SpectralScalarField rhs = weighted_divergence(x, ws);
  if (coeff_l2(rhs) == 0.0) return x;
  SpectralScalarField p = solve_weighted_poisson(rhs, ws);
  return x - gradient(p);
}

} // namespace ymh
