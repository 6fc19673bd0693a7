#ifndef YMH_VERIFY_HPP
#define YMH_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ymh/algebra_element.hpp"
#include "ymh/sampling.hpp"

namespace ymh::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0; // measured defect / error
  double bound = 0.0; // allowed bound
  std::string detail;
};

/// Random band-limited scalar with a smooth decaying spectrum,
/// |k_i| <= kmax.
SpectralScalarField random_scalar(const TorusGrid& grid, int kmax, double amplitude,
                                  SplitMix64& rng);

/// Random algebra element: projected band-limited velocity + charge.
AlgebraElement random_element(const GaugeGeometry& geom, int kmax, double amplitude,
                              SplitMix64& rng);

/// Evaluates a stored field by direct trigonometric summation at one point
/// (independent of the FFT path).
double direct_eval(const SpectralScalarField& f, const std::array<double, 3>& x);

/// Bracket checks at the given resolution (2D, su(2), constant potential):
/// collocation-oracle match on an oversampled grid, structural
/// antisymmetry, and the Jacobi identity, over random dealias-exact
/// band-limited triples.
std::vector<CheckResult> algebra_bracket_checks(int resolution, uint64_t seed, int trials);

/// Coadjoint duality <ad*(u) d, v> + <d, [u,v]> = 0 over random instances
/// (su(2) with a varying potential, and abelian with curvature).
std::vector<CheckResult> coadjoint_duality_checks(int resolution, uint64_t seed, int trials);

/// Fibration checks: fiber volume, base-point independence, volume
/// consistency, and the integration formula for 1, z, z^2, 1 + z^2.
std::vector<CheckResult> hopf_checks(long samples, uint64_t seed);

} // namespace ymh::verify

#endif
