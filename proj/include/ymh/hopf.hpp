#ifndef YMH_HOPF_HPP
#define YMH_HOPF_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace ymh {

/// Real spherical-harmonic expansion of a function on the unit 2-sphere,
/// degree <= 8.
class SphericalFunction {
public:
  struct Term {
    int l = 0;
    int m = 0;
    double coeff = 0.0;
  };

  explicit SphericalFunction(std::vector<Term> terms);

  /// Polynomial in the z coordinate, sum_p coeffs[p] z^p, projected onto
  /// the m = 0 harmonics.
  static SphericalFunction from_z_polynomial(const std::vector<double>& coeffs);

  /// Value at a unit direction.
  double eval(double x, double y, double z) const;

  const std::vector<Term>& terms() const { return terms_; }

private:
  std::vector<Term> terms_;
};

/// Quadrature / sampling description for the fibration checks.
struct HopfSampler {
  int quadrature_order = 32;   // Gauss-Legendre order on S^2 (>= 8)
  long samples = 1'000'000;    // total QMC points on S^3
  int shifts = 16;             // randomized-QMC shift count
  uint64_t seed = 0;

  void validate() const;
};

/// Fiber volume over one base point, by numerical arc-length integration
/// along the fiber (unit round metric on S^3). The base point lies on the
/// unit direction sphere.
double hopf_orbit_volume_at(const std::array<double, 3>& base_direction, int quadrature_order);

/// Fiber volume at the north pole; equals 2 pi for the round metric.
double hopf_orbit_volume(int quadrature_order = 32);

struct HopfCheckResult {
  double lhs = 0.0;            // QMC estimate of the total-space integral
  double rhs = 0.0;            // base quadrature of integral f V
  double standard_error = 0.0; // randomized-QMC standard error of lhs
};

/// Compares integral over S^3 of (f o pi) against integral over S^2(1/2)
/// of f V, with V the computed fiber volume.
HopfCheckResult hopf_integration_check(const SphericalFunction& f, const HopfSampler& sampler);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace ymh

#endif
