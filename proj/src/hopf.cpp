#include "ymh/hopf.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "ymh/errors.hpp"
#include "ymh/sampling.hpp"

namespace ymh {
namespace {

constexpr double kPi = std::numbers::pi;

// Orthonormal associated Legendre values P_l^m(x) for fixed m, l = m..lmax,
// normalized so that the real spherical harmonics below are orthonormal.
void normalized_plm(int m, int lmax, double x, std::vector<double>& out) {
  out.assign(static_cast<size_t>(lmax - m + 1), 0.0);
  double pmm = std::sqrt(1.0 / (4.0 * kPi));
  const double somx2 = std::sqrt(std::max(0.0, 1.0 - x * x));
  for (int k = 1; k <= m; ++k)
    pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * somx2;
  out[0] = pmm;
  if (lmax == m) return;
  double pm1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
  out[1] = pm1;
  double pm2 = pmm;
  for (int l = m + 2; l <= lmax; ++l) {
    const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l * l) - m * m));
    const double b = std::sqrt(((2.0 * l + 1.0) * ((l - 1.0) * (l - 1.0) - m * m)) /
                               ((2.0 * l - 3.0) * (static_cast<double>(l * l) - m * m)));
    const double plm = a * x * pm1 - b * pm2;
    out[static_cast<size_t>(l - m)] = plm;
    pm2 = pm1;
    pm1 = plm;
  }
}

} // namespace

SphericalFunction::SphericalFunction(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.l < 0 || t.l > 8) throw ArgumentError("spherical-harmonic degree must be in [0, 8]");
    if (std::abs(t.m) > t.l) throw ArgumentError("spherical-harmonic order |m| must be <= l");
  }
}

double SphericalFunction::eval(double x, double y, double z) const {
  const double phi = std::atan2(y, x);
  double value = 0.0;
  std::vector<double> plm;
  for (const auto& t : terms_) {
    const int am = std::abs(t.m);
    normalized_plm(am, t.l, z, plm);
    const double p = plm[static_cast<size_t>(t.l - am)];
    double basis;
    if (t.m == 0)
      basis = p;
    else if (t.m > 0)
      basis = std::numbers::sqrt2 * p * std::cos(am * phi);
    else
      basis = std::numbers::sqrt2 * p * std::sin(am * phi);
    value += t.coeff * basis;
  }
  return value;
}

SphericalFunction SphericalFunction::from_z_polynomial(const std::vector<double>& coeffs) {
  if (coeffs.size() > 9) throw ArgumentError("z-polynomial degree must be <= 8");
  const int deg = static_cast<int>(coeffs.size()) - 1;
  // Project onto Y_l0 with Gauss-Legendre in z (exact for polynomials):
  // c_l = 2 pi integral_{-1}^{1} f(z) Y_l0(z) dz.
  std::vector<double> nodes, weights;
  gauss_legendre(16, nodes, weights);
  std::vector<Term> terms;
  std::vector<double> plm;
  for (int l = 0; l <= std::max(deg, 0); ++l) {
    double c = 0.0;
    for (size_t q = 0; q < nodes.size(); ++q) {
      double f = 0.0, zp = 1.0;
      for (double a : coeffs) {
        f += a * zp;
        zp *= nodes[q];
      }
      normalized_plm(0, l, nodes[q], plm);
      c += weights[q] * f * plm[static_cast<size_t>(l)];
    }
    c *= 2.0 * kPi;
    if (std::abs(c) > 1e-14) terms.push_back({l, 0, c});
  }
  if (terms.empty()) terms.push_back({0, 0, 0.0});
  return SphericalFunction(std::move(terms));
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw ArgumentError("quadrature order must be positive");
  nodes.assign(static_cast<size_t>(order), 0.0);
  weights.assign(static_cast<size_t>(order), 0.0);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev estimate.
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = -x;
    nodes[static_cast<size_t>(order - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[static_cast<size_t>(i)] = w;
    weights[static_cast<size_t>(order - 1 - i)] = w;
  }
}

void HopfSampler::validate() const {
  if (quadrature_order < 8) throw ArgumentError("quadrature order must be >= 8");
  if (samples < 1000) throw ArgumentError("QMC sample count must be >= 1000");
  if (shifts < 2) throw ArgumentError("QMC shift count must be >= 2");
}

double hopf_orbit_volume_at(const std::array<double, 3>& base_direction, int quadrature_order) {
  if (quadrature_order < 8) throw ArgumentError("quadrature order must be >= 8");
  const double bx = base_direction[0], by = base_direction[1], bz = base_direction[2];
  const double norm = std::sqrt(bx * bx + by * by + bz * bz);
  if (!(norm > 0.0)) throw ArgumentError("base point must be nonzero");

  // A point of the total space over the base direction (r1, r2 from the
  // height, relative phase from the azimuth).
  const double z = bz / norm;
  const double r1 = std::sqrt(std::max(0.0, (1.0 + z) / 2.0));
  const double r2 = std::sqrt(std::max(0.0, (1.0 - z) / 2.0));
  const double psi = std::atan2(by, bx);
  const std::complex<double> z1(r1, 0.0);
  const std::complex<double> z2 = std::polar(r2, -psi);

  // Fiber: phi -> e^{i phi} (z1, z2) in C^2 = R^4; arc length of the speed.
  std::vector<double> nodes, weights;
  gauss_legendre(quadrature_order, nodes, weights);
  double length = 0.0;
  for (size_t q = 0; q < nodes.size(); ++q) {
    const double phi = kPi * (nodes[q] + 1.0); // [0, 2 pi]
    const std::complex<double> rot(-std::sin(phi), std::cos(phi)); // d/dphi e^{i phi}
    const std::complex<double> d1 = rot * z1;
    const std::complex<double> d2 = rot * z2;
    const double speed = std::sqrt(std::norm(d1) + std::norm(d2));
    length += weights[q] * kPi * speed; // dphi = pi dt
  }
  return length;
}

double hopf_orbit_volume(int quadrature_order) {
  return hopf_orbit_volume_at({0.0, 0.0, 1.0}, quadrature_order);
}

HopfCheckResult hopf_integration_check(const SphericalFunction& f, const HopfSampler& sampler) {
  sampler.validate();
  HopfCheckResult out;

  // lhs: randomized QMC over S^3 in Hopf coordinates, where the round
  // measure is the uniform product measure d(u) d(theta1) d(theta2) of
  // total mass 2 pi^2.
  const int shifts = sampler.shifts;
  const long per_shift = sampler.samples / shifts;
  SplitMix64 rng(sampler.seed * 0x9e3779b97f4a7c15ULL + 1234567ULL);
  std::vector<double> estimates(static_cast<size_t>(shifts), 0.0);
  for (int sh = 0; sh < shifts; ++sh) {
    const double o1 = rng.uniform(), o2 = rng.uniform(), o3 = rng.uniform();
    double acc = 0.0;
    for (long i = 1; i <= per_shift; ++i) {
      double u = radical_inverse(static_cast<uint64_t>(i), 2) + o1;
      double t1 = radical_inverse(static_cast<uint64_t>(i), 3) + o2;
      double t2 = radical_inverse(static_cast<uint64_t>(i), 5) + o3;
      u -= std::floor(u);
      t1 -= std::floor(t1);
      t2 -= std::floor(t2);
      const double zc = 1.0 - 2.0 * u;
      const double rho = 2.0 * std::sqrt(std::max(0.0, u * (1.0 - u)));
      const double ang = 2.0 * kPi * (t1 - t2);
      acc += f.eval(rho * std::cos(ang), rho * std::sin(ang), zc);
    }
    estimates[static_cast<size_t>(sh)] = 2.0 * kPi * kPi * acc / static_cast<double>(per_shift);
  }
  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= shifts;
  double var = 0.0;
  for (double e : estimates) var += (e - mean) * (e - mean);
  var /= (shifts - 1);
  out.lhs = mean;
  out.standard_error = std::sqrt(var / shifts);

  // rhs: V * integral over the base sphere of radius 1/2, by
  // Gauss-Legendre in the height times uniform azimuth.
  const double fiber_volume = hopf_orbit_volume(sampler.quadrature_order);
  std::vector<double> nodes, weights;
  gauss_legendre(sampler.quadrature_order, nodes, weights);
  const int nphi = 2 * sampler.quadrature_order + 1;
  double integral_unit = 0.0;
  for (size_t q = 0; q < nodes.size(); ++q) {
    const double z = nodes[q];
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double ring = 0.0;
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2.0 * kPi * j / nphi;
      ring += f.eval(r * std::cos(phi), r * std::sin(phi), z);
    }
    integral_unit += weights[q] * ring * (2.0 * kPi / nphi);
  }
  out.rhs = fiber_volume * 0.25 * integral_unit; // area scales by radius^2 = 1/4
  return out;
}

} // namespace ymh
