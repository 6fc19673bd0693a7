#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "support/test_helpers.hpp"
#include "ymh/spectral_field.hpp"
#include "ymh/vector_field.hpp"

using namespace ymh;
using namespace ymh::test;

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(TorusGrid(4, 32), ArgumentError);
  CHECK_THROWS_AS(TorusGrid(2, 17), ArgumentError);
  CHECK_THROWS_AS(TorusGrid(2, 4), ArgumentError);
  CHECK_THROWS_AS(TorusGrid(2, 32, -1.0), ArgumentError);
  TorusGrid g(3, 16, 1.0);
  CHECK(g.points() == 16 * 16 * 16);
  CHECK(g.spectral_size() == 16 * 16 * 9);
  CHECK(g.dealias_limit() == 5);
  CHECK(g.padded_n() == 24);
}

TEST_CASE("reality is structural: round trip through samples") {
  TorusGrid g(2, 16);
  SplitMix64 rng(7);
  auto f = SpectralScalarField::from_modes(g, random_modes(2, 5, 1.0, rng));
  auto back = SpectralScalarField::from_real(g, f.to_real());
  double err = 0.0;
  for (size_t i = 0; i < f.coeffs().size(); ++i)
    err = std::max(err, std::abs(f.coeffs()[i] - back.coeffs()[i]));
  CHECK(err < 1e-14);
}

TEST_CASE("derivative of sin(x) is cos(x) at all collocation points") {
  TorusGrid g(2, 16);
  SpectralScalarField f(g);
  f.add_cosine({1, 0, 0}, 1.0, -kPi / 2.0); // sin x
  auto d = derivative(f, 0);
  auto samples = d.to_real();
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const double x = g.length * i / g.n;
      CHECK(samples[static_cast<size_t>(i) * g.n + j] == doctest::Approx(std::cos(x)).epsilon(1e-13));
    }
}

TEST_CASE("derivative of a constant vanishes") {
  TorusGrid g(3, 8);
  auto f = SpectralScalarField::constant(g, 3.25);
  for (int axis = 0; axis < 3; ++axis) CHECK(max_abs(derivative(f, axis)) == 0.0);
}

TEST_CASE("derivative axis out of range") {
  TorusGrid g(2, 16);
  SpectralScalarField f(g);
  CHECK_THROWS_AS(derivative(f, 2), ArgumentError);
  CHECK_THROWS_AS(derivative(f, -1), ArgumentError);
}

TEST_CASE("derivative matches a 6th-order finite-difference oracle on a 4n grid") {
  const TorusGrid g(2, 32);
  SplitMix64 rng(42);
  auto modes = random_modes(2, g.n / 4, 1.0, rng);
  auto f = SpectralScalarField::from_modes(g, modes);
  auto d = derivative(f, 0);

  const int p = 4 * g.n;
  auto samples = sample_modes_2d(modes, p, g.length);
  const double h = g.length / p;
  double max_dev = 0.0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      auto at = [&](int ii) {
        return samples[static_cast<size_t>((ii % p + p) % p) * p + j];
      };
      const double fd = (at(i + 3) - at(i - 3) - 9.0 * (at(i + 2) - at(i - 2)) +
                         45.0 * (at(i + 1) - at(i - 1))) /
                        (60.0 * h);
      // direct summation of the implementation's output modes
      double impl = 0.0;
      for_each_mode(g, [&](long li, const std::array<int, 3>& k) {
        const std::complex<double> c = d.coeffs()[li];
        if (c == std::complex<double>(0.0)) return;
        const double phase = 2.0 * kPi * (static_cast<double>(k[0]) * i + k[1] * j) / p;
        impl += parseval_weight(g, k) *
                (c.real() * std::cos(phase) - c.imag() * std::sin(phase));
      });
      max_dev = std::max(max_dev, std::abs(impl - fd));
    }
  CHECK(max_dev <= 1e-8);
}

TEST_CASE("product with one is the identity on band-limited fields") {
  TorusGrid g(2, 32);
  SplitMix64 rng(3);
  auto b = SpectralScalarField::from_modes(g, random_modes(2, g.dealias_limit(), 1.0, rng));
  auto one = SpectralScalarField::constant(g, 1.0);
  auto p = dealiased_product(one, b);
  double err = 0.0;
  for (size_t i = 0; i < b.coeffs().size(); ++i)
    err = std::max(err, std::abs(p.coeffs()[i] - b.coeffs()[i]));
  CHECK(err < 1e-14);
}

TEST_CASE("sin(x) cos(x) = sin(2x)/2") {
  TorusGrid g(2, 16);
  SpectralScalarField s(g), c(g);
  s.add_cosine({1, 0, 0}, 1.0, -kPi / 2.0);
  c.add_cosine({1, 0, 0}, 1.0, 0.0);
  auto p = dealiased_product(s, c);
  CHECK(std::abs(p.mode({2, 0, 0}) - std::complex<double>(0.0, -0.25)) < 1e-14);
  SpectralScalarField want(g);
  want.add_cosine({2, 0, 0}, 0.5, -kPi / 2.0);
  CHECK(max_abs(p - want) < 1e-14);
}

TEST_CASE("product mismatch between grids is rejected") {
  TorusGrid a(2, 16), b(2, 32);
  CHECK_THROWS_AS(dealiased_product(SpectralScalarField(a), SpectralScalarField(b)),
                  ArgumentError);
}

TEST_CASE("dealiased product matches the exact pointwise product on a 4n grid") {
  const TorusGrid g(2, 32);
  SplitMix64 rng(11);
  auto ma = random_modes(2, g.n / 4, 1.0, rng);
  auto mb = random_modes(2, g.n / 4, 1.0, rng);
  auto fa = SpectralScalarField::from_modes(g, ma);
  auto fb = SpectralScalarField::from_modes(g, mb);
  auto prod = dealiased_product(fa, fb);

  // Oracle: sample both factors exactly, multiply pointwise, project the
  // result onto the stored band by a naive DFT.
  const int p = 4 * g.n;
  auto sa = sample_modes_2d(ma, p, g.length);
  auto sb = sample_modes_2d(mb, p, g.length);
  double scale = 0.0, err = 0.0;
  for_each_mode(g, [&](long li, const std::array<int, 3>& k) {
    if (std::abs(k[0]) > g.dealias_limit() || std::abs(k[1]) > g.dealias_limit()) {
      CHECK(prod.coeffs()[li] == std::complex<double>(0.0)); // truncation band
      return;
    }
    std::complex<double> acc = 0.0;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        const double phase = -2.0 * kPi * (static_cast<double>(k[0]) * i + k[1] * j) / p;
        acc += sa[static_cast<size_t>(i) * p + j] * sb[static_cast<size_t>(i) * p + j] *
               std::complex<double>(std::cos(phase), std::sin(phase));
      }
    acc /= static_cast<double>(p) * p;
    scale = std::max(scale, std::abs(acc));
    err = std::max(err, std::abs(acc - prod.coeffs()[li]));
  });
  CHECK(err / scale <= 1e-12);
}

TEST_CASE("integrate: constant against one") {
  TorusGrid g(2, 16);
  auto f = SpectralScalarField::constant(g, 2.5);
  auto one = SpectralScalarField::constant(g, 1.0);
  CHECK(integrate(f, one) == doctest::Approx(2.5 * g.volume()).epsilon(1e-14));
}

TEST_CASE("integrate: sin(x) has zero mean") {
  TorusGrid g(2, 16);
  SpectralScalarField f(g);
  f.add_cosine({1, 0, 0}, 1.0, -kPi / 2.0);
  auto one = SpectralScalarField::constant(g, 1.0);
  CHECK(std::abs(integrate(f, one)) < 1e-15);
}

TEST_CASE("integrate: sin^2(x) over T^2, with a trapezoid oracle") {
  TorusGrid g(2, 16);
  SpectralScalarField s(g);
  s.add_cosine({1, 0, 0}, 1.0, -kPi / 2.0);
  const double got = integrate(s, s);
  const double want = 0.5 * g.volume(); // frozen: (1/2)(2 pi)^2

  // Trapezoid quadrature of sin^2 at 4n points (exact for periodic
  // band-limited integrands).
  const int p = 4 * g.n;
  double quad = 0.0;
  for (int i = 0; i < p; ++i) {
    const double x = g.length * i / p;
    quad += std::sin(x) * std::sin(x);
  }
  quad *= g.length / p * g.length;
  CHECK(rel_err(got, want) < 1e-14);
  CHECK(rel_err(got, quad) < 1e-13);
}

TEST_CASE("Parseval: integrate(f, f) equals the spectral sum") {
  TorusGrid g(2, 32);
  SplitMix64 rng(5);
  auto f = SpectralScalarField::from_modes(g, random_modes(2, g.dealias_limit() / 2, 1.0, rng));
  CHECK(rel_err(integrate(f, f), l2_integral(f)) <= 1e-12);
}

TEST_CASE("derivative is linear and Leibniz holds on quarter-band inputs") {
  TorusGrid g(2, 32);
  SplitMix64 rng(9);
  // Quarter of the dealias band: the product rule stays dealias-exact.
  const int kq = g.dealias_limit() / 2;
  auto a = SpectralScalarField::from_modes(g, random_modes(2, kq, 1.0, rng));
  auto b = SpectralScalarField::from_modes(g, random_modes(2, kq, 1.0, rng));

  auto lin = derivative(a + b, 0) - derivative(a, 0) - derivative(b, 0);
  CHECK(max_abs(lin) < 1e-13);

  auto lhs = derivative(dealiased_product(a, b), 0);
  auto rhs = dealiased_product(derivative(a, 0), b) + dealiased_product(a, derivative(b, 0));
  const double scale = std::max(max_abs(lhs), 1e-30);
  CHECK(max_abs(lhs - rhs) / scale <= 1e-12);
}

TEST_CASE("vector calculus: divergence of a curl vanishes (3D)") {
  TorusGrid g(3, 16);
  SplitMix64 rng(13);
  VectorField v(g);
  for (int i = 0; i < 3; ++i)
    v.comp[static_cast<size_t>(i)] =
        SpectralScalarField::from_modes(g, random_modes(3, 4, 1.0, rng));
  CHECK(max_abs(divergence(curl_3d(v))) < 1e-12);
}
