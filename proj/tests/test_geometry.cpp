#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/test_helpers.hpp"
#include "ymh/gauge.hpp"
#include "ymh/geometry.hpp"
#include "ymh/hodge.hpp"
#include "ymh/hopf.hpp"

using namespace ymh;
using namespace ymh::test;

namespace {

LieAlgebraSpec su2_with_metric(std::vector<double> h, bool ad_invariant) {
  LieAlgebraSpec base = LieAlgebraSpec::su2();
  std::vector<double> c(27);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int e = 0; e < 3; ++e) c[(a * 3 + b) * 3 + e] = base.c(a, b, e);
  return LieAlgebraSpec(3, std::move(c), std::move(h), ad_invariant);
}

} // namespace

TEST_CASE("Lie algebra validation") {
  CHECK_NOTHROW(LieAlgebraSpec::su2());
  CHECK_NOTHROW(LieAlgebraSpec::abelian());

  // Broken antisymmetry.
  std::vector<double> c(27, 0.0);
  c[(0 * 3 + 1) * 3 + 2] = 1.0; // c(0,1,2) without the mirrored entry
  std::vector<double> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  CHECK_THROWS_WITH_AS(LieAlgebraSpec(3, c, id, false),
                       "structure constants are not antisymmetric", ArgumentError);

  // Antisymmetric but Jacobi-violating: [e3,e1] = e1 makes
  // [e2,[e3,e1]] + cyclic = -e3.
  std::vector<double> cj(27, 0.0);
  auto set = [&](int a, int b, int e, double v) {
    cj[(a * 3 + b) * 3 + e] = v;
    cj[(b * 3 + a) * 3 + e] = -v;
  };
  set(0, 1, 2, 1.0);
  set(1, 2, 0, 1.0);
  set(2, 0, 0, 1.0);
  CHECK_THROWS_WITH_AS(LieAlgebraSpec(3, cj, id, false),
                       "structure constants violate the Jacobi identity", ArgumentError);

  // Non-SPD metric.
  CHECK_THROWS_AS(su2_with_metric({1, 0, 0, 0, -1, 0, 0, 0, 1}, false), ArgumentError);

  // Identity metric is Ad-invariant for su(2); diag(2,1,1) is not.
  CHECK_NOTHROW(su2_with_metric({1, 0, 0, 0, 1, 0, 0, 0, 1}, true));
  CHECK_THROWS_AS(su2_with_metric({2, 0, 0, 0, 1, 0, 0, 0, 1}, true), ArgumentError);
  CHECK_NOTHROW(su2_with_metric({2, 0, 0, 0, 1, 0, 0, 0, 1}, false));
}

TEST_CASE("index raising and lowering are mutually inverse") {
  LieAlgebraSpec alg = su2_with_metric({2, 0.3, 0, 0.3, 1, 0, 0, 0, 1}, false);
  double f[3] = {0.7, -1.2, 0.4}, xi[3], back[3];
  alg.lower_index(f, xi);
  alg.raise_index(xi, back);
  for (int i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(f[i]).epsilon(1e-14));
}

TEST_CASE("curvature of a vanishing potential vanishes") {
  TorusGrid g(3, 16);
  GaugePotential a(g, 3);
  auto omega = curvature_from_potential(a, LieAlgebraSpec::su2());
  CHECK(omega.max_abs_component() == 0.0);
}

TEST_CASE("abelian curvature on T^3: A = (0, sin x, 0)") {
  TorusGrid g(3, 16);
  GaugePotential a(g, 1);
  a.axis[1].comp[0].add_cosine({1, 0, 0}, 1.0, -kPi / 2.0);
  auto omega = curvature_from_potential(a, LieAlgebraSpec::abelian());

  SpectralScalarField want(g);
  want.add_cosine({1, 0, 0}, 1.0, 0.0); // cos x
  CHECK(max_abs(omega.component(0, 1, 0) - want) < 1e-13);
  CHECK(max_abs(omega.component(0, 2, 0)) < 1e-14);
  CHECK(max_abs(omega.component(1, 2, 0)) < 1e-14);
  // Exactly dA: the commutator term is identically zero.
  auto da = derivative(a.axis[1].comp[0], 0) - derivative(a.axis[0].comp[0], 1);
  CHECK(max_abs(omega.component(0, 1, 0) - da) == 0.0);
}

TEST_CASE("su(2) curvature of a constant potential is the commutator") {
  TorusGrid g(2, 16);
  GaugePotential a(g, 3);
  a.axis[0].comp[0] = SpectralScalarField::constant(g, 1.0); // A_x = e_1
  a.axis[1].comp[1] = SpectralScalarField::constant(g, 1.0); // A_y = e_2
  auto omega = curvature_from_potential(a, LieAlgebraSpec::su2());
  CHECK(std::abs(omega.component(0, 1, 2).mean() - 1.0) < 1e-14); // e_3 slot
  CHECK(max_abs(omega.component(0, 1, 0)) < 1e-14);
  CHECK(max_abs(omega.component(0, 1, 1)) < 1e-14);
}

TEST_CASE("covariant derivative examples") {
  TorusGrid g(2, 16);
  LieAlgebraSpec su2 = LieAlgebraSpec::su2();

  SUBCASE("zero potential reduces to the directional derivative") {
    GaugePotential a(g, 1);
    VectorField x(g);
    x.comp[0] = SpectralScalarField::constant(g, 1.0);
    GaugeField f(g, 1);
    f.comp[0].add_cosine({1, 0, 0}, 1.0, -kPi / 2.0); // sin x
    auto d = covariant_derivative(x, f, a, LieAlgebraSpec::abelian());
    SpectralScalarField want(g);
    want.add_cosine({1, 0, 0}, 1.0, 0.0);
    CHECK(max_abs(d.comp[0] - want) < 1e-13);
  }

  SUBCASE("abelian constant charge has zero covariant derivative") {
    GaugePotential a(g, 1);
    SplitMix64 rng(21);
    a.axis[0].comp[0] = SpectralScalarField::from_modes(g, random_modes(2, 3, 1.0, rng));
    VectorField x(g);
    x.comp[0] = SpectralScalarField::from_modes(g, random_modes(2, 3, 1.0, rng));
    auto d = covariant_derivative(x, GaugeField(g, 1), a, LieAlgebraSpec::abelian());
    CHECK(max_abs(d) == 0.0);
    GaugeField fconst(g, 1);
    fconst.comp[0] = SpectralScalarField::constant(g, 2.0);
    auto d2 = covariant_derivative(x, fconst, a, LieAlgebraSpec::abelian());
    CHECK(max_abs(d2) < 1e-14);
  }

  SUBCASE("su(2) structure constants: X = e_x, f = e_2, A_x = e_1 gives e_3") {
    GaugePotential a(g, 3);
    a.axis[0].comp[0] = SpectralScalarField::constant(g, 1.0);
    VectorField x(g);
    x.comp[0] = SpectralScalarField::constant(g, 1.0);
    GaugeField f(g, 3);
    f.comp[1] = SpectralScalarField::constant(g, 1.0);
    auto d = covariant_derivative(x, f, a, su2);
    CHECK(std::abs(d.comp[2].mean() - 1.0) < 1e-14);
    CHECK(max_abs(d.comp[0]) < 1e-14);
    CHECK(max_abs(d.comp[1]) < 1e-14);
  }
}

TEST_CASE("Bianchi identity for a random band-limited su(2) potential (3D)") {
  TorusGrid g(3, 32);
  LieAlgebraSpec su2 = LieAlgebraSpec::su2();
  SplitMix64 rng(31);
  GaugePotential a(g, 3);
  // Third of the dealias band: nested products stay dealias-exact.
  const int ka = g.dealias_limit() / 3;
  for (int i = 0; i < 3; ++i)
    for (int e = 0; e < 3; ++e)
      a.axis[i].comp[e] = SpectralScalarField::from_modes(g, random_modes(3, ka, 1.0, rng));
  auto omega = curvature_from_potential(a, su2);

  // D_i Omega_jk + cyclic, with D the covariant derivative on 2-forms.
  auto cov = [&](int i, int j, int k) {
    GaugeField out(g, 3);
    for (int e = 0; e < 3; ++e) out.comp[e] = derivative(omega.component(j, k, e), i);
    for (int e = 0; e < 3; ++e)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
          const double cpq = su2.c(p, q, e);
          if (cpq == 0.0) continue;
          auto prod = dealiased_product(a.axis[i].comp[p], omega.component(j, k, q));
          prod *= cpq;
          out.comp[e] += prod;
        }
    return out;
  };
  GaugeField total = cov(0, 1, 2);
  total += cov(1, 2, 0);
  total += cov(2, 0, 1);
  const double scale = std::max(1.0, omega.max_abs_component());
  CHECK(max_abs(total) / scale <= 1e-10);
}

TEST_CASE("weight function validation") {
  TorusGrid g(2, 16);
  CHECK_THROWS_AS(WeightFunction::constant(g, -1.0), ArgumentError);
  SpectralScalarField v = SpectralScalarField::constant(g, 1.0);
  v.add_cosine({1, 0, 0}, 2.0, 0.0); // dips below zero
  CHECK_THROWS_AS(WeightFunction::from_field(v), ArgumentError);

  SpectralScalarField ok = SpectralScalarField::constant(g, 1.0);
  ok.add_cosine({1, 0, 0}, 0.5, 0.0);
  auto w = WeightFunction::from_field(ok);
  CHECK(!w.is_constant());
  CHECK(WeightFunction::constant(g, 2.0).is_constant());
}

TEST_CASE("weighted Poisson: trivial and single-mode solves") {
  TorusGrid g(2, 16);
  ProjectionWorkspace ws(g, WeightFunction::constant(g, 1.0));

  CHECK(max_abs(solve_weighted_poisson(SpectralScalarField(g), ws)) == 0.0);

  SpectralScalarField rhs(g);
  rhs.add_cosine({1, 0, 0}, -1.0, -kPi / 2.0); // -sin x
  auto p = solve_weighted_poisson(rhs, ws);
  SpectralScalarField want(g);
  want.add_cosine({1, 0, 0}, 1.0, -kPi / 2.0); // sin x
  CHECK(max_abs(p - want) < 1e-14);
}

TEST_CASE("weighted Poisson rejects nonzero-mean right-hand sides") {
  TorusGrid g(2, 16);
  ProjectionWorkspace ws(g, WeightFunction::constant(g, 1.0));
  auto rhs = SpectralScalarField::constant(g, 1.0);
  CHECK_THROWS_WITH_AS(solve_weighted_poisson(rhs, ws), "solvability requires zero mean",
                       ArgumentError);
}

TEST_CASE("variable-coefficient Poisson matches a dense solve of the same operator") {
  const TorusGrid g(2, 16);
  SpectralScalarField vf = SpectralScalarField::constant(g, 1.0);
  vf.add_cosine({1, 0, 0}, 0.5, 0.0); // V = 1 + 0.5 sin... (cos here; positive)
  ProjectionWorkspace ws(g, WeightFunction::from_field(vf), 1e-13, 2000);

  SplitMix64 rng(77);
  SpectralScalarField rhs = SpectralScalarField::from_modes(g, random_modes(2, 4, 1.0, rng));
  rhs.coeffs()[0] = 0.0;
  auto p = solve_weighted_poisson(rhs, ws);

  // The discretized operator acts on the zero-mean dealias band. Dense
  // assembly in the real cosine/sine basis of that subspace, applying the
  // same library operator column by column.
  const int kd = g.dealias_limit();
  struct Basis {
    std::array<int, 3> k;
    bool sine;
  };
  std::vector<Basis> basis;
  std::array<int, 3> k{0, 0, 0};
  for (k[0] = -kd; k[0] <= kd; ++k[0])
    for (k[1] = 0; k[1] <= kd; ++k[1]) {
      if (k[1] == 0 && k[0] <= 0) continue; // canonical half, no constant
      basis.push_back({k, false});
      basis.push_back({k, true});
    }
  const size_t nb = basis.size();
  auto to_field = [&](const std::vector<double>& coeff) {
    SpectralScalarField f(g);
    for (size_t i = 0; i < nb; ++i)
      f.add_cosine(basis[i].k, coeff[i], basis[i].sine ? -kPi / 2.0 : 0.0);
    return f;
  };
  auto to_coeff = [&](const SpectralScalarField& f) {
    std::vector<double> coeff(nb);
    for (size_t i = 0; i < nb; ++i) {
      const auto c = f.mode(basis[i].k);
      coeff[i] = basis[i].sine ? -2.0 * c.imag() : 2.0 * c.real();
    }
    return coeff;
  };
  auto apply = [&](const SpectralScalarField& pc) {
    SpectralScalarField app(g);
    for (int axis = 0; axis < 2; ++axis)
      app += derivative(dealiased_product(ws.weight.field(), derivative(pc, axis)), axis);
    return app;
  };

  std::vector<double> mat(nb * nb, 0.0);
  for (size_t col = 0; col < nb; ++col) {
    std::vector<double> unit(nb, 0.0);
    unit[col] = 1.0;
    auto out = to_coeff(apply(to_field(unit)));
    for (size_t row = 0; row < nb; ++row) mat[row * nb + col] = out[row];
  }
  auto dense = dense_solve(std::move(mat), to_coeff(rhs));
  auto pd = to_field(dense);

  CHECK(max_abs(p - pd) / std::max(max_abs(p), 1e-30) <= 1e-9);
}

TEST_CASE("weighted Poisson non-convergence reports a solver error") {
  TorusGrid g(2, 16);
  SpectralScalarField vf = SpectralScalarField::constant(g, 1.0);
  vf.add_cosine({1, 0, 0}, 0.5, 0.0);
  ProjectionWorkspace ws(g, WeightFunction::from_field(vf), 1e-14, 1);
  SplitMix64 rng(99);
  SpectralScalarField rhs = SpectralScalarField::from_modes(g, random_modes(2, 4, 1.0, rng));
  rhs.coeffs()[0] = 0.0;
  CHECK_THROWS_AS(solve_weighted_poisson(rhs, ws), SolverError);
}

TEST_CASE("Leray projection: kernel, fixed points and the classical formula") {
  const TorusGrid g(2, 32);
  ProjectionWorkspace ws(g, WeightFunction::constant(g, 1.0));
  SplitMix64 rng(55);

  SUBCASE("a pure gradient projects to zero") {
    auto q = SpectralScalarField::from_modes(g, random_modes(2, 6, 1.0, rng));
    VectorField gq = gradient(q);
    CHECK(max_abs(weighted_leray_project(gq, ws)) / std::max(max_abs(gq), 1e-30) <= 1e-12);
  }

  SUBCASE("divergence-free fields are unchanged") {
    auto psi = SpectralScalarField::from_modes(g, random_modes(2, 6, 1.0, rng));
    VectorField sol(g); // perpendicular gradient of a stream function
    sol.comp[0] = -1.0 * derivative(psi, 1);
    sol.comp[1] = derivative(psi, 0);
    auto proj = weighted_leray_project(sol, ws);
    CHECK(max_abs(proj - sol) / std::max(max_abs(sol), 1e-30) <= 1e-12);
  }

  SUBCASE("constant weight reproduces the closed-form spectral projector") {
    VectorField x(g);
    for (int i = 0; i < 2; ++i)
      x.comp[static_cast<size_t>(i)] = SpectralScalarField::from_modes(g, random_modes(2, 8, 1.0, rng));
    auto proj = weighted_leray_project(x, ws);
    double err = 0.0, scale = std::max(max_abs(x), 1e-30);
    for_each_mode(g, [&](long li, const std::array<int, 3>& k) {
      const double k0 = g.wavenumber(k[0]), k1 = g.wavenumber(k[1]);
      const double k2 = k0 * k0 + k1 * k1;
      std::complex<double> want0 = x.comp[0].coeffs()[li];
      std::complex<double> want1 = x.comp[1].coeffs()[li];
      if (k2 > 0.0) {
        const std::complex<double> kd = k0 * want0 + k1 * want1;
        want0 -= k0 * kd / k2;
        want1 -= k1 * kd / k2;
      }
      err = std::max(err, std::abs(proj.comp[0].coeffs()[li] - want0));
      err = std::max(err, std::abs(proj.comp[1].coeffs()[li] - want1));
    });
    CHECK(err / scale <= 1e-13);
  }
}

TEST_CASE("weighted projection: idempotence, orthogonality, linearity") {
  const TorusGrid g(2, 16);
  SpectralScalarField vf = SpectralScalarField::constant(g, 1.0);
  vf.add_cosine({1, 0, 0}, 0.4, 0.2);
  vf.add_cosine({0, 1, 0}, 0.2, -0.7);
  ProjectionWorkspace ws(g, WeightFunction::from_field(vf), 1e-13, 2000);
  SplitMix64 rng(101);

  VectorField x(g), y(g);
  for (int i = 0; i < 2; ++i) {
    x.comp[static_cast<size_t>(i)] = SpectralScalarField::from_modes(g, random_modes(2, 5, 1.0, rng));
    y.comp[static_cast<size_t>(i)] = SpectralScalarField::from_modes(g, random_modes(2, 5, 1.0, rng));
  }
  auto px = weighted_leray_project(x, ws);
  const double scale = std::max(max_abs(x), 1e-30);

  // The projected field is weighted-divergence-free.
  CHECK(max_abs(weighted_divergence(px, ws)) / scale <= 1e-10);

  // Idempotence.
  CHECK(max_abs(weighted_leray_project(px, ws) - px) / scale <= 1e-10);

  // V-weighted orthogonality of the two summands.
  VectorField grad_part = x - px;
  SpectralScalarField dot(g);
  for (int i = 0; i < 2; ++i)
    dot += dealiased_product(px.comp[static_cast<size_t>(i)], grad_part.comp[static_cast<size_t>(i)]);
  CHECK(std::abs(integrate(dot, ws.weight.field())) / (scale * scale * g.volume()) <= 1e-10);

  // Linearity.
  VectorField sum = x + y;
  auto psum = weighted_leray_project(sum, ws);
  auto indiv = weighted_leray_project(x, ws) + weighted_leray_project(y, ws);
  CHECK(max_abs(psum - indiv) / scale <= 1e-10);
}

TEST_CASE("spherical harmonics are orthonormal under the quadrature") {
  std::vector<double> nodes, weights;
  gauss_legendre(24, nodes, weights);
  const int nphi = 49;
  auto inner = [&](const SphericalFunction& f, const SphericalFunction& h) {
    double acc = 0.0;
    for (size_t q = 0; q < nodes.size(); ++q) {
      const double z = nodes[q];
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      for (int j = 0; j < nphi; ++j) {
        const double phi = 2.0 * kPi * j / nphi;
        acc += weights[q] * (2.0 * kPi / nphi) *
               f.eval(r * std::cos(phi), r * std::sin(phi), z) *
               h.eval(r * std::cos(phi), r * std::sin(phi), z);
      }
    }
    return acc;
  };
  for (int l = 0; l <= 8; l += 2)
    for (int m = -l; m <= l; m += std::max(1, l)) {
      SphericalFunction y({{l, m, 1.0}});
      CHECK(inner(y, y) == doctest::Approx(1.0).epsilon(1e-12));
    }
  CHECK(std::abs(inner(SphericalFunction({{2, 0, 1.0}}), SphericalFunction({{4, 0, 1.0}}))) <
        1e-12);
  CHECK(std::abs(inner(SphericalFunction({{3, 1, 1.0}}), SphericalFunction({{3, -1, 1.0}}))) <
        1e-12);
}

TEST_CASE("z-polynomial expansion evaluates correctly") {
  auto f = SphericalFunction::from_z_polynomial({0.5, -1.0, 2.0, 0.25}); // cubic in z
  SplitMix64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double r = std::sqrt(1.0 - z * z);
    const double want = 0.5 - z + 2.0 * z * z + 0.25 * z * z * z;
    CHECK(f.eval(r * std::cos(phi), r * std::sin(phi), z) ==
          doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("fiber volume: value, base independence and volume consistency") {
  const double v = hopf_orbit_volume();
  CHECK(std::abs(v - 2.0 * kPi) <= 1e-10);

  SplitMix64 rng(23);
  double vmin = v, vmax = v;
  for (int i = 0; i < 100; ++i) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double vi = hopf_orbit_volume_at({r * std::cos(phi), r * std::sin(phi), z}, 16);
    vmin = std::min(vmin, vi);
    vmax = std::max(vmax, vi);
  }
  CHECK(vmax - vmin <= 1e-10);

  // V * Vol(S^2(1/2)) = Vol(S^3): 2 pi * pi = 2 pi^2.
  CHECK(std::abs(v * kPi - 2.0 * kPi * kPi) <= 1e-10);
}

TEST_CASE("integration formula on the fibration") {
  HopfSampler sampler;
  sampler.samples = 200'000; // quick variant; the acceptance suite runs 1e6
  sampler.seed = 7;

  SUBCASE("f = 1 is exact on both sides") {
    auto r = hopf_integration_check(SphericalFunction::from_z_polynomial({1.0}), sampler);
    CHECK(std::abs(r.lhs - 2.0 * kPi * kPi) <= 1e-10);
    CHECK(std::abs(r.rhs - 2.0 * kPi * kPi) <= 1e-10);
  }

  SUBCASE("odd function integrates to zero within sampling error") {
    auto r = hopf_integration_check(SphericalFunction::from_z_polynomial({0.0, 1.0}), sampler);
    CHECK(std::abs(r.rhs) <= 1e-10);
    CHECK(std::abs(r.lhs) <= std::max(3.0 * r.standard_error, 1e-9));
  }

  SUBCASE("f = 1 + z^2 agrees within three standard errors") {
    auto r = hopf_integration_check(SphericalFunction::from_z_polynomial({1.0, 0.0, 1.0}), sampler);
    CHECK(std::abs(r.lhs - r.rhs) <= std::max(3.0 * r.standard_error, 1e-9 * std::abs(r.rhs)));
    // rhs oracle: integral of (1 + z^2) over S^2(1/2) times 2 pi equals
    // 2 pi * (1/4) * (4 pi + 4 pi / 3).
    const double want = 2.0 * kPi * 0.25 * (4.0 * kPi + 4.0 * kPi / 3.0);
    CHECK(r.rhs == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("sampler validation") {
  HopfSampler s;
  s.quadrature_order = 4;
  CHECK_THROWS_AS(s.validate(), ArgumentError);
}
