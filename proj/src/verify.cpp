#include "ymh/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "ymh/dynamics.hpp"
#include "ymh/hopf.hpp"

namespace ymh::verify {
namespace {

constexpr double kPi = std::numbers::pi;

// Stored field flattened to its nonzero modes for direct summation.
struct DirectField {
  struct Mode {
    std::array<int, 3> k;
    std::complex<double> c;
    double weight;
  };
  std::vector<Mode> modes;
  double two_pi_over_l = 1.0;
  int dim = 2;

  explicit DirectField(const SpectralScalarField& f) {
    const TorusGrid& g = f.grid();
    dim = g.dim;
    two_pi_over_l = 2.0 * kPi / g.length;
    for_each_mode(g, [&](long li, const std::array<int, 3>& k) {
      if (f.coeffs()[li] == std::complex<double>(0.0)) return;
      modes.push_back({k, f.coeffs()[li], parseval_weight(g, k)});
    });
  }

  double eval(const std::array<double, 3>& x) const {
    double acc = 0.0;
    for (const auto& m : modes) {
      double phase = 0.0;
      for (int i = 0; i < dim; ++i) phase += m.k[i] * x[i];
      phase *= two_pi_over_l;
      acc += m.weight * (m.c.real() * std::cos(phase) - m.c.imag() * std::sin(phase));
    }
    return acc;
  }

  double eval_derivative(const std::array<double, 3>& x, int axis) const {
    double acc = 0.0;
    for (const auto& m : modes) {
      double phase = 0.0;
      for (int i = 0; i < dim; ++i) phase += m.k[i] * x[i];
      phase *= two_pi_over_l;
      const double kappa = m.k[axis] * two_pi_over_l;
      // Re(i kappa c e^{i phase})
      acc += m.weight * kappa * (-m.c.imag() * std::cos(phase) - m.c.real() * std::sin(phase));
    }
    return acc;
  }
};

double norm_inf(const AlgebraElement& e) {
  return std::max(max_abs(e.velocity), max_abs(e.charge));
}

AlgebraElement jacobi_sum(const AlgebraElement& u, const AlgebraElement& v,
                          const AlgebraElement& w, const GaugeGeometry& geom) {
  AlgebraElement r = bracket(u, bracket(v, w, geom), geom);
  r.axpy(1.0, bracket(v, bracket(w, u, geom), geom));
  r.axpy(1.0, bracket(w, bracket(u, v, geom), geom));
  return r;
}

// su(2) geometry with a constant non-commuting potential; every bracket
// term is active and the bracket of half-band elements stays in band.
GaugeGeometry su2_constant_geometry(int n) {
  TorusGrid grid(2, n);
  GaugePotential a(grid, 3);
  a.axis[0].comp[0] = SpectralScalarField::constant(grid, 0.4);
  a.axis[1].comp[1] = SpectralScalarField::constant(grid, 0.3);
  return GaugeGeometry::from_potential(grid, LieAlgebraSpec::su2(), std::move(a),
                                       WeightFunction::constant(grid, 1.0));
}

GaugeGeometry su2_varying_geometry(int n, int kmax, SplitMix64& rng) {
  TorusGrid grid(2, n);
  GaugePotential a(grid, 3);
  for (int i = 0; i < 2; ++i)
    for (int e = 0; e < 3; ++e) a.axis[i].comp[e] = random_scalar(grid, kmax, 0.3, rng);
  return GaugeGeometry::from_potential(grid, LieAlgebraSpec::su2(), std::move(a),
                                       WeightFunction::constant(grid, 1.0));
}

GaugeGeometry abelian_varying_geometry(int n, int kmax, bool variable_weight, SplitMix64& rng) {
  TorusGrid grid(2, n);
  GaugePotential a(grid, 1);
  for (int i = 0; i < 2; ++i) a.axis[i].comp[0] = random_scalar(grid, kmax, 0.4, rng);
  WeightFunction w = WeightFunction::constant(grid, 1.0);
  if (variable_weight) {
    SpectralScalarField v = SpectralScalarField::constant(grid, 1.0);
    v.add_cosine({1, 1, 0}, 0.25, 0.4);
    v.add_cosine({0, 1, 0}, 0.15, -0.9);
    w = WeightFunction::from_field(std::move(v));
  }
  return GaugeGeometry::from_potential(grid, LieAlgebraSpec::abelian(), std::move(a), std::move(w),
                                       1e-13, 2000);
}

} // namespace

SpectralScalarField random_scalar(const TorusGrid& grid, int kmax, double amplitude,
                                  SplitMix64& rng) {
  SpectralScalarField f(grid);
  // One cosine per conjugate pair: first nonzero component positive.
  auto canonical = [&](const std::array<int, 3>& k) {
    for (int i = 0; i < grid.dim; ++i) {
      if (k[i] > 0) return true;
      if (k[i] < 0) return false;
    }
    return false; // exclude k = 0: mean-zero fields
  };
  std::array<int, 3> k{0, 0, 0};
  const int zmax = grid.dim == 3 ? kmax : 0;
  for (k[0] = -kmax; k[0] <= kmax; ++k[0])
    for (k[1] = -kmax; k[1] <= kmax; ++k[1])
      for (k[2] = -zmax; k[2] <= zmax; ++k[2]) {
        if (!canonical(k)) continue;
        const double k2 = static_cast<double>(k[0]) * k[0] + static_cast<double>(k[1]) * k[1] +
                          static_cast<double>(k[2]) * k[2];
        const double decay = std::pow(1.0 + k2, -3.0);
        f.add_cosine(k, amplitude * decay * rng.uniform(-1.0, 1.0), rng.uniform(0.0, 2.0 * kPi));
      }
  return f;
}

AlgebraElement random_element(const GaugeGeometry& geom, int kmax, double amplitude,
                              SplitMix64& rng) {
  const TorusGrid& grid = geom.grid();
  VectorField x(grid);
  for (int i = 0; i < grid.dim; ++i) x.comp[i] = random_scalar(grid, kmax, amplitude, rng);
  GaugeField f(grid, geom.algebra().dim());
  for (int a = 0; a < geom.algebra().dim(); ++a)
    f.comp[a] = random_scalar(grid, kmax, amplitude, rng);
  return make_algebra_element(geom, std::move(x), std::move(f));
}

double direct_eval(const SpectralScalarField& f, const std::array<double, 3>& x) {
  return DirectField(f).eval(x);
}

std::vector<CheckResult> algebra_bracket_checks(int resolution, uint64_t seed, int trials) {
  std::vector<CheckResult> out;
  GaugeGeometry geom = su2_constant_geometry(resolution);
  const TorusGrid& grid = geom.grid();
  // Half the dealias band: first-level products are then exact under the
  // 2/3 rule, which the oracle and the Jacobi identity both need.
  const int kin = grid.dealias_limit() / 2;
  SplitMix64 rng(seed ^ 0xa1b2c3d4e5f60718ULL);

  // Collocation points of the oversampled (4n) grid used by the oracle.
  const int oversample = 4 * grid.n;
  std::vector<std::array<double, 3>> points;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      points.push_back({grid.length * (i * (oversample / 8)) / oversample,
                        grid.length * (j * (oversample / 8)) / oversample, 0.0});
  for (int i = 0; i < 50; ++i) {
    const long a = static_cast<long>(rng.next() % static_cast<uint64_t>(oversample));
    const long b = static_cast<long>(rng.next() % static_cast<uint64_t>(oversample));
    points.push_back({grid.length * a / oversample, grid.length * b / oversample, 0.0});
  }

  double oracle_err = 0.0, antisym_err = 0.0, jacobi_err = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    AlgebraElement u = random_element(geom, kin, 1.0, rng);
    AlgebraElement v = random_element(geom, kin, 1.0, rng);
    AlgebraElement w = random_element(geom, kin, 1.0, rng);

    AlgebraElement bv = bracket(u, v, geom);
    const double scale = std::max({norm_inf(u) * norm_inf(v) * static_cast<double>(grid.n), 1e-30});

    // Oracle: every term by pointwise arithmetic at oversampled
    // collocation points, against the direct summation of the result.
    std::vector<DirectField> du, dv, fu, fv, rbase, rcharge;
    for (int i = 0; i < 2; ++i) {
      du.emplace_back(u.velocity.comp[i]);
      dv.emplace_back(v.velocity.comp[i]);
      rbase.emplace_back(bv.velocity.comp[i]);
    }
    for (int a = 0; a < 3; ++a) {
      fu.emplace_back(u.charge.comp[a]);
      fv.emplace_back(v.charge.comp[a]);
      rcharge.emplace_back(bv.charge.comp[a]);
    }
    const LieAlgebraSpec& alg = geom.algebra();
    for (const auto& x : points) {
      double zu[2], zv[2], dzu[4], dzv[4], cu[3], cv[3], dcu[6], dcv[6];
      for (int i = 0; i < 2; ++i) {
        zu[i] = du[i].eval(x);
        zv[i] = dv[i].eval(x);
        for (int j = 0; j < 2; ++j) {
          dzu[i * 2 + j] = du[j].eval_derivative(x, i);
          dzv[i * 2 + j] = dv[j].eval_derivative(x, i);
        }
      }
      for (int a = 0; a < 3; ++a) {
        cu[a] = fu[a].eval(x);
        cv[a] = fv[a].eval(x);
        for (int i = 0; i < 2; ++i) {
          dcu[i * 3 + a] = fu[a].eval_derivative(x, i);
          dcv[i * 3 + a] = fv[a].eval_derivative(x, i);
        }
      }
      const double a0 = 0.4, a1 = 0.3; // constant potential components
      const double azu[3] = {zu[0] * a0, zu[1] * a1, 0.0};
      const double azv[3] = {zv[0] * a0, zv[1] * a1, 0.0};
      const double womega = (zu[0] * zv[1] - zu[1] * zv[0]) * (a0 * a1); // Omega_01 = a0 a1 e_3

      for (int j = 0; j < 2; ++j) {
        double val = 0.0;
        for (int i = 0; i < 2; ++i) val -= zu[i] * dzv[i * 2 + j] - zv[i] * dzu[i * 2 + j];
        oracle_err = std::max(oracle_err, std::abs(val - rbase[j].eval(x)) / scale);
      }
      for (int e = 0; e < 3; ++e) {
        double val = 0.0;
        for (int p = 0; p < 3; ++p)
          for (int q = 0; q < 3; ++q) {
            const double cpq = alg.c(p, q, e);
            if (cpq == 0.0) continue;
            val += cpq * (cu[p] * cv[q] + azu[p] * cv[q] - azv[p] * cu[q]);
          }
        for (int i = 0; i < 2; ++i) val += zu[i] * dcv[i * 3 + e] - zv[i] * dcu[i * 3 + e];
        if (e == 2) val += womega;
        val = -val;
        oracle_err = std::max(oracle_err, std::abs(val - rcharge[e].eval(x)) / scale);
      }
    }

    // Structural antisymmetry.
    AlgebraElement self = bracket(u, u, geom);
    AlgebraElement anti = bracket(v, u, geom);
    anti.axpy(1.0, bv);
    antisym_err = std::max({antisym_err, norm_inf(self), norm_inf(anti)});

    // Jacobi residual, relative to the nested-bracket scale.
    AlgebraElement jac = jacobi_sum(u, v, w, geom);
    const double jscale =
        std::max(norm_inf(bracket(u, bracket(v, w, geom), geom)), 1e-30);
    jacobi_err = std::max(jacobi_err, norm_inf(jac) / jscale);
  }

  out.push_back({"bracket-collocation-oracle", oracle_err <= 1e-10, oracle_err, 1e-10,
                 std::to_string(trials) + " random half-band triples at n=" +
                     std::to_string(resolution)});
  out.push_back({"bracket-antisymmetry", antisym_err == 0.0, antisym_err, 0.0,
                 "bitwise-structural"});
  out.push_back({"bracket-jacobi", jacobi_err <= 1e-10, jacobi_err, 1e-10, "cyclic residual"});

  // A varying potential exercises the truncation path; the oracle is then
  // compared mode-by-mode on the stored band.
  {
    SplitMix64 rng2(seed ^ 0x5a5a5a5a12345678ULL);
    const int kin2 = kin;
    GaugeGeometry vg = su2_varying_geometry(resolution, kin2, rng2);
    double err = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      AlgebraElement u = random_element(vg, kin2, 1.0, rng2);
      AlgebraElement v = random_element(vg, kin2, 1.0, rng2);
      AlgebraElement bv = bracket(u, v, vg);
      const double scale =
          std::max(norm_inf(u) * norm_inf(v) * static_cast<double>(vg.grid().n), 1e-30);

      // Oracle values on the 4n grid.
      const int p = 4 * vg.grid().n;
      std::vector<DirectField> du, dv, fu, fv, apw, opw;
      for (int i = 0; i < 2; ++i) {
        du.emplace_back(u.velocity.comp[i]);
        dv.emplace_back(v.velocity.comp[i]);
      }
      for (int a = 0; a < 3; ++a) {
        fu.emplace_back(u.charge.comp[a]);
        fv.emplace_back(v.charge.comp[a]);
        opw.emplace_back(vg.curvature().upper[0].comp[a]);
      }
      for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 3; ++a) apw.emplace_back(vg.potential().axis[i].comp[a]);

      std::vector<std::vector<double>> base_vals(2), charge_vals(3);
      for (auto& vv : base_vals) vv.assign(static_cast<size_t>(p) * p, 0.0);
      for (auto& vv : charge_vals) vv.assign(static_cast<size_t>(p) * p, 0.0);
      const LieAlgebraSpec& alg = vg.algebra();
      for (int ix = 0; ix < p; ++ix)
        for (int iy = 0; iy < p; ++iy) {
          const std::array<double, 3> x{vg.grid().length * ix / p, vg.grid().length * iy / p, 0.0};
          double zu[2], zv[2], dzu[4], dzv[4], cu[3], cv[3], dcu[6], dcv[6], av[6], om[3];
          for (int i = 0; i < 2; ++i) {
            zu[i] = du[i].eval(x);
            zv[i] = dv[i].eval(x);
            for (int j = 0; j < 2; ++j) {
              dzu[i * 2 + j] = du[j].eval_derivative(x, i);
              dzv[i * 2 + j] = dv[j].eval_derivative(x, i);
            }
          }
          for (int a = 0; a < 3; ++a) {
            cu[a] = fu[a].eval(x);
            cv[a] = fv[a].eval(x);
            om[a] = opw[a].eval(x);
            for (int i = 0; i < 2; ++i) {
              dcu[i * 3 + a] = fu[a].eval_derivative(x, i);
              dcv[i * 3 + a] = fv[a].eval_derivative(x, i);
            }
          }
          for (int i = 0; i < 2; ++i)
            for (int a = 0; a < 3; ++a) av[i * 3 + a] = apw[i * 3 + a].eval(x);
          double azu[3], azv[3];
          for (int a = 0; a < 3; ++a) {
            azu[a] = zu[0] * av[0 * 3 + a] + zu[1] * av[1 * 3 + a];
            azv[a] = zv[0] * av[0 * 3 + a] + zv[1] * av[1 * 3 + a];
          }
          const double w01 = zu[0] * zv[1] - zu[1] * zv[0];
          const long idx = static_cast<long>(ix) * p + iy;
          for (int j = 0; j < 2; ++j) {
            double val = 0.0;
            for (int i = 0; i < 2; ++i) val -= zu[i] * dzv[i * 2 + j] - zv[i] * dzu[i * 2 + j];
            base_vals[j][idx] = val;
          }
          for (int e = 0; e < 3; ++e) {
            double val = 0.0;
            for (int pp = 0; pp < 3; ++pp)
              for (int q = 0; q < 3; ++q) {
                const double cpq = alg.c(pp, q, e);
                if (cpq == 0.0) continue;
                val += cpq * (cu[pp] * cv[q] + azu[pp] * cv[q] - azv[pp] * cu[q]);
              }
            for (int i = 0; i < 2; ++i) val += zu[i] * dcv[i * 3 + e] - zv[i] * dcu[i * 3 + e];
            val += w01 * om[e];
            charge_vals[e][idx] = -val;
          }
        }

      // Band-restricted naive DFT of the oracle values vs stored coeffs.
      auto compare = [&](const std::vector<double>& vals, const SpectralScalarField& impl) {
        const TorusGrid& g = vg.grid();
        const int kd = g.dealias_limit();
        for_each_mode(g, [&](long li, const std::array<int, 3>& k) {
          bool in_band = true;
          for (int i = 0; i < g.dim; ++i) in_band = in_band && std::abs(k[i]) <= kd;
          if (!in_band) return;
          std::complex<double> acc = 0.0;
          for (int ix = 0; ix < p; ++ix)
            for (int iy = 0; iy < p; ++iy) {
              const double phase = -2.0 * kPi * (static_cast<double>(k[0]) * ix + k[1] * iy) / p;
              acc += vals[static_cast<size_t>(ix) * p + iy] *
                     std::complex<double>(std::cos(phase), std::sin(phase));
            }
          acc /= static_cast<double>(p) * p;
          err = std::max(err, std::abs(acc - impl.coeffs()[li]) / scale);
        });
      };
      for (int j = 0; j < 2; ++j) compare(base_vals[j], bv.velocity.comp[j]);
      for (int e = 0; e < 3; ++e) compare(charge_vals[e], bv.charge.comp[e]);
    }
    out.push_back({"bracket-oracle-varying-potential", err <= 1e-10, err, 1e-10,
                   "mode-by-mode on the stored band"});
  }
  return out;
}

std::vector<CheckResult> coadjoint_duality_checks(int resolution, uint64_t seed, int trials) {
  std::vector<CheckResult> out;
  SplitMix64 rng(seed ^ 0xfeedfacecafebeefULL);

  struct Case {
    std::string name;
    GaugeGeometry geom;
  };
  std::vector<Case> cases;
  cases.push_back({"su2-varying-potential", su2_varying_geometry(resolution, 5, rng)});
  cases.push_back({"su2-constant-potential", su2_constant_geometry(resolution)});
  cases.push_back({"abelian-curvature", abelian_varying_geometry(resolution, 5, false, rng)});
  cases.push_back({"abelian-variable-weight", abelian_varying_geometry(resolution, 5, true, rng)});

  for (auto& cs : cases) {
    const int kin = cs.geom.grid().dealias_limit() / 2;
    double worst = 0.0;
    const int per_case = std::max(1, trials / static_cast<int>(cases.size()));
    for (int trial = 0; trial < per_case; ++trial) {
      AlgebraElement u = random_element(cs.geom, kin, 0.8, rng);
      AlgebraElement v = random_element(cs.geom, kin, 0.8, rng);
      AlgebraElement draw = random_element(cs.geom, kin, 0.8, rng);
      DualElement d = flat(draw, cs.geom);

      DualElement ad_star = coadjoint(u, d, cs.geom);
      AlgebraElement ad = bracket(u, v, cs.geom);
      const double p1 = pairing(ad_star, v, cs.geom);
      const double p2 = pairing(d, ad, cs.geom);
      // Scale of the integrands, not of the (heavily cancelling) pairings.
      const double vol = cs.geom.grid().volume();
      const double scale = std::max(
          {vol * (max_abs(d.momentum) * max_abs(ad.velocity) +
                  max_abs(d.charge_density) * max_abs(ad.charge)),
           std::abs(p1), std::abs(p2), 1e-30});
      worst = std::max(worst, std::abs(p1 + p2) / scale);
    }
    out.push_back({"coadjoint-duality-" + cs.name, worst <= 1e-10, worst, 1e-10,
                   std::to_string(per_case) + " instances"});
  }
  return out;
}

std::vector<CheckResult> hopf_checks(long samples, uint64_t seed) {
  std::vector<CheckResult> out;

  const double volume = hopf_orbit_volume();
  out.push_back({"fiber-volume", std::abs(volume - 2.0 * kPi) <= 1e-10,
                 std::abs(volume - 2.0 * kPi), 1e-10, "arc length vs 2 pi"});

  SplitMix64 rng(seed ^ 0x0ddba11c0ffee123ULL);
  double vmin = volume, vmax = volume;
  for (int i = 0; i < 100; ++i) {
    // Uniform direction via the cylinder map.
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double v = hopf_orbit_volume_at({r * std::cos(phi), r * std::sin(phi), z}, 32);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  out.push_back({"fiber-volume-base-independence", vmax - vmin <= 1e-10, vmax - vmin, 1e-10,
                 "spread over 100 base points"});

  const double consistency = std::abs(volume * kPi - 2.0 * kPi * kPi);
  out.push_back({"volume-consistency", consistency <= 1e-10, consistency, 1e-10,
                 "V x Vol(S^2(1/2)) vs Vol(S^3)"});

  HopfSampler sampler;
  sampler.samples = samples;
  sampler.seed = seed;
  struct Fn {
    std::string name;
    SphericalFunction f;
  };
  std::vector<Fn> fns;
  fns.push_back({"f=1", SphericalFunction::from_z_polynomial({1.0})});
  fns.push_back({"f=z", SphericalFunction::from_z_polynomial({0.0, 1.0})});
  fns.push_back({"f=z^2", SphericalFunction::from_z_polynomial({0.0, 0.0, 1.0})});
  fns.push_back({"f=1+z^2", SphericalFunction::from_z_polynomial({1.0, 0.0, 1.0})});
  fns.push_back({"f=Y21", SphericalFunction({{2, 1, 1.0}})});
  for (const auto& fn : fns) {
    HopfCheckResult r = hopf_integration_check(fn.f, sampler);
    const double bound = std::max(3.0 * r.standard_error, 1e-9 * (1.0 + std::abs(r.rhs)));
    const double err = std::abs(r.lhs - r.rhs);
    out.push_back({"integration-" + fn.name, err <= bound, err, bound,
                   "lhs=" + std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs) +
                       " se=" + std::to_string(r.standard_error)});
  }

  // f = 1 integrates exactly on both routes.
  HopfCheckResult one = hopf_integration_check(fns[0].f, sampler);
  const double exact = 2.0 * kPi * kPi;
  const double lhs_err = std::abs(one.lhs - exact);
  const double rhs_err = std::abs(one.rhs - exact);
  out.push_back({"integration-f=1-exact", lhs_err <= 1e-9 && rhs_err <= 1e-9,
                 std::max(lhs_err, rhs_err), 1e-9, "both sides vs 2 pi^2"});
  return out;
}

} // namespace ymh::verify
