#ifndef YMH_SPECTRAL_FIELD_HPP
#define YMH_SPECTRAL_FIELD_HPP

#include <array>
#include <complex>
#include <vector>

#include "ymh/grid.hpp"

namespace ymh {

/// One Fourier mode of a real field: amplitude * cos(2pi k.x/L + phase).
struct ModeEntry {
  std::array<int, 3> k{0, 0, 0};
  double amplitude = 0.0;
  double phase = 0.0;
};

/// Real scalar field on a flat torus, stored as truncated Fourier
/// coefficients in the half-spectrum (r2c) layout. Reality of the field is
/// structural: the conjugate half is never stored.
class SpectralScalarField {
public:
  SpectralScalarField() = default;
  explicit SpectralScalarField(const TorusGrid& grid)
      : grid_(grid), coeffs_(grid.spectral_size()) {}

  static SpectralScalarField constant(const TorusGrid& grid, double value) {
    SpectralScalarField f(grid);
    f.coeffs_[0] = value;
    return f;
  }
  static SpectralScalarField from_real(const TorusGrid& grid, const std::vector<double>& samples);
  static SpectralScalarField from_modes(const TorusGrid& grid, const std::vector<ModeEntry>& modes);

  const TorusGrid& grid() const { return grid_; }
  std::vector<std::complex<double>>& coeffs() { return coeffs_; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  /// Collocation samples, row-major, n^dim values.
  std::vector<double> to_real() const;

  /// Coefficient of exp(i k.x 2pi/L); resolves conjugate lookups.
  std::complex<double> mode(std::array<int, 3> k) const;

  /// Adds amplitude * cos(2pi k.x/L + phase).
  void add_cosine(std::array<int, 3> k, double amplitude, double phase);

  /// Zeroes every mode with any |k_i| > kmax.
  void truncate(int kmax);

  double mean() const { return coeffs_[0].real(); }

  SpectralScalarField& operator+=(const SpectralScalarField& o);
  SpectralScalarField& operator-=(const SpectralScalarField& o);
  SpectralScalarField& operator*=(double s);
  /// this += a * x
  void axpy(double a, const SpectralScalarField& x);

  friend SpectralScalarField operator+(SpectralScalarField a, const SpectralScalarField& b) {
    a += b;
    return a;
  }
  friend SpectralScalarField operator-(SpectralScalarField a, const SpectralScalarField& b) {
    a -= b;
    return a;
  }
  friend SpectralScalarField operator*(double s, SpectralScalarField a) {
    a *= s;
    return a;
  }

private:
  TorusGrid grid_;
  std::vector<std::complex<double>> coeffs_;
};

/// Visits every stored mode as (linear index, signed wavevector). The last
/// axis holds only k >= 0; non-last axes store n/2 as +n/2.
template <typename F>
void for_each_mode(const TorusGrid& grid, F&& fn) {
  const int n = grid.n;
  const int half = n / 2 + 1;
  auto signed_k = [n](int idx) { return idx <= n / 2 ? idx : idx - n; };
  long li = 0;
  if (grid.dim == 2) {
    for (int i0 = 0; i0 < n; ++i0) {
      const int k0 = signed_k(i0);
      for (int i2 = 0; i2 < half; ++i2, ++li) fn(li, std::array<int, 3>{k0, i2, 0});
    }
  } else {
    for (int i0 = 0; i0 < n; ++i0) {
      const int k0 = signed_k(i0);
      for (int i1 = 0; i1 < n; ++i1) {
        const int k1 = signed_k(i1);
        for (int i2 = 0; i2 < half; ++i2, ++li) fn(li, std::array<int, 3>{k0, k1, i2});
      }
    }
  }
}

/// d/dx_axis, exact in spectral space. Axis-Nyquist modes are zeroed (they
/// have no representable odd partner); band-limited fields are unaffected.
SpectralScalarField derivative(const SpectralScalarField& f, int axis);

/// Pointwise product evaluated on the 3n/2 zero-padded grid and truncated
/// back to the 2/3 band. Exact truncation of the true product for stored
/// (half-band) inputs.
SpectralScalarField dealiased_product(const SpectralScalarField& a, const SpectralScalarField& b);

/// integral of f * w over the torus: L^d times the zero mode of the
/// dealiased product.
double integrate(const SpectralScalarField& f, const SpectralScalarField& w);

/// integral of f alone (weight 1).
inline double integrate(const SpectralScalarField& f) { return f.grid().volume() * f.mean(); }

/// Parseval weight of a stored slot: 2 when the conjugate partner is
/// implicit, 1 on the self-conjugate planes.
inline double parseval_weight(const TorusGrid& grid, const std::array<int, 3>& k) {
  const int last = grid.dim - 1;
  return (k[last] == 0 || k[last] == grid.n / 2) ? 1.0 : 2.0;
}

/// sum_k w_k Re(a_k conj(b_k)) = (1/L^d) integral a*b for band-limited inputs.
double spectral_dot(const SpectralScalarField& a, const SpectralScalarField& b);

/// integral of f^2 via Parseval.
inline double l2_integral(const SpectralScalarField& f) {
  return f.grid().volume() * spectral_dot(f, f);
}

double max_abs(const SpectralScalarField& f);

/// Pointwise work area on the dealiasing grid: lift fields to padded real
/// samples, do arbitrary pointwise algebra, lower results back with one
/// truncation. Lifting and lowering are exact on the stored band.
class PointwiseContext {
public:
  explicit PointwiseContext(const TorusGrid& grid);

  long points() const { return padded_points_; }
  const TorusGrid& grid() const { return grid_; }

  std::vector<double> lift(const SpectralScalarField& f) const;
  std::vector<double> lift_derivative(const SpectralScalarField& f, int axis) const;
  SpectralScalarField lower(const std::vector<double>& samples) const;

  /// Exact integral over the torus of the (band-limited) pointwise data.
  double integral(const std::vector<double>& samples) const;

private:
  std::vector<std::complex<double>> lift_spectral(const SpectralScalarField& f) const;

  TorusGrid grid_;
  std::vector<int> padded_dims_;
  long padded_points_ = 0;
  long padded_spectral_ = 0;
};

} // namespace ymh

#endif
