#include "ymh/spectral_field.hpp"

#include <algorithm>
#include <cmath>

#include "ymh/fft.hpp"

namespace ymh {
namespace {

std::vector<int> real_dims(const TorusGrid& g) {
  return std::vector<int>(static_cast<size_t>(g.dim), g.n);
}

} // namespace

SpectralScalarField SpectralScalarField::from_real(const TorusGrid& grid,
                                                   const std::vector<double>& samples) {
  if (static_cast<long>(samples.size()) != grid.points())
    throw ArgumentError("sample count does not match grid");
  SpectralScalarField f(grid);
  fft::real_to_spectral(real_dims(grid), samples.data(), f.coeffs_.data());
  return f;
}

SpectralScalarField SpectralScalarField::from_modes(const TorusGrid& grid,
                                                    const std::vector<ModeEntry>& modes) {
  SpectralScalarField f(grid);
  for (const auto& m : modes) f.add_cosine(m.k, m.amplitude, m.phase);
  return f;
}

std::vector<double> SpectralScalarField::to_real() const {
  std::vector<double> samples(grid_.points());
  fft::spectral_to_real(real_dims(grid_), coeffs_.data(), samples.data());
  return samples;
}

namespace {

// Linear slot of a wavevector whose last component is already >= 0.
long slot_index(const TorusGrid& g, const std::array<int, 3>& k) {
  const int n = g.n;
  const int half = n / 2 + 1;
  auto wrap = [n](int k_i) { return k_i >= 0 ? k_i : k_i + n; };
  if (g.dim == 2) return static_cast<long>(wrap(k[0])) * half + k[1];
  return (static_cast<long>(wrap(k[0])) * n + wrap(k[1])) * half + k[2];
}

} // namespace

std::complex<double> SpectralScalarField::mode(std::array<int, 3> k) const {
  const int last = grid_.dim - 1;
  for (int i = 0; i < grid_.dim; ++i)
    if (std::abs(k[i]) > grid_.n / 2) throw ArgumentError("wavevector outside grid band");
  bool conj = k[last] < 0;
  if (conj)
    for (int i = 0; i < grid_.dim; ++i) k[i] = -k[i];
  std::complex<double> c = coeffs_[slot_index(grid_, k)];
  return conj ? std::conj(c) : c;
}

void SpectralScalarField::add_cosine(std::array<int, 3> k, double amplitude, double phase) {
  const int n = grid_.n;
  const int last = grid_.dim - 1;
  for (int i = 0; i < grid_.dim; ++i)
    if (std::abs(k[i]) > n / 2) throw ArgumentError("wavevector outside grid band");
  if (k[last] < 0) {
    for (int i = 0; i < grid_.dim; ++i) k[i] = -k[i];
    phase = -phase;
  }
  const std::complex<double> half_amp = 0.5 * amplitude * std::complex<double>(std::cos(phase), std::sin(phase));
  coeffs_[slot_index(grid_, k)] += half_amp;
  // The reflected mode is stored too when the last component sits on a
  // self-conjugate plane; it must receive the conjugate half.
  if (k[last] == 0 || k[last] == n / 2) {
    std::array<int, 3> mk = k;
    for (int i = 0; i < last; ++i) mk[i] = -mk[i];
    coeffs_[slot_index(grid_, mk)] += std::conj(half_amp);
  }
}

void SpectralScalarField::truncate(int kmax) {
  for_each_mode(grid_, [&](long li, const std::array<int, 3>& k) {
    for (int i = 0; i < grid_.dim; ++i) {
      if (std::abs(k[i]) > kmax) {
        coeffs_[li] = 0.0;
        return;
      }
    }
  });
}

SpectralScalarField& SpectralScalarField::operator+=(const SpectralScalarField& o) {
  require_same_grid(grid_, o.grid_);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

SpectralScalarField& SpectralScalarField::operator-=(const SpectralScalarField& o) {
  require_same_grid(grid_, o.grid_);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

SpectralScalarField& SpectralScalarField::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

void SpectralScalarField::axpy(double a, const SpectralScalarField& x) {
  require_same_grid(grid_, x.grid_);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * x.coeffs_[i];
}

SpectralScalarField derivative(const SpectralScalarField& f, int axis) {
  const TorusGrid& g = f.grid();
  if (axis < 0 || axis >= g.dim) throw ArgumentError("derivative axis out of range");
  SpectralScalarField out(g);
  const int nyquist = g.n / 2;
  for_each_mode(g, [&](long li, const std::array<int, 3>& k) {
    if (std::abs(k[axis]) == nyquist) {
      out.coeffs()[li] = 0.0;
      return;
    }
    out.coeffs()[li] = f.coeffs()[li] * std::complex<double>(0.0, g.wavenumber(k[axis]));
  });
  return out;
}

double spectral_dot(const SpectralScalarField& a, const SpectralScalarField& b) {
  require_same_grid(a.grid(), b.grid());
  double acc = 0.0;
  for_each_mode(a.grid(), [&](long li, const std::array<int, 3>& k) {
    acc += parseval_weight(a.grid(), k) *
           (a.coeffs()[li].real() * b.coeffs()[li].real() +
            a.coeffs()[li].imag() * b.coeffs()[li].imag());
  });
  return acc;
}

double max_abs(const SpectralScalarField& f) {
  auto samples = f.to_real();
  double m = 0.0;
  for (double v : samples) m = std::max(m, std::abs(v));
  return m;
}

SpectralScalarField dealiased_product(const SpectralScalarField& a, const SpectralScalarField& b) {
  require_same_grid(a.grid(), b.grid());
  PointwiseContext ctx(a.grid());
  auto ra = ctx.lift(a);
  auto rb = ctx.lift(b);
  for (long i = 0; i < ctx.points(); ++i) ra[i] *= rb[i];
  return ctx.lower(ra);
}

double integrate(const SpectralScalarField& f, const SpectralScalarField& w) {
  return f.grid().volume() * dealiased_product(f, w).mean();
}

PointwiseContext::PointwiseContext(const TorusGrid& grid) : grid_(grid) {
  padded_dims_.assign(static_cast<size_t>(grid.dim), grid.padded_n());
  padded_points_ = 1;
  for (int d : padded_dims_) padded_points_ *= d;
  padded_spectral_ = padded_points_ / padded_dims_.back() * (padded_dims_.back() / 2 + 1);
}

std::vector<std::complex<double>> PointwiseContext::lift_spectral(
    const SpectralScalarField& f) const {
  require_same_grid(grid_, f.grid());
  std::vector<std::complex<double>> padded(padded_spectral_);
  const int m = grid_.padded_n();
  const int mhalf = m / 2 + 1;
  const int nyquist = grid_.n / 2;
  auto wrap = [m](int k_i) { return k_i >= 0 ? k_i : k_i + m; };
  for_each_mode(grid_, [&](long li, const std::array<int, 3>& k) {
    // Axis-Nyquist content has no faithful padded image; stored fields are
    // band-limited below it.
    for (int i = 0; i < grid_.dim; ++i)
      if (std::abs(k[i]) == nyquist) return;
    long pj = grid_.dim == 2 ? static_cast<long>(wrap(k[0])) * mhalf + k[1]
                             : (static_cast<long>(wrap(k[0])) * m + wrap(k[1])) * mhalf + k[2];
    padded[pj] = f.coeffs()[li];
  });
  return padded;
}

std::vector<double> PointwiseContext::lift(const SpectralScalarField& f) const {
  auto padded = lift_spectral(f);
  std::vector<double> samples(padded_points_);
  fft::spectral_to_real(padded_dims_, padded.data(), samples.data());
  return samples;
}

std::vector<double> PointwiseContext::lift_derivative(const SpectralScalarField& f,
                                                      int axis) const {
  if (axis < 0 || axis >= grid_.dim) throw ArgumentError("derivative axis out of range");
  auto padded = lift_spectral(f);
  const int m = grid_.padded_n();
  const int mhalf = m / 2 + 1;
  auto signed_k = [m](int idx) { return idx <= m / 2 ? idx : idx - m; };
  long li = 0;
  if (grid_.dim == 2) {
    for (int i0 = 0; i0 < m; ++i0)
      for (int i2 = 0; i2 < mhalf; ++i2, ++li) {
        int k = axis == 0 ? signed_k(i0) : i2;
        padded[li] *= std::complex<double>(0.0, grid_.wavenumber(k));
      }
  } else {
    for (int i0 = 0; i0 < m; ++i0)
      for (int i1 = 0; i1 < m; ++i1)
        for (int i2 = 0; i2 < mhalf; ++i2, ++li) {
          int k = axis == 0 ? signed_k(i0) : (axis == 1 ? signed_k(i1) : i2);
          padded[li] *= std::complex<double>(0.0, grid_.wavenumber(k));
        }
  }
  std::vector<double> samples(padded_points_);
  fft::spectral_to_real(padded_dims_, padded.data(), samples.data());
  return samples;
}

SpectralScalarField PointwiseContext::lower(const std::vector<double>& samples) const {
  if (static_cast<long>(samples.size()) != padded_points_)
    throw ArgumentError("padded sample count mismatch");
  std::vector<std::complex<double>> padded(padded_spectral_);
  fft::real_to_spectral(padded_dims_, samples.data(), padded.data());

  SpectralScalarField out(grid_);
  const int m = grid_.padded_n();
  const int mhalf = m / 2 + 1;
  const int kd = grid_.dealias_limit();
  auto wrap = [m](int k_i) { return k_i >= 0 ? k_i : k_i + m; };
  for_each_mode(grid_, [&](long li, const std::array<int, 3>& k) {
    for (int i = 0; i < grid_.dim; ++i)
      if (std::abs(k[i]) > kd) return;
    long pj = grid_.dim == 2 ? static_cast<long>(wrap(k[0])) * mhalf + k[1]
                             : (static_cast<long>(wrap(k[0])) * m + wrap(k[1])) * mhalf + k[2];
    out.coeffs()[li] = padded[pj];
  });
  return out;
}

double PointwiseContext::integral(const std::vector<double>& samples) const {
  double acc = 0.0;
  for (double v : samples) acc += v;
  return acc / static_cast<double>(padded_points_) * grid_.volume();
}

} // namespace ymh
