#ifndef YMH_VECTOR_FIELD_HPP
#define YMH_VECTOR_FIELD_HPP

#include <vector>

#include "ymh/spectral_field.hpp"

namespace ymh {

/// d spectral scalar components on one shared grid.
struct VectorField {
  std::vector<SpectralScalarField> comp;

  VectorField() = default;
  explicit VectorField(const TorusGrid& grid) {
    comp.assign(static_cast<size_t>(grid.dim), SpectralScalarField(grid));
  }

  const TorusGrid& grid() const { return comp.at(0).grid(); }
  int dim() const { return static_cast<int>(comp.size()); }

  VectorField& operator+=(const VectorField& o) {
    for (size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    for (size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
    return *this;
  }
  VectorField& operator*=(double s) {
    for (auto& c : comp) c *= s;
    return *this;
  }
  void axpy(double a, const VectorField& x) {
    for (size_t i = 0; i < comp.size(); ++i) comp[i].axpy(a, x.comp[i]);
  }
  void truncate(int kmax) {
    for (auto& c : comp) c.truncate(kmax);
  }

  friend VectorField operator-(VectorField a, const VectorField& b) {
    a -= b;
    return a;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) {
    a += b;
    return a;
  }
  friend VectorField operator*(double s, VectorField a) {
    a *= s;
    return a;
  }
};

inline SpectralScalarField divergence(const VectorField& v) {
  SpectralScalarField out = derivative(v.comp[0], 0);
  for (int i = 1; i < v.dim(); ++i) out += derivative(v.comp[i], i);
  return out;
}

inline VectorField gradient(const SpectralScalarField& p) {
  VectorField out(p.grid());
  for (int i = 0; i < p.grid().dim; ++i) out.comp[i] = derivative(p, i);
  return out;
}

/// 2D: scalar vorticity dX2/dx - dX1/dy.
inline SpectralScalarField curl_2d(const VectorField& v) {
  return derivative(v.comp[1], 0) - derivative(v.comp[0], 1);
}

/// 3D: componentwise curl.
inline VectorField curl_3d(const VectorField& v) {
  VectorField out(v.grid());
  out.comp[0] = derivative(v.comp[2], 1) - derivative(v.comp[1], 2);
  out.comp[1] = derivative(v.comp[0], 2) - derivative(v.comp[2], 0);
  out.comp[2] = derivative(v.comp[1], 0) - derivative(v.comp[0], 1);
  return out;
}

inline double max_abs(const VectorField& v) {
  double m = 0.0;
  for (const auto& c : v.comp) m = std::max(m, max_abs(c));
  return m;
}

/// integral of |v|^2 via Parseval.
inline double l2_integral(const VectorField& v) {
  double acc = 0.0;
  for (const auto& c : v.comp) acc += l2_integral(c);
  return acc;
}

} // namespace ymh

#endif
