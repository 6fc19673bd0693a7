#ifndef YMH_GAUGE_HPP
#define YMH_GAUGE_HPP

#include <vector>

#include "ymh/lie_algebra_spec.hpp"
#include "ymh/spectral_field.hpp"
#include "ymh/vector_field.hpp"

namespace ymh {

/// Lie-algebra valued field: m scalar components in the chosen basis.
struct GaugeField {
  std::vector<SpectralScalarField> comp;

  GaugeField() = default;
  GaugeField(const TorusGrid& grid, int m) {
    comp.assign(static_cast<size_t>(m), SpectralScalarField(grid));
  }

  const TorusGrid& grid() const { return comp.at(0).grid(); }
  int lie_dim() const { return static_cast<int>(comp.size()); }

  GaugeField& operator+=(const GaugeField& o) {
    for (size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
    return *this;
  }
  GaugeField& operator-=(const GaugeField& o) {
    for (size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
    return *this;
  }
  GaugeField& operator*=(double s) {
    for (auto& c : comp) c *= s;
    return *this;
  }
  void axpy(double a, const GaugeField& x) {
    for (size_t i = 0; i < comp.size(); ++i) comp[i].axpy(a, x.comp[i]);
  }
  void truncate(int kmax) {
    for (auto& c : comp) c.truncate(kmax);
  }

  friend GaugeField operator-(GaugeField a, const GaugeField& b) {
    a -= b;
    return a;
  }
  friend GaugeField operator+(GaugeField a, const GaugeField& b) {
    a += b;
    return a;
  }
  friend GaugeField operator*(double s, GaugeField a) {
    a *= s;
    return a;
  }
};

inline double max_abs(const GaugeField& f) {
  double m = 0.0;
  for (const auto& c : f.comp) m = std::max(m, max_abs(c));
  return m;
}

/// Local connection form coefficients A_i^a: one GaugeField per base axis.
struct GaugePotential {
  std::vector<GaugeField> axis;

  GaugePotential() = default;
  GaugePotential(const TorusGrid& grid, int m) {
    axis.assign(static_cast<size_t>(grid.dim), GaugeField(grid, m));
  }
  const TorusGrid& grid() const { return axis.at(0).grid(); }
  int lie_dim() const { return axis.at(0).lie_dim(); }
};

/// Antisymmetric curvature 2-form; only the strict upper triangle (i<j in
/// lexicographic order) is stored.
struct Curvature {
  int dim = 0;
  std::vector<GaugeField> upper;

  Curvature() = default;
  Curvature(const TorusGrid& grid, int m) : dim(grid.dim) {
    upper.assign(static_cast<size_t>(pair_count(grid.dim)), GaugeField(grid, m));
  }

  static int pair_count(int dim) { return dim * (dim - 1) / 2; }
  /// Index of the (i,j), i<j, slot: (0,1) -> 0, (0,2) -> 1, (1,2) -> 2.
  static int pair_index(int i, int j) { return i == 0 ? j - 1 : i + j - 1; }

  int lie_dim() const { return upper.at(0).lie_dim(); }

  /// Signed component as a field copy (test/API convenience).
  SpectralScalarField component(int i, int j, int a) const {
    if (i == j) return SpectralScalarField(upper.at(0).grid());
    const SpectralScalarField& f = upper.at(pair_index(std::min(i, j), std::max(i, j))).comp.at(a);
    return i < j ? f : -1.0 * f;
  }

  double max_abs_component() const {
    double m = 0.0;
    for (const auto& g : upper) m = std::max(m, max_abs(g));
    return m;
  }
};

/// Positive fiber-volume weight V on the base.
class WeightFunction {
public:
  WeightFunction() = default;
  static WeightFunction constant(const TorusGrid& grid, double value);
  /// Validates positivity at the collocation points.
  static WeightFunction from_field(SpectralScalarField v);

  const SpectralScalarField& field() const { return field_; }
  bool is_constant() const { return constant_; }
  double mean_value() const { return field_.mean(); }

private:
  SpectralScalarField field_;
  bool constant_ = true;
};

/// Omega_ij = d_i A_j - d_j A_i + [A_i, A_j], commutator dealiased.
Curvature curvature_from_potential(const GaugePotential& a, const LieAlgebraSpec& alg);

/// Action of the horizontal lift of X on a g-valued charge:
/// sum_i X_i d_i f + [A(X), f], all products dealiased.
GaugeField covariant_derivative(const VectorField& x, const GaugeField& f,
                                const GaugePotential& a, const LieAlgebraSpec& alg);

} // namespace ymh

#endif
