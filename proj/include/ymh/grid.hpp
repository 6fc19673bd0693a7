#ifndef YMH_GRID_HPP
#define YMH_GRID_HPP

#include <array>
#include <cmath>
#include <numbers>

#include "ymh/errors.hpp"

namespace ymh {

/// Isotropic flat torus T^d, d in {2,3}: n collocation points and period
/// `length` along every axis. Axis 0 is x, axis 1 is y, axis 2 is z; real
/// samples are stored row-major (last axis fastest).
struct TorusGrid {
  int dim = 2;
  int n = 16;
  double length = 2.0 * std::numbers::pi;

  TorusGrid() = default;
  TorusGrid(int dim_, int n_, double length_ = 2.0 * std::numbers::pi)
      : dim(dim_), n(n_), length(length_) {
    if (dim != 2 && dim != 3) throw ArgumentError("grid dimension must be 2 or 3");
    if (n < 8 || (n & (n - 1)) != 0)
      throw ArgumentError("resolution must be a power of two >= 8");
    if (!(length > 0.0)) throw ArgumentError("grid period must be positive");
  }

  /// Number of real collocation points n^dim.
  long points() const {
    long p = 1;
    for (int i = 0; i < dim; ++i) p *= n;
    return p;
  }

  /// Number of stored complex modes in the half-spectrum layout.
  long spectral_size() const {
    long p = n / 2 + 1;
    for (int i = 0; i < dim - 1; ++i) p *= n;
    return p;
  }

  /// 2/3-rule cutoff: modes with any |k_i| > dealias_limit() are dropped
  /// after nonlinear operations.
  int dealias_limit() const { return n / 3; }

  /// Zero-padded grid size used for pointwise products.
  int padded_n() const { return 3 * n / 2; }

  /// Physical wavenumber of integer mode k.
  double wavenumber(int k) const { return 2.0 * std::numbers::pi * k / length; }

  double cell_volume() const { return std::pow(length / n, dim); }
  double volume() const { return std::pow(length, dim); }

  bool operator==(const TorusGrid& o) const {
    return dim == o.dim && n == o.n && length == o.length;
  }
};

inline void require_same_grid(const TorusGrid& a, const TorusGrid& b) {
  if (!(a == b)) throw ArgumentError("fields live on different grids");
}

} // namespace ymh

#endif
