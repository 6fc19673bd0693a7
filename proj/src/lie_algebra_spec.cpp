#include "ymh/lie_algebra_spec.hpp"

#include <cmath>
#include <cstddef>

namespace ymh {
namespace {

constexpr double kStructureTol = 1e-12;

} // namespace

LieAlgebraSpec::LieAlgebraSpec(int dim, std::vector<double> structure_constants,
                               std::vector<double> inner_product, bool require_ad_invariant)
    : dim_(dim), c_(std::move(structure_constants)), h_(std::move(inner_product)),
      ad_invariant_(require_ad_invariant) {
  if (dim_ < 1) throw ArgumentError("Lie algebra dimension must be positive");
  const size_t m = static_cast<size_t>(dim_);
  if (c_.size() != m * m * m) throw ArgumentError("structure constant array has wrong size");
  if (h_.size() != m * m) throw ArgumentError("inner product matrix has wrong size");

  // Antisymmetry in the first two indices.
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int e = 0; e < dim_; ++e)
        if (std::abs(c(a, b, e) + c(b, a, e)) > kStructureTol)
          throw ArgumentError("structure constants are not antisymmetric");

  // Jacobi: sum_e (C(a,b,e)C(e,c,d) + C(b,c,e)C(e,a,d) + C(c,a,e)C(e,b,d)) = 0.
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int cc = 0; cc < dim_; ++cc)
        for (int d = 0; d < dim_; ++d) {
          double s = 0.0;
          for (int e = 0; e < dim_; ++e)
            s += c(a, b, e) * c(e, cc, d) + c(b, cc, e) * c(e, a, d) + c(cc, a, e) * c(e, b, d);
          if (std::abs(s) > kStructureTol)
            throw ArgumentError("structure constants violate the Jacobi identity");
        }

  // Symmetry of h and Cholesky factorization (rejects non-SPD input).
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      if (std::abs(h(a, b) - h(b, a)) > kStructureTol)
        throw ArgumentError("inner product matrix is not symmetric");
  chol_.assign(m * m, 0.0);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = h(i, j);
      for (int k = 0; k < j; ++k) s -= chol_[i * m + k] * chol_[j * m + k];
      if (i == j) {
        if (s <= 0.0) throw ArgumentError("inner product matrix is not positive definite");
        chol_[i * m + i] = std::sqrt(s);
      } else {
        chol_[i * m + j] = s / chol_[j * m + j];
      }
    }
  }

  if (ad_invariant_) {
    // h([e_a,e_b], e_c) + h(e_b, [e_a,e_c]) = 0 for all basis triples.
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b)
        for (int cc = 0; cc < dim_; ++cc) {
          double s = 0.0;
          for (int e = 0; e < dim_; ++e) s += c(a, b, e) * h(e, cc) + c(a, cc, e) * h(b, e);
          if (std::abs(s) > kStructureTol)
            throw ArgumentError("inner product is not Ad-invariant for this algebra");
        }
  }

  hinv_.assign(m * m, 0.0);
  std::vector<double> unit(m, 0.0), col(m, 0.0);
  for (int j = 0; j < dim_; ++j) {
    unit.assign(m, 0.0);
    unit[j] = 1.0;
    raise_index(unit.data(), col.data());
    for (int i = 0; i < dim_; ++i) hinv_[i * m + j] = col[i];
  }

  abelian_ = true;
  for (double v : c_)
    if (v != 0.0) {
      abelian_ = false;
      break;
    }
}

LieAlgebraSpec LieAlgebraSpec::abelian() {
  return LieAlgebraSpec(1, std::vector<double>{0.0}, std::vector<double>{1.0}, true);
}

LieAlgebraSpec LieAlgebraSpec::su2() {
  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2; identity metric (Ad-invariant).
  std::vector<double> c(27, 0.0);
  auto set = [&](int a, int b, int e, double v) {
    c[(a * 3 + b) * 3 + e] = v;
    c[(b * 3 + a) * 3 + e] = -v;
  };
  set(0, 1, 2, 1.0);
  set(1, 2, 0, 1.0);
  set(2, 0, 1, 1.0);
  std::vector<double> h{1, 0, 0, 0, 1, 0, 0, 0, 1};
  return LieAlgebraSpec(3, std::move(c), std::move(h), true);
}

void LieAlgebraSpec::lower_index(const double* f, double* xi) const {
  for (int a = 0; a < dim_; ++a) {
    double s = 0.0;
    for (int b = 0; b < dim_; ++b) s += h(a, b) * f[b];
    xi[a] = s;
  }
}

void LieAlgebraSpec::raise_index(const double* xi, double* f) const {
  const size_t m = static_cast<size_t>(dim_);
  // Forward then back substitution with the Cholesky factor.
  for (int i = 0; i < dim_; ++i) {
    double s = xi[i];
    for (int k = 0; k < i; ++k) s -= chol_[i * m + k] * f[k];
    f[i] = s / chol_[i * m + i];
  }
  for (int i = dim_ - 1; i >= 0; --i) {
    double s = f[i];
    for (int k = i + 1; k < dim_; ++k) s -= chol_[k * m + i] * f[k];
    f[i] = s / chol_[i * m + i];
  }
}

} // namespace ymh
