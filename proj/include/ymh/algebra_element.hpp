#ifndef YMH_ALGEBRA_ELEMENT_HPP
#define YMH_ALGEBRA_ELEMENT_HPP

#include "ymh/geometry.hpp"

namespace ymh {

/// Element (X, f) of the product algebra: weighted-divergence-free base
/// velocity plus a g-valued charge field.
struct AlgebraElement {
  VectorField velocity;
  GaugeField charge;

  AlgebraElement() = default;
  AlgebraElement(VectorField x, GaugeField f)
      : velocity(std::move(x)), charge(std::move(f)) {}

  void axpy(double a, const AlgebraElement& o) {
    velocity.axpy(a, o.velocity);
    charge.axpy(a, o.charge);
  }
};

/// Regular-dual element ([alpha], xi): the 1-form class is carried by its
/// weighted-divergence-free representative, the charge density by its
/// basis components in the dual basis.
struct DualElement {
  VectorField momentum;
  GaugeField charge_density;

  DualElement() = default;
  DualElement(VectorField alpha, GaugeField xi)
      : momentum(std::move(alpha)), charge_density(std::move(xi)) {}
};

/// Band-limits the inputs, projects the base field, and checks the
/// incompressibility invariant.
AlgebraElement make_algebra_element(const GaugeGeometry& geom, VectorField x, GaugeField f);

/// Same for dual elements: the representative of [alpha] is the weighted
/// Leray projection of the raw 1-form components.
DualElement make_dual_element(const GaugeGeometry& geom, VectorField alpha, GaugeField xi);

/// Lie bracket of the automorphism algebra:
///   [(Z,f),(Z',f')] = -([Z,Z'], [f,f'] + D_Z f' - D_Z' f + Omega(Z,Z'))
/// with D the covariant derivative. Antisymmetry is structural; the base
/// part is re-projected only when the weight is non-constant.
AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v,
                       const GaugeGeometry& geom);

/// Inertia operator: index lowering by the flat base metric and h^g.
DualElement flat(const AlgebraElement& u, const GaugeGeometry& geom);

/// Inverse of flat; projects the base representative.
AlgebraElement sharp(const DualElement& d, const GaugeGeometry& geom);

/// <([alpha],xi),(X,f)> = integral alpha(X) V + integral (xi,f) V.
double pairing(const DualElement& d, const AlgebraElement& u, const GaugeGeometry& geom);

/// Coadjoint operator ad*(u) acting on the regular dual:
///   ( [-L_X alpha - (xi,Df)~ + (xi,i_X Omega)~] , -ad*(f)xi - D_X xi ).
/// Satisfies pairing(coadjoint(u,d), v) = -pairing(d, bracket(u,v)).
DualElement coadjoint(const AlgebraElement& u, const DualElement& d, const GaugeGeometry& geom);

/// max|div(V X)| of the base part, the incompressibility defect.
double incompressibility_defect(const VectorField& x, const GaugeGeometry& geom);

} // namespace ymh

#endif
