// SPDX-License-Identifier: MIT
#pragma once

#include "cshyp/forms.hpp"

namespace cshyp {

/// Fractional-linear map stored as a determinant-1 representative; g and -g
/// are the same map.
struct MoebiusMap {
  cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static MoebiusMap from_entries(cplx a, cplx b, cplx c, cplx d);
  MoebiusMap compose(const MoebiusMap& o) const;
  MoebiusMap inverse() const { return MoebiusMap{d, -b, -c, a}; }
  cplx trace() const { return a + d; }
  /// boundary action on the extended plane
  cplx apply(cplx z) const;
  bool approx_equal(const MoebiusMap& o, double tol) const;
};

struct H3Point {
  double y1 = 0.0, y2 = 0.0, y3 = 1.0;
};

double hyperbolic_distance(const H3Point& p, const H3Point& q);

/// Isometric action on the upper half space (quaternion arithmetic).
H3Point mobius_act_h3(const MoebiusMap& g, const H3Point& p);

/// Action with jets: input coordinate jets (y1, y2, y3), output the image
/// coordinates as jets of the same order.
Vec3<Jet> mobius_act_h3_jets(const MoebiusMap& g, const Vec3<Jet>& q);

/// Base point g.j together with the pushforward of the coordinate frame.
struct FrameAt {
  H3Point base;
  MatC frame;  // columns are the pushed-forward frame vectors
};
FrameAt frame_of(const MoebiusMap& g);

/// Traceless 2x2 generator of an infinitesimal isometry.
struct SL2Element {
  MatC h;
  static SL2Element from_matrix(const MatC& m);
};
/// The fixed basis with kappa_{h_k}(j) = 2 d/dy_k.
SL2Element sl2_basis(int k);

/// Complexified vector field on the upper half space: coordinate components
/// as jets of the requested order at the requested point.
using VectorFieldH3 = std::function<Vec3<Jet>(const PointSpec&)>;

/// Field of the infinitesimal isometry generated by h.
VectorFieldH3 killing_field(const SL2Element& h);
Vec3<cplx> killing_field_at(const SL2Element& h, const H3Point& q);

/// curl with respect to the hyperbolic metric and the fixed orientation.
Vec3<cplx> curl_h3(const VectorFieldH3& u, const H3Point& q);
VectorFieldH3 curl_field(const VectorFieldH3& u);

/// u + (i/2) curl(u).
VectorFieldH3 canonical_lift(const VectorFieldH3& u);

/// (nabla_U + i T(U)) s at q, with T(U)V = -U x V.
Vec3<cplx> complex_connection_apply(const Vec3<cplx>& U, const VectorFieldH3& s,
                                    const H3Point& q);

/// Hyperbolic cross product (complex-bilinear extension).
template <class T>
Vec3<T> cross_h3(const Vec3<T>& u, const Vec3<T>& v, const T& y3) {
  Vec3<T> r;
  r[0] = (u[1] * v[2] - u[2] * v[1]) / y3;
  r[1] = (u[2] * v[0] - u[0] * v[2]) / y3;
  r[2] = (u[0] * v[1] - u[1] * v[0]) / y3;
  return r;
}

/// Covariant derivative of a field along a constant direction U at q.
Vec3<cplx> covariant_derivative(const Vec3<cplx>& U, const VectorFieldH3& s,
                                const H3Point& q);

/// max |<nabla_i kappa, j> + <nabla_j kappa, i>| over coordinate pairs.
double killing_equation_residual(const VectorFieldH3& u, const H3Point& q);

}  // namespace cshyp
