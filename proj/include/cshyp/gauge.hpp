// SPDX-License-Identifier: MIT
#pragma once

#include <random>
#include <string>

#include "cshyp/forms.hpp"

namespace cshyp {

/// Smooth map from a coordinate patch into a matrix group, jet-evaluable.
struct GaugeMap {
  int n = 3;
  std::function<MatJ(const PointSpec&)> at;
};

/// a^{-1} da as a degree-1 matrix form on the first `dim` coordinates.
MatrixForm maurer_cartan(const GaugeMap& a, int dim);
/// da a^{-1} as a degree-1 matrix form.
MatrixForm right_log_derivative(const GaugeMap& a, int dim);
/// a^{-1} theta a + a^{-1} da.
MatrixForm gauge_transform(const MatrixForm& theta, const GaugeMap& a);

/// Rotation from an axis-angle vector (entire in the squared angle).
MatJ so3_exp(const Vec3<Jet>& v);
/// SU(2) element exp(i v.sigma-style) from a real 3-vector.
MatJ su2_exp(const Vec3<Jet>& v);
/// exp of a traceless complex 2x2 matrix.
MatJ sl2_exp(const MatJ& a);
/// Unit quaternion (w, v) -> SU(2) matrix.
MatJ quat_to_su2(const Jet& w, const Vec3<Jet>& v);
/// Unit quaternion (w, v) -> SO(3) rotation matrix.
MatJ quat_to_so3(const Jet& w, const Vec3<Jet>& v);

/// Adjoint image of a 2x2 traceless matrix in the fixed sl2 basis.
MatJ sl2_adjoint(const MatJ& u);

/// Integration chart for a closed oriented 3-manifold model.
struct Chart3 {
  std::string name;
  double lo[3], hi[3];
  bool periodic[3];
};
Chart3 torus_chart();
Chart3 sphere3_chart();

/// Built-in test maps for the degree integral.
GaugeMap builtin_const(int n);
GaugeMap builtin_quaternion_cover();   // on sphere3_chart, SO(3)-valued
GaugeMap builtin_torus_winding(int k); // on torus_chart, SU(2)-valued

/// (1/16 pi^2) Int Tr(-1/3 (a^{-1}da)^3) over the chart.
double wznw_degree(const GaugeMap& a, const Chart3& chart, int grid);

/// -1/(4 pi^2) Int_K Tr(-1/3 w_MC^3) over the compact stabilizer (expected 1).
double so3_normalization_integral(int grid);

/// Boundary 2-patch for the gauge cocycle (torus), with product extension.
struct CocycleConfig {
  int grid2 = 24;   // torus resolution
  int grid_s = 16;  // extension direction
};

/// exp(2 pi i [ (1/16pi^2) Int_M Tr(omega ^ da a^-1)
///            + (1/48pi^2) Int_X Tr((ext^-1 d ext)^3) ]).
/// `omega` lives on the 2-torus (dim 2); `a` on the torus; `ext` on the
/// 3-patch (y1,y2,s) in [0,1)^2 x [0,1] and must restrict to `a` at s=1.
cplx cocycle_value(const MatrixForm& omega, const GaugeMap& a, const GaugeMap& ext,
                   const CocycleConfig& cfg = {});

/// Random smooth fields for property tests (periodic on the unit torus).
GaugeMap random_so3_field(std::mt19937_64& rng, int dim);
GaugeMap random_su2_field(std::mt19937_64& rng, int dim);
GaugeMap random_sl2_field(std::mt19937_64& rng, int dim);
/// Extension of a random exponential field scaled by the last coordinate.
GaugeMap scaled_extension(const GaugeMap& a_exp_field);

/// Random matrix-valued 1-form with trig-polynomial coefficients.
/// kind: 0 = general gl(n), 1 = so(3)-valued (n=3), 2 = sl2-valued (n=2).
MatrixForm random_one_form(std::mt19937_64& rng, int dim, int n, int kind);

/// Sup over samples of |cs(gauged) - cs(theta) - d Tr(theta ^ da a^-1)
///                      + 1/3 Tr((a^-1 da)^3)|.
double gauge_cs_identity_residual(const MatrixForm& theta, const GaugeMap& a,
                                  const std::vector<PointSpec>& samples);

/// Sup over samples of |d/dt cs(theta_t) - d Tr(dtheta ^ theta) - 2 Tr(dtheta ^ Omega)|
/// where t is the last jet variable.
double variation_residual(const MatrixForm& theta_family,
                          const std::vector<PointSpec>& samples);

}  // namespace cshyp
