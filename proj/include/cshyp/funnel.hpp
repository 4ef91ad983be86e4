// SPDX-License-Identifier: MIT
#pragma once

#include "cshyp/expr.hpp"
#include "cshyp/forms.hpp"
#include "cshyp/geom.hpp"
#include "cshyp/quad.hpp"

namespace cshyp {

/// Boundary surface patch with a curvature -1 conformal factor.
struct HyperbolicPatch {
  double y1lo = 0.0, y1hi = 1.0;
  double y2lo = 1.0, y2hi = 2.0;
  bool periodic_y1 = false;
  std::string phi_src = "-log(y2)";
  Expr phi;  // vars (y1, y2)

  static HyperbolicPatch make(double y1lo, double y1hi, double y2lo, double y2hi,
                              bool periodic, const std::string& phi_src);
};

/// Holomorphic quadratic datum f(z); induces the trace-free tensor
/// k = Re(f dz^2) with components u = Re f, v = Im f,
/// k = u dy1^2 - u dy2^2 - 2 v dy1 dy2.
struct QuadDiff {
  std::string f_src = "0";
  double scale = 1.0;
  Expr f;  // var (z)

  static QuadDiff make(const std::string& f_src, double scale);
};

/// Surface data as jets: the boundary metric, the trace-free endomorphism
/// from the quadratic datum, and the trace assigned to the full endomorphism.
/// Coordinates (y1, y2) are jet variables 1 and 2 of the ambient context.
struct SurfaceJets {
  MatJ h0;     // 2x2
  MatJ K;      // 2x2 trace-free part of A
  Jet traceA;  // 1 for admissible data
  Jet phi;     // conformal factor when defined (used in reports)
};
using SurfaceFn = std::function<SurfaceJets(const std::vector<Jet>& coords)>;

/// End model: collar metric (dx^2 + h(x))/x^2 over a hyperbolic patch,
/// h(x) = h0((1+x^2 A/2).,(1+x^2 A/2).), A = trace/2 + K.
struct FunnelData {
  HyperbolicPatch patch;
  QuadDiff qd;
  double x0 = 0.5;
  double traceA = 1.0;  // the admissible value is 1; others are controls

  SurfaceFn surface() const;
};

struct FunnelChecks {
  double curvature_h0;   // max |K_gauss + 1|
  double cr_residual;    // Cauchy-Riemann residual of f
  double div_residual;   // divergence of k w.r.t. h0
  double min_b_eigen;    // min eigenvalue of 1 + x0^2 A / 2 over the patch
};

/// Validates invariants; throws on inadmissible data unless `bypass`
/// (controls with non-unit trace are built with bypass = true).
FunnelData make_funnel(const HyperbolicPatch& patch, const QuadDiff& qd, double x0,
                       double traceA = 1.0, bool bypass = false,
                       FunnelChecks* out_checks = nullptr);

/// Metric components of (dx^2 + h(x))/x^2 in coordinates (x, y1, y2).
MatC funnel_metric(const FunnelData& f, double x, double y1, double y2);
MatJ funnel_metric_jets(const SurfaceFn& surf, const PointSpec& p);

/// Frame data and connection forms at a point. Coordinates (x, y1, y2) are
/// jet variables 0..2; extra variables are spectators (family parameters).
struct FunnelForms {
  FormVal omega;      // so(3)-valued, frame of the collar metric
  FormVal omega_hat;  // frame of the compactified metric
  FormVal alpha;      // conformal-change form, omega_hat = omega + alpha
  FormVal T;          // cross-product form, T_ij(Y) = dvol(Y, S_i, S_j)
  MatJ S, Shat;       // frame columns (coordinate components)
  Jet dvol;           // sqrt det g
  Jet dvol_h0;        // boundary density sqrt det h0
  MatJ A;             // endomorphism
  MatJ h0;
  Jet traceA;
};
FunnelForms funnel_forms(const SurfaceFn& surf, const PointSpec& p);

/// The four connection forms packaged as matrix forms on (x, y1, y2).
MatrixForm funnel_omega_form(const FunnelData& f);
MatrixForm funnel_omegahat_form(const FunnelData& f);
MatrixForm funnel_alpha_form(const FunnelData& f);
MatrixForm funnel_T_form(const FunnelData& f);
/// omega + i T.
MatrixForm funnel_theta_form(const FunnelData& f);
/// volume density sqrt(det g) dx ^ dy1 ^ dy2 as a scalar 3-form.
MatrixForm funnel_dvol_form(const FunnelData& f);

double sectional_curvature(const FunnelData& f, double x, double y1, double y2,
                           const std::vector<cplx>& U, const std::vector<cplx>& V);

struct PatchGrid {
  std::vector<double> y1, wy1, y2, wy2;
};
PatchGrid patch_grid(const HyperbolicPatch& p, int n);

/// max over the sample grid of the two structure-equation residuals
/// |d omega + omega^2 - T^2| and |d T + T^omega + omega^T|.
double flatness_residual(const FunnelData& f, int grid = 4,
                         const std::vector<double>& xs = {0.12, 0.31, 0.47});

/// max pointwise norm of cs(omega + iT) - [8i dvol + i d Tr(T^omega)
///                                          + Tr(omega d omega + 2/3 omega^3)].
double cs_decomposition_residual(const FunnelData& f, int grid = 4,
                                 const std::vector<double>& xs = {0.12, 0.31, 0.47});

/// sup | Tr(T^3) - 6 dvol | over samples.
double t_cubed_residual(const FunnelData& f, int grid = 4,
                        const std::vector<double>& xs = {0.12, 0.31, 0.47});

/// sup | Tr(alpha ^ Omega) | over samples (Omega the curvature of omega).
double alpha_curvature_residual(const FunnelData& f, int grid = 3,
                                const std::vector<double>& xs = {0.12, 0.31});

/// sup | cs(ghat, Shat) - cs(g, S) - d Tr(alpha ^ omega) | over samples.
double conformal_change_residual(const FunnelData& f, int grid = 3,
                                 const std::vector<double>& xs = {0.12, 0.31});

// ---- rank-2 cusp model -----------------------------------------------------

/// Cusp model: metric dt^2 + e^{-2t} h on a torus with h constant positive;
/// the frame is parallel toward the cusp and twisted along the torus so that
/// the compactified connection form is nonzero.
struct CuspPatch {
  MatC h;       // 2x2 constant flat metric, h(0,0) = 1 normalization
  int twist = 1;  // frame rotation winding along y1

  static CuspPatch make(double h11, double h12, double h22, int twist = 1);
};

struct CuspReport {
  double cs_hat_sup;            // sup |cs(ghat, Shat)| over samples
  double slope_cs;              // log-log slope of |cs(g,S)|, expected -2
  double slope_alpha_omegahat;  // slope of |Tr(alpha ^ omega_hat)|, expected -1
  std::vector<double> ys;
  std::vector<double> cs_norm;
  std::vector<double> ao_norm;
};
CuspReport cusp_forms(const CuspPatch& c, const std::vector<double>& ys, int grid = 5);

}  // namespace cshyp
