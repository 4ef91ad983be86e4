// SPDX-License-Identifier: MIT
#pragma once

#include "cshyp/forms.hpp"

namespace cshyp {

/// Christoffel symbols of a metric given as jets. `dim` is the number of
/// coordinate directions differentiated (the matrix may live in a larger jet
/// context). Gamma[k](i,j) has jets one order below g's.
std::array<MatJ, 4> christoffels(const MatJ& g, const MatJ& ginv, int dim);

/// (R(d_i, d_j) d_k)^l from Christoffels (one more order below).
/// Returns R[l] as dim x dim x dim nested access through a flat callback.
struct CurvatureJets {
  int dim = 3;
  // component (l, k, i, j): R(d_i,d_j)d_k = sum_l comp[...] d_l
  std::vector<Jet> c;
  Jet& at(int l, int k, int i, int j) { return c[((l * dim + k) * dim + i) * dim + j]; }
  const Jet& at(int l, int k, int i, int j) const {
    return c[((l * dim + k) * dim + i) * dim + j];
  }
};
CurvatureJets curvature_tensor(const MatJ& g, const MatJ& ginv, int dim);

/// Sectional curvature at a point from metric values and the curvature tensor.
double sectional_curvature_value(const MatC& g, const CurvatureJets& R,
                                 const std::vector<cplx>& U, const std::vector<cplx>& V);

}  // namespace cshyp
