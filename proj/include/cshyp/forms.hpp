// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <vector>

#include "cshyp/linalg.hpp"

namespace cshyp {

/// Evaluation request: base coordinates for every jet variable plus the jet
/// order the caller needs. Coefficient callbacks may bump the order
/// internally when they differentiate.
struct PointSpec {
  std::vector<double> x;
  int order = 0;

  int nvars() const { return static_cast<int>(x.size()); }
  const JetSpace& space() const { return JetSpace::get(nvars(), order); }
  PointSpec with_order(int o) const {
    PointSpec p = *this;
    p.order = o;
    return p;
  }
  std::vector<Jet> seeded() const {
    const JetSpace& sp = space();
    std::vector<Jet> v;
    v.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i)
      v.push_back(Jet::variable(sp, static_cast<int>(i), x[i]));
    return v;
  }
};

using Combo = std::array<std::uint8_t, 4>;
int comb_count(int dim, int deg);
const std::vector<Combo>& combos(int dim, int deg);
int combo_index(int dim, int deg, const Combo& c);

/// Antisymmetric coefficients of a matrix-valued form on a coordinate patch,
/// stored on strictly increasing index tuples.
struct FormVal {
  int deg = 0, dim = 0, n = 0;
  std::vector<MatJ> comps;

  MatJ& comp(int k) { return comps[k]; }
  const MatJ& comp(int k) const { return comps[k]; }
};

/// Matrix-valued differential form as a coefficient callback. `dim` is the
/// patch dimension the indices range over; the jet context may carry extra
/// spectator variables (family parameters).
struct MatrixForm {
  int deg = 0, dim = 0, n = 0;
  std::function<FormVal(const PointSpec&)> coeff;

  FormVal operator()(const PointSpec& p) const { return coeff(p); }
};

FormVal wedge_val(const FormVal& a, const FormVal& b);
FormVal add_val(const FormVal& a, const FormVal& b);
FormVal scale_val(FormVal a, cplx s);
FormVal trace_val(const FormVal& a);

MatrixForm wedge(const MatrixForm& a, const MatrixForm& b);
MatrixForm exterior_d(const MatrixForm& w);
MatrixForm trace_form(const MatrixForm& a);
MatrixForm form_add(const MatrixForm& a, const MatrixForm& b);
MatrixForm form_sub(const MatrixForm& a, const MatrixForm& b);
MatrixForm form_scale(const MatrixForm& a, cplx s);

/// Tr(theta ^ d theta + 2/3 theta^3), a scalar-valued 3-form.
MatrixForm cs_form(const MatrixForm& theta);
/// d theta + theta ^ theta.
MatrixForm curvature_form(const MatrixForm& theta);

/// Evaluate a form value on concrete tangent vectors (columns of V).
MatC eval_on_vectors(const FormVal& w, const std::vector<std::vector<cplx>>& V);

/// Build a form from expression-like coefficient callbacks on jets
/// (used by tests and by random-form generators).
MatrixForm form_from_fn(int deg, int dim, int n,
                        std::function<FormVal(const PointSpec&)> f);

/// Sup over sample points of the entrywise absolute value of all components.
double sup_norm(const MatrixForm& w, const std::vector<PointSpec>& samples);

}  // namespace cshyp
