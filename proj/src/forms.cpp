// SPDX-License-Identifier: MIT
#include "cshyp/forms.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cshyp {

namespace {

std::vector<Combo> make_combos(int dim, int deg) {
  std::vector<Combo> out;
  if (deg == 0) {
    out.push_back(Combo{});
    return out;
  }
  if (deg > dim) return out;
  Combo c{};
  for (int i = 0; i < deg; ++i) c[i] = static_cast<std::uint8_t>(i);
  for (;;) {
    out.push_back(c);
    int i = deg - 1;
    while (i >= 0 && c[i] == dim - deg + i) --i;
    if (i < 0) break;
    c[i]++;
    for (int j = i + 1; j < deg; ++j) c[j] = static_cast<std::uint8_t>(c[j - 1] + 1);
  }
  return out;
}

struct ComboCache {
  std::map<std::pair<int, int>, std::vector<Combo>> table;
  std::mutex mu;
  const std::vector<Combo>& get(int dim, int deg) {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(dim, deg);
    auto it = table.find(key);
    if (it == table.end()) it = table.emplace(key, make_combos(dim, deg)).first;
    return it->second;
  }
};

ComboCache& combo_cache() {
  static ComboCache c;
  return c;
}

// sign of the permutation sorting (left, right) concatenation, or 0 on repeats
int merge_sign(const Combo& l, int p, const Combo& r, int q, Combo& merged) {
  std::array<std::uint8_t, 8> idx{};
  for (int i = 0; i < p; ++i) idx[i] = l[i];
  for (int j = 0; j < q; ++j) idx[p + j] = r[j];
  int m = p + q;
  int sign = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  }
  for (int i = 0; i < m; ++i) merged[i] = idx[i];
  return sign;
}

}  // namespace

int comb_count(int dim, int deg) {
  return static_cast<int>(combos(dim, deg).size());
}

const std::vector<Combo>& combos(int dim, int deg) { return combo_cache().get(dim, deg); }

int combo_index(int dim, int deg, const Combo& c) {
  const auto& list = combos(dim, deg);
  for (size_t k = 0; k < list.size(); ++k) {
    bool eq = true;
    for (int i = 0; i < deg; ++i)
      if (list[k][i] != c[i]) {
        eq = false;
        break;
      }
    if (eq) return static_cast<int>(k);
  }
  throw std::invalid_argument("combo not found");
}

FormVal wedge_val(const FormVal& a, const FormVal& b) {
  if (a.dim != b.dim || a.n != b.n) throw std::invalid_argument("wedge: mismatched forms");
  FormVal r;
  r.deg = a.deg + b.deg;
  r.dim = a.dim;
  r.n = a.n;
  if (r.deg > r.dim) return r;  // identically zero, no components
  const auto& ca = combos(a.dim, a.deg);
  const auto& cb = combos(b.dim, b.deg);
  int nc = comb_count(r.dim, r.deg);
  r.comps.resize(nc);
  std::vector<char> init(nc, 0);
  Combo merged{};
  for (size_t ia = 0; ia < ca.size(); ++ia) {
    for (size_t ib = 0; ib < cb.size(); ++ib) {
      int s = merge_sign(ca[ia], a.deg, cb[ib], b.deg, merged);
      if (s == 0) continue;
      MatJ prod = a.comps[ia] * b.comps[ib];
      if (s < 0) prod = -prod;
      int k = combo_index(r.dim, r.deg, merged);
      if (!init[k]) {
        r.comps[k] = prod;
        init[k] = 1;
      } else {
        r.comps[k] += prod;
      }
    }
  }
  return r;
}

FormVal add_val(const FormVal& a, const FormVal& b) {
  FormVal r = a;
  for (size_t k = 0; k < r.comps.size(); ++k) r.comps[k] += b.comps[k];
  return r;
}

FormVal scale_val(FormVal a, cplx s) {
  for (auto& m : a.comps) m = m * s;
  return a;
}

FormVal trace_val(const FormVal& a) {
  FormVal r;
  r.deg = a.deg;
  r.dim = a.dim;
  r.n = 1;
  r.comps.resize(a.comps.size());
  for (size_t k = 0; k < a.comps.size(); ++k) {
    MatJ m(1);
    m(0, 0) = a.comps[k].trace();
    r.comps[k] = m;
  }
  return r;
}

MatrixForm wedge(const MatrixForm& a, const MatrixForm& b) {
  if (a.dim != b.dim || a.n != b.n) throw std::invalid_argument("wedge: mismatched forms");
  if (a.deg + b.deg > a.dim) throw std::invalid_argument("wedge: degree exceeds patch dimension");
  MatrixForm r;
  r.deg = a.deg + b.deg;
  r.dim = a.dim;
  r.n = a.n;
  auto fa = a.coeff, fb = b.coeff;
  r.coeff = [fa, fb](const PointSpec& p) { return wedge_val(fa(p), fb(p)); };
  return r;
}

MatrixForm exterior_d(const MatrixForm& w) {
  MatrixForm r;
  r.dim = w.dim;
  r.n = w.n;
  r.deg = w.deg + 1;
  if (r.deg > r.dim) {
    // degree above patch dimension: identically zero form
    int dim = w.dim, n = w.n, deg = r.deg;
    r.coeff = [dim, n, deg](const PointSpec& p) {
      FormVal v;
      v.deg = deg;
      v.dim = dim;
      v.n = n;
      return v;
    };
    return r;
  }
  auto f = w.coeff;
  int wdeg = w.deg, dim = w.dim, n = w.n;
  r.coeff = [f, wdeg, dim, n](const PointSpec& p) {
    FormVal inner = f(p.with_order(p.order + 1));
    FormVal out;
    out.deg = wdeg + 1;
    out.dim = dim;
    out.n = n;
    const auto& ctarget = combos(dim, wdeg + 1);
    out.comps.resize(ctarget.size());
    for (size_t k = 0; k < ctarget.size(); ++k) {
      const Combo& K = ctarget[k];
      MatJ acc;
      bool first = true;
      for (int a = 0; a <= wdeg; ++a) {
        Combo sub{};
        for (int i = 0, j = 0; i <= wdeg; ++i)
          if (i != a) sub[j++] = K[i];
        int src = combo_index(dim, wdeg, sub);
        const MatJ& m = inner.comps[src];
        MatJ dm(m.n);
        for (int e = 0; e < m.n * m.n; ++e) dm.a[e] = m.a[e].derivative(K[a]);
        if (a % 2 == 1) dm = -dm;
        if (first) {
          acc = dm;
          first = false;
        } else {
          acc += dm;
        }
      }
      out.comps[k] = acc;
    }
    return out;
  };
  return r;
}

MatrixForm trace_form(const MatrixForm& a) {
  MatrixForm r;
  r.deg = a.deg;
  r.dim = a.dim;
  r.n = 1;
  auto f = a.coeff;
  r.coeff = [f](const PointSpec& p) { return trace_val(f(p)); };
  return r;
}

MatrixForm form_add(const MatrixForm& a, const MatrixForm& b) {
  MatrixForm r = a;
  auto fa = a.coeff, fb = b.coeff;
  r.coeff = [fa, fb](const PointSpec& p) { return add_val(fa(p), fb(p)); };
  return r;
}

MatrixForm form_sub(const MatrixForm& a, const MatrixForm& b) {
  return form_add(a, form_scale(b, cplx(-1.0)));
}

MatrixForm form_scale(const MatrixForm& a, cplx s) {
  MatrixForm r = a;
  auto f = a.coeff;
  r.coeff = [f, s](const PointSpec& p) { return scale_val(f(p), s); };
  return r;
}

MatrixForm cs_form(const MatrixForm& theta) {
  if (theta.deg != 1) throw std::invalid_argument("cs form needs a degree-1 argument");
  MatrixForm t1 = trace_form(wedge(theta, exterior_d(theta)));
  MatrixForm t2 = trace_form(wedge(theta, wedge(theta, theta)));
  return form_add(t1, form_scale(t2, cplx(2.0 / 3.0)));
}

MatrixForm curvature_form(const MatrixForm& theta) {
  if (theta.deg != 1) throw std::invalid_argument("curvature needs a degree-1 argument");
  return form_add(exterior_d(theta), wedge(theta, theta));
}

MatC eval_on_vectors(const FormVal& w, const std::vector<std::vector<cplx>>& V) {
  if (static_cast<int>(V.size()) != w.deg)
    throw std::invalid_argument("eval_on_vectors: wrong vector count");
  MatC r(w.n);
  for (int e = 0; e < w.n * w.n; ++e) r.a[e] = 0.0;
  const auto& cl = combos(w.dim, w.deg);
  for (size_t k = 0; k < cl.size(); ++k) {
    // det over the chosen rows
    MatC sub(w.deg);
    for (int i = 0; i < w.deg; ++i)
      for (int j = 0; j < w.deg; ++j) sub(i, j) = V[j][cl[k][i]];
    cplx d = w.deg == 0 ? cplx(1.0) : sub.det();
    MatC m = value_of(w.comps[k]);
    for (int e = 0; e < w.n * w.n; ++e) r.a[e] += m.a[e] * d;
  }
  return r;
}

MatrixForm form_from_fn(int deg, int dim, int n, std::function<FormVal(const PointSpec&)> f) {
  MatrixForm r;
  r.deg = deg;
  r.dim = dim;
  r.n = n;
  r.coeff = std::move(f);
  return r;
}

double sup_norm(const MatrixForm& w, const std::vector<PointSpec>& samples) {
  double m = 0.0;
  for (const auto& p : samples) {
    FormVal v = w(p);
    for (const auto& c : v.comps) m = std::max(m, max_abs(value_of(c)));
  }
  return m;
}

}  // namespace cshyp
