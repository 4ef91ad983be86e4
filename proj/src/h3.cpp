// SPDX-License-Identifier: MIT
#include "cshyp/h3.hpp"

#include <cmath>

namespace cshyp {

namespace {

// quaternion z + w j with complex slots, j z = conj(z) j
template <class T>
struct Quat {
  T z, w;
};

template <class T>
Quat<T> qmul(const Quat<T>& p, const Quat<T>& q) {
  using std::conj;
  return {p.z * q.z - p.w * conj(q.w), p.z * q.w + p.w * conj(q.z)};
}

template <class T>
Quat<T> qinv(const Quat<T>& q) {
  using std::conj;
  T n = q.z * conj(q.z) + q.w * conj(q.w);
  return {conj(q.z) / n, -q.w / n};
}

const double kTol = 1e-12;

}  // namespace

MoebiusMap MoebiusMap::from_entries(cplx a, cplx b, cplx c, cplx d) {
  cplx det = a * d - b * c;
  if (std::abs(det) < 1e-300) throw std::invalid_argument("singular matrix");
  cplx s = std::sqrt(det);
  return MoebiusMap{a / s, b / s, c / s, d / s};
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
  return MoebiusMap{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                    c * o.b + d * o.d};
}

cplx MoebiusMap::apply(cplx z) const {
  cplx den = c * z + d;
  if (std::abs(den) < 1e-300) return cplx(std::numeric_limits<double>::infinity(), 0.0);
  return (a * z + b) / den;
}

bool MoebiusMap::approx_equal(const MoebiusMap& o, double tol) const {
  auto diff = [&](double s) {
    return std::max(std::max(std::abs(a - s * o.a), std::abs(b - s * o.b)),
                    std::max(std::abs(c - s * o.c), std::abs(d - s * o.d)));
  };
  return std::min(diff(1.0), diff(-1.0)) <= tol;
}

double hyperbolic_distance(const H3Point& p, const H3Point& q) {
  double dz2 = (p.y1 - q.y1) * (p.y1 - q.y1) + (p.y2 - q.y2) * (p.y2 - q.y2) +
               (p.y3 - q.y3) * (p.y3 - q.y3);
  double ch = 1.0 + dz2 / (2.0 * p.y3 * q.y3);
  return std::acosh(ch);
}

Vec3<Jet> mobius_act_h3_jets(const MoebiusMap& g, const Vec3<Jet>& q) {
  Quat<Jet> Q{q[0] + cplx(0.0, 1.0) * q[1], q[2]};
  const JetSpace& sp = q[0].space();
  auto cj = [&](cplx v) { return Jet::constant(sp, v); };
  Quat<Jet> num{cj(g.a) * Q.z + cj(g.b), cj(g.a) * Q.w};
  Quat<Jet> den{cj(g.c) * Q.z + cj(g.d), cj(g.c) * Q.w};
  Quat<Jet> out = qmul(num, qinv(den));
  Vec3<Jet> r;
  r[0] = re(out.z);
  r[1] = im(out.z);
  r[2] = re(out.w);
  return r;
}

H3Point mobius_act_h3(const MoebiusMap& g, const H3Point& p) {
  const JetSpace& sp = JetSpace::get(3, 0);
  Vec3<Jet> q{Jet::constant(sp, p.y1), Jet::constant(sp, p.y2), Jet::constant(sp, p.y3)};
  Vec3<Jet> out = mobius_act_h3_jets(g, q);
  H3Point r;
  r.y1 = out[0].value().real();
  r.y2 = out[1].value().real();
  r.y3 = out[2].value().real();
  if (r.y3 <= 0.0) throw std::runtime_error("action left the upper half space");
  return r;
}

FrameAt frame_of(const MoebiusMap& g) {
  const JetSpace& sp = JetSpace::get(3, 1);
  Vec3<Jet> q{Jet::variable(sp, 0, 0.0), Jet::variable(sp, 1, 0.0), Jet::variable(sp, 2, 1.0)};
  Vec3<Jet> out = mobius_act_h3_jets(g, q);
  FrameAt f;
  f.base.y1 = out[0].value().real();
  f.base.y2 = out[1].value().real();
  f.base.y3 = out[2].value().real();
  f.frame = MatC(3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) f.frame(i, k) = out[i].d(k);
  return f;
}

SL2Element SL2Element::from_matrix(const MatC& m) {
  if (std::abs(m(0, 0) + m(1, 1)) > kTol) throw std::invalid_argument("matrix not traceless");
  SL2Element e;
  e.h = m;
  return e;
}

SL2Element sl2_basis(int k) {
  MatC m(2);
  const cplx I(0.0, 1.0);
  switch (k) {
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = I;
      m(1, 0) = -I;
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("basis index must be 1, 2 or 3");
  }
  SL2Element e;
  e.h = m;
  return e;
}

VectorFieldH3 killing_field(const SL2Element& h) {
  cplx a = h.h(0, 0), b = h.h(0, 1), c = h.h(1, 0);
  return [a, b, c](const PointSpec& p) {
    auto x = p.seeded();
    Jet z = x[0] + cplx(0.0, 1.0) * x[1];
    Jet w = x[2];
    // generator at q: zPart = b + 2 a z - c z^2 + conj(c) w^2,
    //                 jPart = 2 Re(a - c z) w
    Jet zpart = Jet::constant(p.space(), b) + 2.0 * a * z - c * z * z + std::conj(c) * (w * w);
    Jet jpart = 2.0 * re(Jet::constant(p.space(), a) - c * z) * w;
    Vec3<Jet> v;
    v[0] = re(zpart);
    v[1] = im(zpart);
    v[2] = jpart;
    return v;
  };
}

Vec3<cplx> killing_field_at(const SL2Element& h, const H3Point& q) {
  PointSpec p;
  p.x = {q.y1, q.y2, q.y3};
  p.order = 0;
  Vec3<Jet> v = killing_field(h)(p);
  return {v[0].value(), v[1].value(), v[2].value()};
}

namespace {

// curl components as jets (the field is evaluated one order higher)
Vec3<Jet> curl_jets(const VectorFieldH3& u, const PointSpec& p) {
  Vec3<Jet> uv = u(p.with_order(p.order + 1));
  const JetSpace& hi = uv[0].space();
  Jet y3 = Jet::variable(hi, 2, p.x[2]);
  Vec3<Jet> al;
  for (int i = 0; i < 3; ++i) al[i] = uv[i] / (y3 * y3);
  // curl^m = y3^3 * (da)_{ij} over the cyclic pair of m, da_{ij} = d_i a_j - d_j a_i
  auto d = [&](int i, int j) { return al[j].derivative(i) - al[i].derivative(j); };
  Jet y3l = y3.truncated(p.order);
  Jet y33 = y3l * y3l * y3l;
  Vec3<Jet> r;
  r[0] = y33 * d(1, 2);
  r[1] = y33 * d(2, 0);
  r[2] = y33 * d(0, 1);
  return r;
}

}  // namespace

Vec3<cplx> curl_h3(const VectorFieldH3& u, const H3Point& q) {
  PointSpec p;
  p.x = {q.y1, q.y2, q.y3};
  p.order = 0;
  Vec3<Jet> r = curl_jets(u, p);
  return {r[0].value(), r[1].value(), r[2].value()};
}

VectorFieldH3 curl_field(const VectorFieldH3& u) {
  return [u](const PointSpec& p) { return curl_jets(u, p); };
}

VectorFieldH3 canonical_lift(const VectorFieldH3& u) {
  return [u](const PointSpec& p) {
    Vec3<Jet> base = u(p);
    Vec3<Jet> c = curl_jets(u, p);
    Vec3<Jet> r;
    const cplx ih(0.0, 0.5);
    for (int i = 0; i < 3; ++i) r[i] = base[i] + ih * c[i];
    return r;
  };
}

namespace {

// nabla_U s with constant U, Christoffels of dy^2/y3^2
Vec3<Jet> covariant_jets(const Vec3<cplx>& U, const VectorFieldH3& s, const PointSpec& p) {
  Vec3<Jet> sv = s(p.with_order(p.order + 1));
  const JetSpace& lo = JetSpace::get(p.nvars(), p.order);
  Jet y3 = Jet::variable(lo, 2, p.x[2]);
  Vec3<Jet> ds[3];
  for (int mu = 0; mu < 3; ++mu)
    for (int k = 0; k < 3; ++k) ds[mu][k] = sv[k].derivative(mu);
  Vec3<Jet> slo;
  for (int k = 0; k < 3; ++k) slo[k] = sv[k].truncated(p.order);
  // Gamma^1_{13}=Gamma^2_{23}=Gamma^3_{33}=-1/y3, Gamma^3_{11}=Gamma^3_{22}=1/y3
  Vec3<Jet> r;
  Jet inv = 1.0 / y3;
  r[0] = U[0] * ds[0][0] + U[1] * ds[1][0] + U[2] * ds[2][0] -
         inv * (U[0] * slo[2] + U[2] * slo[0]);
  r[1] = U[0] * ds[0][1] + U[1] * ds[1][1] + U[2] * ds[2][1] -
         inv * (U[1] * slo[2] + U[2] * slo[1]);
  r[2] = U[0] * ds[0][2] + U[1] * ds[1][2] + U[2] * ds[2][2] +
         inv * (U[0] * slo[0] + U[1] * slo[1] - U[2] * slo[2]);
  return r;
}

}  // namespace

Vec3<cplx> covariant_derivative(const Vec3<cplx>& U, const VectorFieldH3& s,
                                const H3Point& q) {
  PointSpec p;
  p.x = {q.y1, q.y2, q.y3};
  p.order = 0;
  Vec3<Jet> r = covariant_jets(U, s, p);
  return {r[0].value(), r[1].value(), r[2].value()};
}

Vec3<cplx> complex_connection_apply(const Vec3<cplx>& U, const VectorFieldH3& s,
                                    const H3Point& q) {
  Vec3<cplx> nab = covariant_derivative(U, s, q);
  PointSpec p;
  p.x = {q.y1, q.y2, q.y3};
  p.order = 0;
  Vec3<Jet> sv = s(p);
  Vec3<cplx> sval{sv[0].value(), sv[1].value(), sv[2].value()};
  cplx y3(q.y3, 0.0);
  Vec3<cplx> cross = cross_h3(U, sval, y3);
  const cplx I(0.0, 1.0);
  Vec3<cplx> r;
  for (int k = 0; k < 3; ++k) r[k] = nab[k] - I * cross[k];  // i T(U) s = -i U x s
  return r;
}

double killing_equation_residual(const VectorFieldH3& u, const H3Point& q) {
  double g = 1.0 / (q.y3 * q.y3);
  double res = 0.0;
  for (int i = 0; i < 3; ++i) {
    Vec3<cplx> ei{0.0, 0.0, 0.0};
    ei[i] = 1.0;
    Vec3<cplx> di = covariant_derivative(ei, u, q);
    for (int j = 0; j <= i; ++j) {
      Vec3<cplx> ej{0.0, 0.0, 0.0};
      ej[j] = 1.0;
      Vec3<cplx> dj = covariant_derivative(ej, u, q);
      cplx v = g * (di[j] + dj[i]);
      res = std::max(res, std::abs(v));
    }
  }
  return res;
}

}  // namespace cshyp
