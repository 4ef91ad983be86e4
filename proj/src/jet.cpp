// SPDX-License-Identifier: MIT
#include "cshyp/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace cshyp {

namespace {

int multi_degree(const JetSpace::MultiIndex& mi, int nvars) {
  int d = 0;
  for (int i = 0; i < nvars; ++i) d += mi[i];
  return d;
}

// graded lexicographic enumeration of multi-indices with total degree <= order
void enumerate(int nvars, int order, std::vector<JetSpace::MultiIndex>& out) {
  JetSpace::MultiIndex mi{};
  for (int deg = 0; deg <= order; ++deg) {
    // iterate all mi with |mi| = deg
    std::vector<int> stack(nvars, 0);
    // simple recursive fill via explicit loop
    struct Rec {
      int nvars, deg;
      std::vector<JetSpace::MultiIndex>* out;
      void go(JetSpace::MultiIndex cur, int pos, int left) {
        if (pos == nvars - 1) {
          cur[pos] = static_cast<std::uint8_t>(left);
          out->push_back(cur);
          return;
        }
        for (int k = left; k >= 0; --k) {
          cur[pos] = static_cast<std::uint8_t>(k);
          go(cur, pos + 1, left - k);
        }
      }
    } rec{nvars, deg, &out};
    rec.go(mi, 0, deg);
  }
}

}  // namespace

JetSpace::JetSpace(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars < 1 || nvars > kMaxJetVars) throw std::invalid_argument("jet nvars out of range");
  if (order < 0 || order > kMaxJetOrder) throw std::invalid_argument("jet order out of range");
  enumerate(nvars, order, index_);
  degree_.resize(index_.size());
  for (size_t i = 0; i < index_.size(); ++i) degree_[i] = multi_degree(index_[i], nvars);
  var_slot_.assign(nvars, 0);
  if (order >= 1) {
    for (int v = 0; v < nvars; ++v) {
      MultiIndex mi{};
      mi[v] = 1;
      var_slot_[v] = slot_of(mi);
    }
  }
  bump_.assign(index_.size() * nvars, -1);
  for (size_t s = 0; s < index_.size(); ++s) {
    for (int v = 0; v < nvars; ++v) {
      if (degree_[s] + 1 > order) continue;
      MultiIndex mi = index_[s];
      mi[v]++;
      bump_[s * nvars + v] = slot_of(mi);
    }
  }
  for (size_t a = 0; a < index_.size(); ++a) {
    for (size_t b = 0; b < index_.size(); ++b) {
      if (degree_[a] + degree_[b] > order) continue;
      MultiIndex mi{};
      for (int v = 0; v < nvars; ++v)
        mi[v] = static_cast<std::uint8_t>(index_[a][v] + index_[b][v]);
      product_.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                          static_cast<std::uint16_t>(slot_of(mi))});
    }
  }
}

int JetSpace::slot_of(const MultiIndex& mi) const {
  for (size_t i = 0; i < index_.size(); ++i) {
    if (std::equal(mi.begin(), mi.begin() + nvars_, index_[i].begin())) return static_cast<int>(i);
  }
  throw std::invalid_argument("multi-index not in jet space");
}

const JetSpace& JetSpace::get(int nvars, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<JetSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(nvars, order);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::unique_ptr<JetSpace>(new JetSpace(nvars, order))).first;
  }
  return *it->second;
}

Jet Jet::derivative(int var) const {
  const JetSpace& lo = JetSpace::get(sp_->nvars(), sp_->order() - 1);
  Jet r(lo);
  for (int s = 0; s < lo.size(); ++s) {
    JetSpace::MultiIndex mi = lo.multi_index(s);
    mi[var]++;
    int src = sp_->slot_of(mi);
    r.c_[s] = c_[src] * static_cast<double>(mi[var]);
  }
  return r;
}

Jet Jet::truncated(int order) const {
  if (order == sp_->order()) return *this;
  if (order > sp_->order()) throw std::invalid_argument("cannot extend jet order");
  const JetSpace& lo = JetSpace::get(sp_->nvars(), order);
  Jet r(lo);
  for (int s = 0; s < lo.size(); ++s) r.c_[s] = c_[sp_->slot_of(lo.multi_index(s))];
  return r;
}

void Jet::align(const Jet& a, const Jet& b, Jet& ta, Jet& tb) {
  if (a.sp_ == b.sp_) {
    ta = a;
    tb = b;
    return;
  }
  if (a.sp_->nvars() != b.sp_->nvars())
    throw std::invalid_argument("jet variable-count mismatch");
  int order = std::min(a.sp_->order(), b.sp_->order());
  ta = a.truncated(order);
  tb = b.truncated(order);
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  if (sp_ == o.sp_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet a, b;
  align(*this, o, a, b);
  a += b;
  return *this = a;
}

Jet& Jet::operator-=(const Jet& o) {
  if (sp_ == o.sp_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet a, b;
  align(*this, o, a, b);
  a -= b;
  return *this = a;
}

Jet& Jet::operator*=(cplx v) {
  for (auto& x : c_) x *= v;
  return *this;
}

Jet Jet::mul(const Jet& a0, const Jet& b0) {
  Jet a, b;
  align(a0, b0, a, b);
  Jet r(*a.sp_);
  for (const auto& t : a.sp_->product_terms()) {
    r.c_[t.dst] += a.c_[t.a] * b.c_[t.b];
  }
  return r;
}

Jet Jet::compose(const Jet& u, std::span<const cplx> der) {
  const JetSpace& sp = u.space();
  Jet delta = u;
  delta.coeff(0) = 0.0;
  Jet acc = Jet::constant(sp, der[0]);
  Jet p = Jet::constant(sp, 1.0);
  double fact = 1.0;
  for (int k = 1; k <= sp.order() && k < static_cast<int>(der.size()); ++k) {
    p = mul(p, delta);
    fact *= k;
    acc += p * (der[k] / fact);
  }
  return acc;
}

Jet Jet::inverse(const Jet& u) {
  cplx u0 = u.value();
  if (u0 == cplx(0.0)) throw DomainError("division by zero");
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  cplx p = cplx(1.0) / u0;
  double sign = 1.0, fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    der[k] = sign * fact * p;  // d^k/du^k (1/u) = (-1)^k k! u^{-k-1}
    p /= u0;
    sign = -sign;
    fact *= (k + 1);
  }
  return compose(u, std::span<const cplx>(der.data(), n + 1));
}

Jet exp(const Jet& u) {
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  cplx e = std::exp(u.value());
  for (int k = 0; k <= n; ++k) der[k] = e;
  return Jet::compose(u, std::span<const cplx>(der.data(), n + 1));
}

Jet log(const Jet& u) {
  cplx u0 = u.value();
  if (u0 == cplx(0.0)) throw DomainError("log of zero");
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  der[0] = std::log(u0);
  // d^k log u = (-1)^{k-1} (k-1)! u^{-k}
  cplx p = cplx(1.0) / u0;
  double sign = 1.0, fact = 1.0;
  for (int k = 1; k <= n; ++k) {
    der[k] = sign * fact * p;
    p /= u0;
    sign = -sign;
    fact *= k;
  }
  return Jet::compose(u, std::span<const cplx>(der.data(), n + 1));
}

Jet sqrt(const Jet& u) {
  cplx u0 = u.value();
  if (u0 == cplx(0.0) && u.space().order() >= 1) throw DomainError("sqrt at zero");
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  cplx s = std::sqrt(u0);
  der[0] = s;
  if (n >= 1) der[1] = 0.5 / s;
  if (n >= 2) der[2] = -0.25 / (s * u0);
  if (n >= 3) der[3] = 0.375 / (s * u0 * u0);
  return Jet::compose(u, std::span<const cplx>(der.data(), n + 1));
}

Jet sin(const Jet& u) {
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  cplx s = std::sin(u.value()), c = std::cos(u.value());
  const cplx tab[4] = {s, c, -s, -c};
  for (int k = 0; k <= n; ++k) der[k] = tab[k % 4];
  return Jet::compose(u, std::span<const cplx>(der.data(), n + 1));
}

Jet cos(const Jet& u) {
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  cplx s = std::sin(u.value()), c = std::cos(u.value());
  const cplx tab[4] = {c, -s, -c, s};
  for (int k = 0; k <= n; ++k) der[k] = tab[k % 4];
  return Jet::compose(u, std::span<const cplx>(der.data(), n + 1));
}

Jet sinh(const Jet& u) {
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  cplx s = std::sinh(u.value()), c = std::cosh(u.value());
  for (int k = 0; k <= n; ++k) der[k] = (k % 2 == 0) ? s : c;
  return Jet::compose(u, std::span<const cplx>(der.data(), n + 1));
}

Jet cosh(const Jet& u) {
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  cplx s = std::sinh(u.value()), c = std::cosh(u.value());
  for (int k = 0; k <= n; ++k) der[k] = (k % 2 == 0) ? c : s;
  return Jet::compose(u, std::span<const cplx>(der.data(), n + 1));
}

Jet pow(const Jet& u, int k) {
  const JetSpace& sp = u.space();
  if (k == 0) return Jet::constant(sp, 1.0);
  if (k < 0) return Jet::inverse(pow(u, -k));
  Jet r = Jet::constant(sp, 1.0);
  Jet base = u;
  int e = k;
  while (e > 0) {
    if (e & 1) r = Jet::mul(r, base);
    e >>= 1;
    if (e) base = Jet::mul(base, base);
  }
  return r;
}

Jet pow(const Jet& u, const Jet& w) {
  // integer constant exponents keep negative bases usable
  if (w.space().order() >= 0) {
    bool constant = true;
    for (int s = 1; s < w.space().size(); ++s)
      if (w.coeff(s) != cplx(0.0)) { constant = false; break; }
    if (constant) {
      cplx e = w.value();
      double er = e.real();
      if (e.imag() == 0.0 && er == std::nearbyint(er) && std::abs(er) < 64.0)
        return pow(u, static_cast<int>(er));
    }
  }
  return exp(Jet::mul(w, log(u)));
}

Jet re(const Jet& u) {
  Jet r = u;
  for (int s = 0; s < u.space().size(); ++s) r.coeff(s) = cplx(u.coeff(s).real(), 0.0);
  return r;
}

Jet im(const Jet& u) {
  Jet r = u;
  for (int s = 0; s < u.space().size(); ++s) r.coeff(s) = cplx(u.coeff(s).imag(), 0.0);
  return r;
}

Jet conj(const Jet& u) {
  Jet r = u;
  for (int s = 0; s < u.space().size(); ++s) r.coeff(s) = std::conj(u.coeff(s));
  return r;
}

Jet sinc_sqrt(const Jet& u) {
  // g(u) = sin(sqrt u)/sqrt u = sum (-1)^m u^m/(2m+1)!
  cplx u0 = u.value();
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  if (std::abs(u0) < 0.25) {
    for (int k = 0; k <= n; ++k) {
      // g^(k)(u0) by term-wise differentiation of the series
      cplx acc = 0.0;
      cplx upow = 1.0;  // u0^{m-k}
      for (int m = k; m < k + 24; ++m) {
        // term: (-1)^m u^m/(2m+1)! differentiated k times: m!/(m-k)! u^{m-k}
        double fall = 1.0;
        for (int j = 0; j < k; ++j) fall *= (m - j);
        double fact = 1.0;
        for (int j = 2; j <= 2 * m + 1; ++j) fact *= j;
        double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        acc += sgn * fall / fact * upow;
        upow *= u0;
      }
      der[k] = acc;
    }
    return Jet::compose(u, std::span<const cplx>(der.data(), n + 1));
  }
  Jet s = sqrt(u);
  return sin(s) / s;
}

Jet versinc_sqrt(const Jet& u) {
  // g(u) = (1 - cos(sqrt u))/u = sum_{m>=0} (-1)^m u^m/(2m+2)!
  cplx u0 = u.value();
  int n = u.space().order();
  std::array<cplx, kMaxJetOrder + 1> der{};
  if (std::abs(u0) < 0.25) {
    for (int k = 0; k <= n; ++k) {
      cplx acc = 0.0;
      cplx upow = 1.0;
      for (int m = k; m < k + 24; ++m) {
        double fall = 1.0;
        for (int j = 0; j < k; ++j) fall *= (m - j);
        double fact = 1.0;
        for (int j = 2; j <= 2 * m + 2; ++j) fact *= j;
        double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        acc += sgn * fall / fact * upow;
        upow *= u0;
      }
      der[k] = acc;
    }
    return Jet::compose(u, std::span<const cplx>(der.data(), n + 1));
  }
  return (1.0 - cos(sqrt(u))) / u;
}

}  // namespace cshyp
