// SPDX-License-Identifier: MIT
#pragma once

#include <array>

#include "cshyp/jet.hpp"

namespace cshyp {

/// Dense matrix with runtime size n <= 4 and scalar T (cplx or Jet).
/// Inversion and determinants are provided for n <= 3.
template <class T>
struct SmallMat {
  int n = 0;
  std::array<T, 16> a{};

  SmallMat() = default;
  explicit SmallMat(int n) : n(n) {}

  T& operator()(int i, int j) { return a[i * n + j]; }
  const T& operator()(int i, int j) const { return a[i * n + j]; }

  static SmallMat zero_like(int n, const T& model) {
    SmallMat m(n);
    for (int k = 0; k < n * n; ++k) m.a[k] = zero_of(model);
    return m;
  }
  static SmallMat identity_like(int n, const T& model) {
    SmallMat m = zero_like(n, model);
    for (int i = 0; i < n; ++i) m(i, i) = one_of(model);
    return m;
  }

  SmallMat& operator+=(const SmallMat& o) {
    for (int k = 0; k < n * n; ++k) a[k] += o.a[k];
    return *this;
  }
  SmallMat& operator-=(const SmallMat& o) {
    for (int k = 0; k < n * n; ++k) a[k] -= o.a[k];
    return *this;
  }
  friend SmallMat operator+(SmallMat x, const SmallMat& y) { x += y; return x; }
  friend SmallMat operator-(SmallMat x, const SmallMat& y) { x -= y; return x; }
  SmallMat operator-() const {
    SmallMat m = *this;
    for (int k = 0; k < n * n; ++k) m.a[k] = -m.a[k];
    return m;
  }
  friend SmallMat operator*(const SmallMat& x, const SmallMat& y) {
    SmallMat m(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int j = 0; j < x.n; ++j) {
        T acc = x(i, 0) * y(0, j);
        for (int k = 1; k < x.n; ++k) acc += x(i, k) * y(k, j);
        m(i, j) = acc;
      }
    return m;
  }
  template <class S>
  friend SmallMat operator*(SmallMat x, const S& s) {
    for (int k = 0; k < x.n * x.n; ++k) x.a[k] = x.a[k] * s;
    return x;
  }
  template <class S>
  friend SmallMat operator*(const S& s, SmallMat x) {
    for (int k = 0; k < x.n * x.n; ++k) x.a[k] = s * x.a[k];
    return x;
  }

  T trace() const {
    T acc = a[0];
    for (int i = 1; i < n; ++i) acc += (*this)(i, i);
    return acc;
  }

  SmallMat transposed() const {
    SmallMat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  T det() const {
    if (n == 1) return a[0];
    if (n == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
    if (n != 3) throw std::invalid_argument("det: size > 3 unsupported");
    return (*this)(0, 0) * ((*this)(1, 1) * (*this)(2, 2) - (*this)(1, 2) * (*this)(2, 1)) -
           (*this)(0, 1) * ((*this)(1, 0) * (*this)(2, 2) - (*this)(1, 2) * (*this)(2, 0)) +
           (*this)(0, 2) * ((*this)(1, 0) * (*this)(2, 1) - (*this)(1, 1) * (*this)(2, 0));
  }

  SmallMat inverse() const {
    if (n > 3) throw std::invalid_argument("inverse: size > 3 unsupported");
    T d = det();
    SmallMat m(n);
    if (n == 1) {
      m.a[0] = one_of(a[0]) / d;
      return m;
    }
    if (n == 2) {
      m(0, 0) = (*this)(1, 1) / d;
      m(1, 1) = (*this)(0, 0) / d;
      m(0, 1) = -(*this)(0, 1) / d;
      m(1, 0) = -(*this)(1, 0) / d;
      return m;
    }
    auto cof = [&](int i, int j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      return (*this)(r0, c0) * (*this)(r1, c1) - (*this)(r0, c1) * (*this)(r1, c0);
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(j, i) = cof(i, j) / d;
    return m;
  }

  static T zero_of(const T& model) {
    if constexpr (std::is_same_v<T, cplx>) {
      (void)model;
      return cplx(0.0);
    } else {
      return Jet::constant(model.space(), 0.0);
    }
  }
  static T one_of(const T& model) {
    if constexpr (std::is_same_v<T, cplx>) {
      (void)model;
      return cplx(1.0);
    } else {
      return Jet::constant(model.space(), 1.0);
    }
  }
};

using MatJ = SmallMat<Jet>;
using MatC = SmallMat<cplx>;

template <class T>
struct Vec3 {
  std::array<T, 3> v{};
  T& operator[](int i) { return v[i]; }
  const T& operator[](int i) const { return v[i]; }
};

inline MatC value_of(const MatJ& m) {
  MatC r(m.n);
  for (int k = 0; k < m.n * m.n; ++k) r.a[k] = m.a[k].value();
  return r;
}

inline double max_abs(const MatC& m) {
  double r = 0.0;
  for (int k = 0; k < m.n * m.n; ++k) r = std::max(r, std::abs(m.a[k]));
  return r;
}

}  // namespace cshyp
