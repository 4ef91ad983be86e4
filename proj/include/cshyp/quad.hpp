// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace cshyp {

/// Gauss-Legendre nodes/weights on [-1,1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// One-dimensional rule on [a,b]: Gauss-Legendre, or equispaced midpoint-free
/// trapezoid when periodic (then the right endpoint is excluded).
struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
  static Rule1D gauss(int n, double a, double b);
  static Rule1D periodic_trapezoid(int n, double a, double b);
};

/// Compensated (Neumaier) accumulator; deterministic for a fixed visit order.
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double get() const { return sum + comp; }
};

struct KahanC {
  Kahan re, im;
  void add(std::complex<double> v) {
    re.add(v.real());
    im.add(v.imag());
  }
  std::complex<double> get() const { return {re.get(), im.get()}; }
};

/// Deterministic parallel loop: chunks are processed by a worker pool but the
/// per-chunk results are combined in index order by the caller's reducer.
void parallel_chunks(int n_chunks, int threads,
                     const std::function<void(int)>& work);

/// Global thread count used by quadrature drivers (set from the CLI).
int quad_threads();
void set_quad_threads(int t);

}  // namespace cshyp
