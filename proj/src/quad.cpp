// SPDX-License-Identifier: MIT
#include "cshyp/quad.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <thread>

namespace cshyp {

namespace {

// Legendre P_n and derivative at x
void legendre(int n, double x, double& pn, double& dpn) {
  double p1 = 1.0, p2 = 0.0;
  for (int j = 0; j < n; ++j) {
    double p3 = p2;
    p2 = p1;
    p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
  }
  pn = p1;
  dpn = n * (x * p1 - p2) / (x * x - 1.0);
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pn = 0.0, dpn = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, pn, dpn);
      double dx = pn / dpn;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(n, x, pn, dpn);
    double w = 2.0 / ((1.0 - x * x) * dpn * dpn);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

Rule1D Rule1D::gauss(int n, double a, double b) {
  Rule1D r;
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = 0.5 * (a + b) + 0.5 * (b - a) * x[i];
    r.w[i] = 0.5 * (b - a) * w[i];
  }
  return r;
}

Rule1D Rule1D::periodic_trapezoid(int n, double a, double b) {
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  double h = (b - a) / n;
  for (int i = 0; i < n; ++i) {
    r.x[i] = a + i * h;
    r.w[i] = h;
  }
  return r;
}

namespace {
std::atomic<int> g_threads{1};
}

int quad_threads() { return g_threads.load(); }
void set_quad_threads(int t) { g_threads.store(t < 1 ? 1 : t); }

void parallel_chunks(int n_chunks, int threads, const std::function<void(int)>& work) {
  if (threads <= 1 || n_chunks <= 1) {
    for (int c = 0; c < n_chunks; ++c) work(c);
    return;
  }
  std::atomic<int> next{0};
  auto body = [&] {
    for (;;) {
      int c = next.fetch_add(1);
      if (c >= n_chunks) return;
      work(c);
    }
  };
  std::vector<std::thread> pool;
  int nt = std::min(threads, n_chunks);
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
}

}  // namespace cshyp
