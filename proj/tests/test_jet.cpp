// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cshyp/jet.hpp"

using namespace cshyp;

namespace {

double dist(cplx a, cplx b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("seeded variables and linearity") {
  const JetSpace& sp = JetSpace::get(2, 2);
  Jet x = Jet::variable(sp, 0, 3.0);
  Jet y = Jet::variable(sp, 1, -2.0);
  Jet f = 2.0 * x + y * y;
  CHECK(dist(f.value(), 2.0 * 3.0 + 4.0) < 1e-15);
  CHECK(dist(f.d(0), 2.0) < 1e-15);
  CHECK(dist(f.d(1), -4.0) < 1e-15);
  JetSpace::MultiIndex yy{};
  yy[1] = 2;
  CHECK(dist(f.taylor(yy), 1.0) < 1e-15);  // second Taylor coefficient of y^2
}

TEST_CASE("reciprocal derivatives") {
  const JetSpace& sp = JetSpace::get(1, 2);
  Jet y = Jet::variable(sp, 0, 2.0);
  Jet f = 1.0 / (y * y);
  CHECK(dist(f.value(), 0.25) < 1e-15);
  CHECK(dist(f.d(0), -0.25) < 1e-15);
  JetSpace::MultiIndex m{};
  m[0] = 2;
  // taylor coeff is f''/2 = (3/8)/2
  CHECK(dist(f.taylor(m), 3.0 / 16.0) < 1e-15);
}

TEST_CASE("transcendental chain rule against central differences") {
  const JetSpace& sp = JetSpace::get(2, 2);
  auto g = [](cplx a, cplx b) {
    return std::sin(a) * std::cosh(b) + std::exp(a * b) / (2.0 + std::cos(b));
  };
  cplx a(0.3, 0.1), b(-0.7, 0.2);
  Jet x = Jet::variable(sp, 0, a);
  Jet y = Jet::variable(sp, 1, b);
  Jet f = sin(x) * cosh(y) + exp(x * y) / (2.0 + cos(y));
  double h = 1e-5;
  cplx da = (g(a + h, b) - g(a - h, b)) / (2 * h);
  cplx db = (g(a, b + h) - g(a, b - h)) / (2 * h);
  CHECK(dist(f.d(0), da) < 1e-8 * (1 + std::abs(da)));
  CHECK(dist(f.d(1), db) < 1e-8 * (1 + std::abs(db)));
  cplx dab = (g(a + h, b + h) - g(a + h, b - h) - g(a - h, b + h) + g(a - h, b - h)) / (4 * h * h);
  JetSpace::MultiIndex m{};
  m[0] = 1;
  m[1] = 1;
  CHECK(dist(f.taylor(m), dab) < 1e-5 * (1 + std::abs(dab)));
}

TEST_CASE("polynomial jets are exact: random integer polynomials") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> coeff(-4, 4);
  const JetSpace& sp = JetSpace::get(2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    // p(x,y) = sum c_{jk} x^j y^k, j+k <= 4
    int c[5][5] = {};
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k + j <= 4; ++k) c[j][k] = coeff(rng);
    cplx x0(1.0, 0.5), y0(-2.0, 0.25);
    Jet x = Jet::variable(sp, 0, x0);
    Jet y = Jet::variable(sp, 1, y0);
    Jet p = Jet::constant(sp, 0.0);
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k + j <= 4; ++k)
        if (c[j][k]) p += static_cast<double>(c[j][k]) * pow(x, j) * pow(y, k);
    // symbolic partials
    auto horner = [&](int dx, int dy) {
      cplx acc = 0.0;
      for (int j = dx; j <= 4; ++j) {
        for (int k = dy; k + j <= 4; ++k) {
          double fall = 1.0;
          for (int t = 0; t < dx; ++t) fall *= (j - t);
          for (int t = 0; t < dy; ++t) fall *= (k - t);
          acc += static_cast<double>(c[j][k]) * fall * std::pow(x0, j - dx) * std::pow(y0, k - dy);
        }
      }
      return acc;
    };
    CHECK(dist(p.value(), horner(0, 0)) < 1e-10);
    CHECK(dist(p.d(0), horner(1, 0)) < 1e-10);
    CHECK(dist(p.d(1), horner(0, 1)) < 1e-10);
    JetSpace::MultiIndex m{};
    m[0] = 1;
    m[1] = 1;
    CHECK(dist(p.taylor(m), horner(1, 1)) < 1e-10);
    m[0] = 2;
    m[1] = 0;
    CHECK(dist(p.taylor(m), horner(2, 0) / 2.0) < 1e-10);
  }
}

TEST_CASE("derivative extraction lowers order consistently") {
  const JetSpace& sp3 = JetSpace::get(2, 3);
  Jet x = Jet::variable(sp3, 0, 0.7);
  Jet y = Jet::variable(sp3, 1, 1.3);
  Jet f = exp(x * y) * sin(y);
  Jet fx = f.derivative(0);
  CHECK(fx.space().order() == 2);
  // d/dx exp(xy) sin(y) = y exp(xy) sin(y)
  cplx expect = 1.3 * std::exp(0.7 * 1.3) * std::sin(1.3);
  CHECK(dist(fx.value(), expect) < 1e-13);
  // mixed second partial through two extractions equals direct slot
  Jet fxy = f.derivative(0).derivative(1);
  JetSpace::MultiIndex m{};
  m[0] = 1;
  m[1] = 1;
  CHECK(dist(fxy.value(), f.taylor(m)) < 1e-13);
}

TEST_CASE("division and log guards") {
  const JetSpace& sp = JetSpace::get(1, 1);
  Jet z = Jet::variable(sp, 0, 0.0);
  CHECK_THROWS_AS((void)(1.0 / z), DomainError);
  CHECK_THROWS_AS((void)log(z), DomainError);
  CHECK_THROWS_AS((void)sqrt(z), DomainError);
}

TEST_CASE("sinc helpers continue smoothly through zero") {
  const JetSpace& sp = JetSpace::get(1, 2);
  // compare series branch and closed-form branch at u ~ 0.3
  Jet u = Jet::variable(sp, 0, 0.3);
  Jet a = sinc_sqrt(u);
  Jet b = sin(sqrt(u)) / sqrt(u);
  CHECK(dist(a.value(), b.value()) < 1e-12);
  CHECK(dist(a.d(0), b.d(0)) < 1e-10);
  // at exactly zero, value is 1 and derivative -1/6
  Jet z = Jet::variable(sp, 0, 0.0);
  Jet s = sinc_sqrt(z);
  CHECK(dist(s.value(), 1.0) < 1e-14);
  CHECK(dist(s.d(0), -1.0 / 6.0) < 1e-12);
  Jet v = versinc_sqrt(z);
  CHECK(dist(v.value(), 0.5) < 1e-14);
  CHECK(dist(v.d(0), -1.0 / 24.0) < 1e-12);
}

TEST_CASE("re/im/conj commute with real-direction derivatives") {
  const JetSpace& sp = JetSpace::get(1, 2);
  Jet x = Jet::variable(sp, 0, cplx(0.4, 0.0));
  Jet f = exp(cplx(0.0, 1.0) * x);  // e^{ix}
  Jet fr = re(f);
  CHECK(dist(fr.value(), std::cos(0.4)) < 1e-14);
  CHECK(dist(fr.d(0), -std::sin(0.4)) < 1e-14);
  Jet fc = conj(f);
  CHECK(dist(fc.d(0), std::conj(cplx(0.0, 1.0) * std::exp(cplx(0.0, 0.4)))) < 1e-14);
}
