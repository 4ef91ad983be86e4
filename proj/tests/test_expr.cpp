// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cshyp/expr.hpp"

using namespace cshyp;

TEST_CASE("grammar smoke: x^2/2") {
  Expr e = parse_expr("x^2/2", {"x"});
  CHECK(e.kind == Expr::Kind::Div);
  CHECK(e.kids[0].kind == Expr::Kind::Pow);
  cplx v = e.eval(std::vector<cplx>{cplx(3.0)});
  CHECK(std::abs(v - cplx(4.5)) < 1e-15);
}

TEST_CASE("guarded division") {
  Expr e = parse_expr("1/y2", {"y1", "y2"});
  std::vector<cplx> ok{cplx(1.0), cplx(2.0)};
  CHECK(std::abs(e.eval(ok) - cplx(0.5)) < 1e-15);
  std::vector<cplx> bad{cplx(1.0), cplx(0.0)};
  CHECK_THROWS_AS((void)e.eval(bad), EvalError);
}

TEST_CASE("exp(2*log(y2)) at 3 equals 9") {
  Expr e = parse_expr("exp(2*log(y2))", {"y1", "y2"});
  std::vector<cplx> p{cplx(0.0), cplx(3.0)};
  CHECK(std::abs(e.eval(p) - cplx(9.0)) < 1e-12);
}

TEST_CASE("jet_eval spec examples") {
  SUBCASE("identity variable") {
    Expr e = parse_expr("y2", {"y1", "y2"});
    std::vector<cplx> p{cplx(0.0), cplx(5.0)};
    Jet j = jet_eval(e, p, 2);
    CHECK(std::abs(j.value() - cplx(5.0)) < 1e-15);
    CHECK(std::abs(j.d(1) - cplx(1.0)) < 1e-15);
    JetSpace::MultiIndex m{};
    m[1] = 2;
    CHECK(std::abs(j.taylor(m)) < 1e-15);
  }
  SUBCASE("1/y2^2 at 2") {
    Expr e = parse_expr("1/y2^2", {"y2"});
    std::vector<cplx> p{cplx(2.0)};
    Jet j = jet_eval(e, p, 2);
    CHECK(std::abs(j.value() - cplx(0.25)) < 1e-15);
    CHECK(std::abs(j.d(0) - cplx(-0.25)) < 1e-15);
    JetSpace::MultiIndex m{};
    m[0] = 2;
    CHECK(std::abs(j.taylor(m) * 2.0 - cplx(0.375)) < 1e-15);  // f'' = 3/8
  }
  SUBCASE("sin(y1)*cosh(y2) at origin") {
    Expr e = parse_expr("sin(y1)*cosh(y2)", {"y1", "y2"});
    std::vector<cplx> p{cplx(0.0), cplx(0.0)};
    Jet j = jet_eval(e, p, 1);
    CHECK(std::abs(j.value()) < 1e-15);
    CHECK(std::abs(j.d(0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(j.d(1)) < 1e-15);
  }
}

TEST_CASE("unary minus policy") {
  CHECK_THROWS_AS(parse_expr("-x^2", {"x"}), ParseError);
  CHECK_NOTHROW(parse_expr("-x", {"x"}));
  CHECK_NOTHROW(parse_expr("-log(x)", {"x"}));
  CHECK_NOTHROW(parse_expr("-(x^2)", {"x"}));
  Expr e = parse_expr("-log(x)", {"x"});
  std::vector<cplx> p{cplx(2.0)};
  CHECK(std::abs(e.eval(p) + std::log(cplx(2.0))) < 1e-15);
}

TEST_CASE("parse errors carry byte offsets") {
  try {
    parse_expr("x + )", {"x"});
    CHECK(false);
  } catch (const ParseError& err) {
    CHECK(err.offset == 4);
  }
  try {
    parse_expr("x + q2", {"x"});
    CHECK(false);
  } catch (const ParseError& err) {
    CHECK(err.offset == 4);
    CHECK(std::string(err.what()).find("q2") != std::string::npos);
  }
}

namespace {

Expr random_expr(std::mt19937_64& rng, int depth, int nvars) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  Expr e;
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<int> c(-3, 3);
      e.kind = Expr::Kind::Const;
      e.value = cplx(c(rng), 0.0);
      return e;
    }
    case 1: {
      std::uniform_int_distribution<int> v(0, nvars - 1);
      e.kind = Expr::Kind::Var;
      e.var = v(rng);
      return e;
    }
    case 2:
      e.kind = Expr::Kind::Add;
      break;
    case 3:
      e.kind = Expr::Kind::Sub;
      break;
    case 4:
      e.kind = Expr::Kind::Mul;
      break;
    case 5: {
      e.kind = Expr::Kind::Func;
      std::uniform_int_distribution<int> f(0, 5);
      const Expr::Fn fns[6] = {Expr::Fn::Exp, Expr::Fn::Sin,  Expr::Fn::Cos,
                               Expr::Fn::Sinh, Expr::Fn::Cosh, Expr::Fn::Conj};
      e.fn = fns[f(rng)];
      e.kids.push_back(random_expr(rng, depth - 1, nvars));
      return e;
    }
    default: {
      e.kind = Expr::Kind::Pow;
      e.kids.push_back(random_expr(rng, depth - 1, nvars));
      Expr p;
      p.kind = Expr::Kind::Const;
      std::uniform_int_distribution<int> k(1, 3);
      p.value = cplx(k(rng), 0.0);
      e.kids.push_back(std::move(p));
      return e;
    }
  }
  e.kids.push_back(random_expr(rng, depth - 1, nvars));
  e.kids.push_back(random_expr(rng, depth - 1, nvars));
  return e;
}

}  // namespace

TEST_CASE("pretty-print round trip is structurally stable") {
  std::mt19937_64 rng(777);
  std::vector<std::string> vars{"x", "y"};
  for (int trial = 0; trial < 60; ++trial) {
    Expr e = random_expr(rng, 4, 2);
    std::string s = e.pretty(vars);
    Expr back = parse_expr(s, vars);
    // printing may replace Neg with (0-...); compare by printing again
    CHECK(back.pretty(vars) == s);
  }
}

TEST_CASE("jet partials agree with central differences on smooth expressions") {
  std::vector<std::string> vars{"x", "y"};
  std::vector<std::string> sources{
      "exp(x*y)+sin(x)*cosh(y)", "1/(2+cos(x))+y^3", "sqrt(4+x^2+y^2)",
      "log(3+sinh(x)+y^2)", "re(exp(i*x))*im(exp(i*y))"};
  for (const auto& src : sources) {
    Expr e = parse_expr(src, vars);
    std::vector<cplx> p{cplx(0.37), cplx(-0.61)};
    Jet j = jet_eval(e, p, 1);
    double h = 1e-5;
    for (int v = 0; v < 2; ++v) {
      std::vector<cplx> pp = p, pm = p;
      pp[v] += h;
      pm[v] -= h;
      cplx cd = (e.eval(pp) - e.eval(pm)) / (2 * h);
      CHECK(std::abs(j.d(v) - cd) <= 1e-8 * (1.0 + std::abs(cd)));
    }
  }
}
