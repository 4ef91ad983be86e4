// SPDX-License-Identifier: MIT
#include "cshyp/expr.hpp"

#include <cctype>
#include <cmath>
#include <map>

namespace cshyp {

namespace {

const std::map<std::string, Expr::Fn>& fn_table() {
  static const std::map<std::string, Expr::Fn> t = {
      {"exp", Expr::Fn::Exp},   {"log", Expr::Fn::Log},   {"sin", Expr::Fn::Sin},
      {"cos", Expr::Fn::Cos},   {"sinh", Expr::Fn::Sinh}, {"cosh", Expr::Fn::Cosh},
      {"sqrt", Expr::Fn::Sqrt}, {"re", Expr::Fn::Re},     {"im", Expr::Fn::Im},
      {"conj", Expr::Fn::Conj}};
  return t;
}

const char* fn_name(Expr::Fn f) {
  switch (f) {
    case Expr::Fn::Exp: return "exp";
    case Expr::Fn::Log: return "log";
    case Expr::Fn::Sin: return "sin";
    case Expr::Fn::Cos: return "cos";
    case Expr::Fn::Sinh: return "sinh";
    case Expr::Fn::Cosh: return "cosh";
    case Expr::Fn::Sqrt: return "sqrt";
    case Expr::Fn::Re: return "re";
    case Expr::Fn::Im: return "im";
    case Expr::Fn::Conj: return "conj";
  }
  return "?";
}

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& vars)
      : src_(src), vars_(vars) {}

  Expr run() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  const std::string& src_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Expr parse_expr() {
    skip_ws();
    size_t at = pos_;
    bool neg = eat('-');
    bool first_pow = false;
    Expr e = parse_term(&first_pow);
    if (neg) {
      if (first_pow)
        throw ParseError(at, "ambiguous unary minus in front of '^'; parenthesize");
      Expr n;
      n.kind = Expr::Kind::Neg;
      n.offset = at;
      n.kids.push_back(std::move(e));
      e = std::move(n);
    }
    for (;;) {
      skip_ws();
      size_t opat = pos_;
      if (eat('+')) {
        Expr r = parse_term(nullptr);
        Expr n;
        n.kind = Expr::Kind::Add;
        n.offset = opat;
        n.kids.push_back(std::move(e));
        n.kids.push_back(std::move(r));
        e = std::move(n);
      } else if (eat('-')) {
        Expr r = parse_term(nullptr);
        Expr n;
        n.kind = Expr::Kind::Sub;
        n.offset = opat;
        n.kids.push_back(std::move(e));
        n.kids.push_back(std::move(r));
        e = std::move(n);
      } else {
        return e;
      }
    }
  }

  Expr parse_term(bool* first_factor_pow) {
    Expr e = parse_factor(first_factor_pow);
    for (;;) {
      skip_ws();
      size_t opat = pos_;
      if (eat('*')) {
        Expr r = parse_factor(nullptr);
        Expr n;
        n.kind = Expr::Kind::Mul;
        n.offset = opat;
        n.kids.push_back(std::move(e));
        n.kids.push_back(std::move(r));
        e = std::move(n);
      } else if (eat('/')) {
        Expr r = parse_factor(nullptr);
        Expr n;
        n.kind = Expr::Kind::Div;
        n.offset = opat;
        n.kids.push_back(std::move(e));
        n.kids.push_back(std::move(r));
        e = std::move(n);
      } else {
        return e;
      }
    }
  }

  Expr parse_factor(bool* had_pow) {
    Expr base = parse_atom();
    skip_ws();
    size_t opat = pos_;
    if (eat('^')) {
      if (had_pow) *had_pow = true;
      Expr e = parse_atom();
      Expr n;
      n.kind = Expr::Kind::Pow;
      n.offset = opat;
      n.kids.push_back(std::move(base));
      n.kids.push_back(std::move(e));
      return n;
    }
    return base;
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of input");
    size_t at = pos_;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        name += src_[pos_++];
      if (name == "i") {
        Expr e;
        e.kind = Expr::Kind::Const;
        e.value = cplx(0.0, 1.0);
        e.offset = at;
        return e;
      }
      if (name == "pi") {
        Expr e;
        e.kind = Expr::Kind::Const;
        e.value = cplx(3.14159265358979323846, 0.0);
        e.offset = at;
        return e;
      }
      auto fit = fn_table().find(name);
      if (fit != fn_table().end()) {
        if (!eat('(')) throw ParseError(pos_, "expected '(' after function name");
        Expr arg = parse_expr();
        if (!eat(')')) throw ParseError(pos_, "expected ')'");
        Expr e;
        e.kind = Expr::Kind::Func;
        e.fn = fit->second;
        e.offset = at;
        e.kids.push_back(std::move(arg));
        return e;
      }
      for (size_t v = 0; v < vars_.size(); ++v) {
        if (vars_[v] == name) {
          Expr e;
          e.kind = Expr::Kind::Var;
          e.var = static_cast<int>(v);
          e.offset = at;
          return e;
        }
      }
      throw ParseError(at, "undeclared variable '" + name + "'");
    }
    throw ParseError(at, std::string("unexpected character '") + c + "'");
  }

  Expr parse_number() {
    size_t at = pos_;
    size_t end = pos_;
    while (end < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '.'))
      ++end;
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      size_t e = end + 1;
      if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
      if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
        ++e;
        while (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) ++e;
        end = e;
      }
    }
    std::string tok = src_.substr(at, end - at);
    try {
      size_t used = 0;
      double d = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("partial");
      pos_ = end;
      Expr e;
      e.kind = Expr::Kind::Const;
      e.value = cplx(d, 0.0);
      e.offset = at;
      return e;
    } catch (const std::exception&) {
      throw ParseError(at, "malformed number '" + tok + "'");
    }
  }
};

template <class T>
T eval_impl(const Expr& e, std::span<const T> vals);

template <class T>
T apply_fn(const Expr& e, const T& u) {
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  switch (e.fn) {
    case Expr::Fn::Exp: return exp(u);
    case Expr::Fn::Log: return log(u);
    case Expr::Fn::Sin: return sin(u);
    case Expr::Fn::Cos: return cos(u);
    case Expr::Fn::Sinh: return sinh(u);
    case Expr::Fn::Cosh: return cosh(u);
    case Expr::Fn::Sqrt: return sqrt(u);
    case Expr::Fn::Re: {
      if constexpr (std::is_same_v<T, cplx>) return cplx(u.real(), 0.0);
      else return re(u);
    }
    case Expr::Fn::Im: {
      if constexpr (std::is_same_v<T, cplx>) return cplx(u.imag(), 0.0);
      else return im(u);
    }
    case Expr::Fn::Conj: {
      if constexpr (std::is_same_v<T, cplx>) return std::conj(u);
      else return conj(u);
    }
  }
  throw EvalError(e.offset, "unknown function");
}

template <class T>
T make_const(const T& model, cplx v);

template <>
cplx make_const<cplx>(const cplx&, cplx v) { return v; }

template <>
Jet make_const<Jet>(const Jet& model, cplx v) { return Jet::constant(model.space(), v); }

template <class T>
T eval_impl(const Expr& e, std::span<const T> vals) {
  switch (e.kind) {
    case Expr::Kind::Const: return make_const<T>(vals[0], e.value);
    case Expr::Kind::Var: return vals[e.var];
    case Expr::Kind::Add: return eval_impl<T>(e.kids[0], vals) + eval_impl<T>(e.kids[1], vals);
    case Expr::Kind::Sub: return eval_impl<T>(e.kids[0], vals) - eval_impl<T>(e.kids[1], vals);
    case Expr::Kind::Mul: return eval_impl<T>(e.kids[0], vals) * eval_impl<T>(e.kids[1], vals);
    case Expr::Kind::Neg: return -eval_impl<T>(e.kids[0], vals);
    case Expr::Kind::Div: {
      T a = eval_impl<T>(e.kids[0], vals);
      T b = eval_impl<T>(e.kids[1], vals);
      if constexpr (std::is_same_v<T, cplx>) {
        if (b == cplx(0.0)) throw EvalError(e.offset, "division by zero");
      }
      try {
        return a / b;
      } catch (const DomainError& err) {
        throw EvalError(e.offset, err.what());
      }
    }
    case Expr::Kind::Pow: {
      T a = eval_impl<T>(e.kids[0], vals);
      T b = eval_impl<T>(e.kids[1], vals);
      try {
        using std::pow;
        return pow(a, b);
      } catch (const DomainError& err) {
        throw EvalError(e.offset, err.what());
      }
    }
    case Expr::Kind::Func: {
      T u = eval_impl<T>(e.kids[0], vals);
      if constexpr (std::is_same_v<T, cplx>) {
        if (e.fn == Expr::Fn::Log && u == cplx(0.0))
          throw EvalError(e.offset, "log of zero");
      }
      try {
        return apply_fn<T>(e, u);
      } catch (const DomainError& err) {
        throw EvalError(e.offset, err.what());
      }
    }
  }
  throw EvalError(e.offset, "bad expression node");
}

}  // namespace

bool Expr::structurally_equal(const Expr& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Const:
      if (value != o.value) return false;
      break;
    case Kind::Var:
      if (var != o.var) return false;
      break;
    case Kind::Func:
      if (fn != o.fn) return false;
      break;
    default:
      break;
  }
  if (kids.size() != o.kids.size()) return false;
  for (size_t k = 0; k < kids.size(); ++k)
    if (!kids[k].structurally_equal(o.kids[k])) return false;
  return true;
}

std::string Expr::pretty(const std::vector<std::string>& vars) const {
  switch (kind) {
    case Kind::Const: {
      if (value == cplx(0.0, 1.0)) return "i";
      auto real_repr = [](double d) -> std::string {
        char buf[64];
        if (d < 0) {
          snprintf(buf, sizeof buf, "(0-%.17g)", -d);
        } else {
          snprintf(buf, sizeof buf, "%.17g", d);
        }
        return buf;
      };
      if (value.imag() == 0.0) return real_repr(value.real());
      if (value.real() == 0.0) return "(" + real_repr(value.imag()) + "*i)";
      return "(" + real_repr(value.real()) + "+" + real_repr(value.imag()) + "*i)";
    }
    case Kind::Var: return vars[var];
    case Kind::Add: return "(" + kids[0].pretty(vars) + "+" + kids[1].pretty(vars) + ")";
    case Kind::Sub: return "(" + kids[0].pretty(vars) + "-" + kids[1].pretty(vars) + ")";
    case Kind::Mul: return "(" + kids[0].pretty(vars) + "*" + kids[1].pretty(vars) + ")";
    case Kind::Div: return "(" + kids[0].pretty(vars) + "/" + kids[1].pretty(vars) + ")";
    case Kind::Pow: return "(" + kids[0].pretty(vars) + "^" + kids[1].pretty(vars) + ")";
    case Kind::Neg: return "(0-" + kids[0].pretty(vars) + ")";
    case Kind::Func: return std::string(fn_name(fn)) + "(" + kids[0].pretty(vars) + ")";
  }
  return "?";
}

cplx Expr::eval(std::span<const cplx> vals) const {
  static const cplx zero{};
  if (vals.empty()) {
    std::array<cplx, 1> dummy{zero};
    return eval_impl<cplx>(*this, std::span<const cplx>(dummy.data(), 1));
  }
  return eval_impl<cplx>(*this, vals);
}

Jet Expr::eval(std::span<const Jet> vals) const { return eval_impl<Jet>(*this, vals); }

Expr parse_expr(const std::string& source, const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    if (v == "i" || v == "pi" || fn_table().count(v))
      throw ParseError(0, "variable name '" + v + "' is reserved");
  }
  Parser p(source, vars);
  return p.run();
}

Jet jet_eval(const Expr& e, std::span<const cplx> point, int order) {
  const JetSpace& sp = JetSpace::get(static_cast<int>(point.size()), order);
  std::vector<Jet> vals;
  vals.reserve(point.size());
  for (size_t v = 0; v < point.size(); ++v)
    vals.push_back(Jet::variable(sp, static_cast<int>(v), point[v]));
  return e.eval(std::span<const Jet>(vals.data(), vals.size()));
}

}  // namespace cshyp
