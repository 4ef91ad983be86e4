// SPDX-License-Identifier: MIT
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cshyp/jet.hpp"

namespace cshyp {

struct ParseError : std::runtime_error {
  ParseError(size_t offset, const std::string& msg)
      : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
  size_t offset;
};

struct EvalError : std::runtime_error {
  EvalError(size_t offset, const std::string& msg)
      : std::runtime_error(msg + " (expression byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  size_t offset;
};

/// Closed-form scalar expression over declared variables.
///
/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' atom)?
///   atom   := number | name | '(' expr ')' | func '(' expr ')'
/// Numbers are decimals with optional exponent; `i` is the imaginary unit and
/// `pi` the circle constant. Functions: exp log sin cos sinh cosh sqrt re im
/// conj. A leading '-' in front of a '^'-factor is rejected; parenthesize.
class Expr {
 public:
  enum class Kind { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Func };
  enum class Fn { Exp, Log, Sin, Cos, Sinh, Cosh, Sqrt, Re, Im, Conj };

  Kind kind = Kind::Const;
  cplx value{};       // Const
  int var = -1;       // Var
  Fn fn = Fn::Exp;    // Func
  size_t offset = 0;  // byte offset into the source, for diagnostics
  std::vector<Expr> kids;

  bool structurally_equal(const Expr& o) const;
  std::string pretty(const std::vector<std::string>& vars) const;

  cplx eval(std::span<const cplx> vals) const;
  Jet eval(std::span<const Jet> vals) const;
};

Expr parse_expr(const std::string& source, const std::vector<std::string>& vars);

/// Evaluate with jets seeded at `point`, one jet variable per declared variable.
Jet jet_eval(const Expr& e, std::span<const cplx> point, int order);

}  // namespace cshyp
