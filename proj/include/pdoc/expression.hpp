#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pdoc/lattice_operator.hpp"
#include "pdoc/symbols.hpp"

namespace pdoc {

// Operator expression grammar (whitespace between tokens is ignored):
//
//   expr    := term { ("+" | "-") term }
//   term    := unary { "*" unary }
//   unary   := "-" unary | power
//   power   := primary [ "^" unsigned ]          (repeated composition)
//   primary := rational | "i" | z | builtin | ident | unit
//            | "(" expr ")" | "[" expr "," expr "]"
//   z       := "z" [ "^" ["-"] unsigned ]        (z alone means z^1)
//   unit    := "E" "(" unsigned "," unsigned ")"  (matrix unit, 1-based)
//   builtin := "I" | "P_PLUS" | "P_MINUS" | "P_ZERO" | "D" | "ABS_D" | "DELTA"
//   rational:= unsigned [ "/" unsigned ]
//
// Scalars (rationals, "i") act as multiples of the identity, so "2*z^3", "(1+2*i)*D" and
// "1/2*P_PLUS" are all operators. "[a, b]" is the commutator ab - ba. Any other
// identifier names an operand bound by the caller.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct Number {
    GaussianRational value;
  };
  struct ZPower {
    long mode;
  };
  struct Name {
    std::string name;
  };
  struct Unit {
    std::size_t row;
    std::size_t col;
  };
  struct Binary {
    char op;  // '+', '-', '*', 'c' (commutator)
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct Negate {
    ExprPtr operand;
  };
  struct Power {
    ExprPtr base;
    unsigned exponent;
  };
  std::variant<Number, ZPower, Name, Unit, Binary, Negate, Power> node;
  std::size_t position = 0;
};

/// Throws ParseError with the offending position.
ExprPtr parse_expression(std::string_view text);

using OperatorBindings = std::map<std::string, LatticeOperator, std::less<>>;
using SymbolBindings = std::map<std::string, FormalSymbol, std::less<>>;

/// Evaluates in the operator algebra. DELTA is D o D; unknown names raise ParseError.
LatticeOperator evaluate_operator(const Expr& expr, std::size_t dim, const OperatorBindings& bindings = {});
LatticeOperator evaluate_operator(std::string_view text, std::size_t dim, const OperatorBindings& bindings = {});

/// Evaluates in the formal symbol algebra with star products at the given depth.
/// P_ZERO is smoothing and maps to the zero symbol.
FormalSymbol evaluate_symbol(const Expr& expr, std::size_t dim, std::size_t depth, const SymbolBindings& bindings = {});
FormalSymbol evaluate_symbol(std::string_view text, std::size_t dim, std::size_t depth,
                             const SymbolBindings& bindings = {});

}  // namespace pdoc
