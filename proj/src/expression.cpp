#include "pdoc/expression.hpp"

#include <cctype>

#include "pdoc/errors.hpp"

namespace pdoc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static ExprPtr make(Expr::Binary b, std::size_t at) {
    return std::make_shared<const Expr>(Expr{std::move(b), at});
  }

  ExprPtr expr() {
    auto lhs = term();
    while (true) {
      const std::size_t at = (skip_space(), pos_);
      if (accept('+')) {
        lhs = make({'+', lhs, term()}, at);
      } else if (accept('-')) {
        lhs = make({'-', lhs, term()}, at);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = unary();
    while (true) {
      const std::size_t at = (skip_space(), pos_);
      if (!accept('*')) return lhs;
      lhs = make({'*', lhs, unary()}, at);
    }
  }

  ExprPtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return std::make_shared<const Expr>(Expr{Expr::Negate{unary()}, at});
    return power();
  }

  unsigned long parse_unsigned() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 18) fail("integer literal too large");
    return std::stoul(std::string(digits));
  }

  ExprPtr power() {
    auto base = primary();
    skip_space();
    const std::size_t at = pos_;
    if (std::holds_alternative<Expr::ZPower>(base->node)) return base;
    if (accept('^')) {
      const auto exponent = parse_unsigned();
      return std::make_shared<const Expr>(Expr{Expr::Power{base, static_cast<unsigned>(exponent)}, at});
    }
    return base;
  }

  ExprPtr primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      parse_unsigned();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        parse_unsigned();
      }
      Rational q;
      try {
        q = parse_rational(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument& e) {
        pos_ = start;
        fail(e.what());
      }
      return std::make_shared<const Expr>(Expr{Expr::Number{GaussianRational(q)}, at});
    }
    if (accept('(')) {
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (accept('[')) {
      auto lhs = expr();
      expect(',');
      auto rhs = expr();
      expect(']');
      return make({'c', lhs, rhs}, at);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return std::make_shared<const Expr>(Expr{Expr::Number{GaussianRational::imaginary_unit()}, at});
      if (name == "z") {
        long mode = 1;
        if (accept('^')) {
          const bool negative = accept('-');
          mode = static_cast<long>(parse_unsigned());
          if (negative) mode = -mode;
        }
        return std::make_shared<const Expr>(Expr{Expr::ZPower{mode}, at});
      }
      if (name == "E") {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '(') {
          expect('(');
          const auto row = parse_unsigned();
          expect(',');
          const auto col = parse_unsigned();
          expect(')');
          return std::make_shared<const Expr>(Expr{Expr::Unit{row, col}, at});
        }
      }
      return std::make_shared<const Expr>(Expr{Expr::Name{name}, at});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Matrix unit_matrix(const Expr::Unit& u, std::size_t dim, std::size_t position) {
  if (u.row < 1 || u.col < 1 || u.row > dim || u.col > dim) {
    throw ParseError("matrix unit E(" + std::to_string(u.row) + "," + std::to_string(u.col) +
                         ") out of range for dimension " + std::to_string(dim),
                     position);
  }
  return Matrix::unit(dim, u.row - 1, u.col - 1);
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

LatticeOperator evaluate_operator(const Expr& expr, std::size_t dim, const OperatorBindings& bindings) {
  return std::visit(
      Overloaded{
          [&](const Expr::Number& n) { return n.value * LatticeOperator::identity(dim); },
          [&](const Expr::ZPower& z) { return op_from_laurent(LaurentPoly::z(z.mode, dim)); },
          [&](const Expr::Unit& u) { return op_constant(unit_matrix(u, dim, expr.position)); },
          [&](const Expr::Name& n) -> LatticeOperator {
            if (n.name == "I") return LatticeOperator::identity(dim);
            if (n.name == "P_PLUS") return op_projection_plus(dim);
            if (n.name == "P_MINUS") return op_projection_minus(dim);
            if (n.name == "P_ZERO") return op_projection_zero(dim);
            if (n.name == "D") return op_derivative(dim);
            if (n.name == "ABS_D") return op_abs_derivative(dim);
            if (n.name == "DELTA") return op_derivative(dim) * op_derivative(dim);
            auto it = bindings.find(n.name);
            if (it == bindings.end()) throw ParseError("unknown operand '" + n.name + "'", expr.position);
            if (it->second.dim() != dim) {
              throw ParseError("operand '" + n.name + "' has dimension " + std::to_string(it->second.dim()),
                               expr.position);
            }
            return it->second;
          },
          [&](const Expr::Binary& b) -> LatticeOperator {
            const auto lhs = evaluate_operator(*b.lhs, dim, bindings);
            const auto rhs = evaluate_operator(*b.rhs, dim, bindings);
            switch (b.op) {
              case '+': return lhs + rhs;
              case '-': return lhs - rhs;
              case '*': return lhs * rhs;
              default: return commutator(lhs, rhs);
            }
          },
          [&](const Expr::Negate& n) { return -evaluate_operator(*n.operand, dim, bindings); },
          [&](const Expr::Power& p) {
            const auto base = evaluate_operator(*p.base, dim, bindings);
            auto out = LatticeOperator::identity(dim);
            for (unsigned e = 0; e < p.exponent; ++e) out = out * base;
            return out;
          },
      },
      expr.node);
}

LatticeOperator evaluate_operator(std::string_view text, std::size_t dim, const OperatorBindings& bindings) {
  return evaluate_operator(*parse_expression(text), dim, bindings);
}

FormalSymbol evaluate_symbol(const Expr& expr, std::size_t dim, std::size_t depth, const SymbolBindings& bindings) {
  const auto identity = [&] { return symbol_of_multiplication(LaurentPoly::z(0, dim), depth); };
  return std::visit(
      Overloaded{
          [&](const Expr::Number& n) { return symbol_scale(n.value, identity()); },
          [&](const Expr::ZPower& z) { return symbol_of_multiplication(LaurentPoly::z(z.mode, dim), depth); },
          [&](const Expr::Unit& u) {
            return symbol_of_multiplication(LaurentPoly::constant(unit_matrix(u, dim, expr.position)), depth);
          },
          [&](const Expr::Name& n) -> FormalSymbol {
            if (n.name == "I") return identity();
            if (n.name == "P_ZERO") return FormalSymbol(dim, 0, depth);
            if (n.name == "P_PLUS" || n.name == "P_MINUS" || n.name == "D" || n.name == "ABS_D" ||
                n.name == "DELTA") {
              return symbol_of_builtin(n.name, dim, depth);
            }
            auto it = bindings.find(n.name);
            if (it == bindings.end()) throw ParseError("unknown operand '" + n.name + "'", expr.position);
            if (it->second.dim() != dim) {
              throw ParseError("operand '" + n.name + "' has dimension " + std::to_string(it->second.dim()),
                               expr.position);
            }
            return it->second;
          },
          [&](const Expr::Binary& b) -> FormalSymbol {
            const auto lhs = evaluate_symbol(*b.lhs, dim, depth, bindings);
            const auto rhs = evaluate_symbol(*b.rhs, dim, depth, bindings);
            switch (b.op) {
              case '+': return symbol_add(lhs, rhs);
              case '-': return symbol_subtract(lhs, rhs);
              case '*': return star_product(lhs, rhs, depth);
              default: return star_commutator(lhs, rhs, depth);
            }
          },
          [&](const Expr::Negate& n) { return symbol_scale(-1, evaluate_symbol(*n.operand, dim, depth, bindings)); },
          [&](const Expr::Power& p) {
            const auto base = evaluate_symbol(*p.base, dim, depth, bindings);
            auto out = identity();
            for (unsigned e = 0; e < p.exponent; ++e) out = star_product(out, base, depth);
            return out;
          },
      },
      expr.node);
}

FormalSymbol evaluate_symbol(std::string_view text, std::size_t dim, std::size_t depth,
                             const SymbolBindings& bindings) {
  return evaluate_symbol(*parse_expression(text), dim, depth, bindings);
}

}  // namespace pdoc
