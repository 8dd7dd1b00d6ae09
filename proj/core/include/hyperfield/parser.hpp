#ifndef HYPERFIELD_PARSER_HPP
#define HYPERFIELD_PARSER_HPP

#include <memory>
#include <string_view>

#include "hyperfield/hyper.hpp"

namespace hyperfield {

/// Expression tree over rational literals, w, eps, unary minus, the four
/// field operations, and rational powers of w/eps.
struct Ast {
    enum class Kind { Number, Omega, Eps, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    Rational value;  // literal, or the exponent of a Pow node
    std::unique_ptr<Ast> lhs, rhs;  // Pow: lhs is the base (Omega or Eps)
};

// Grammar:
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | atom ["^" exponent]
//   atom   := rational | "w" | "eps" | "(" expr ")"
//   exponent := ["-"] rational | "(" ["-"] rational ")"
// '^' binds only to a bare w or eps; anything else is PowerBaseNotOmega,
// and a non-literal exponent is ExponentNotRational.
std::unique_ptr<Ast> parse(std::string_view text);

// Folds the tree through the field operations; eps elaborates to 1/w.
Hyper eval(const Ast& ast);

Hyper eval_expression(std::string_view text);

}  // namespace hyperfield

#endif
