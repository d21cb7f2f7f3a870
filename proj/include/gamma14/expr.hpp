#pragma once

#include <memory>
#include <string>

#include "gamma14/enclosure.hpp"

namespace gamma14 {

// Bound-function expressions: constants, one free variable, +, -, *, abs,
// min, max and rational powers p/q with q <= 6.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Constant, Variable, Add, Sub, Mul, Neg, Abs, Min, Max, Pow };
    Kind kind;
    Rat value;        // Constant
    long pnum = 1;    // Pow exponent numerator
    long pden = 1;    // Pow exponent denominator (1..6)
    ExprPtr a, b;
};

ExprPtr expr_const(const Rat& v);
ExprPtr expr_var();
ExprPtr expr_add(ExprPtr a, ExprPtr b);
ExprPtr expr_sub(ExprPtr a, ExprPtr b);
ExprPtr expr_mul(ExprPtr a, ExprPtr b);
ExprPtr expr_neg(ExprPtr a);
ExprPtr expr_abs(ExprPtr a);
ExprPtr expr_min(ExprPtr a, ExprPtr b);
ExprPtr expr_max(ExprPtr a, ExprPtr b);
ExprPtr expr_pow(ExprPtr a, long pnum, long pden);

// Grammar:  expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := atom ['^' exponent] ; exponent := int | '(' int '/' int ')' ;
// atom := rational | ident | '(' expr ')' | '-'factor | abs(e) | min(e,e) | max(e,e).
// Any identifier other than abs/min/max denotes the (single) free variable.
ExprPtr parse_expr(const std::string& s);

// Range enclosure of the expression over x; root_width bounds the width of
// every root enclosure introduced by fractional powers.  Inclusion monotone.
// Throws std::domain_error for a negative radicand under a fractional power.
Enclosure enclosure_eval(const ExprPtr& e, const Enclosure& x, const Rat& root_width);

// Exact ordering of the expression value at a rational point against a
// rational v, refined until decidable.  Terminates for this expression
// class: every subexpression value at a rational point is either rational
// (detected exactly) or irrational (eventually separated).
Ordering cmp_expr_at(const ExprPtr& e, const Rat& point, const Rat& v);

std::string expr_str(const ExprPtr& e);

}  // namespace gamma14
