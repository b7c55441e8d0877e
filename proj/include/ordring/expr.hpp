#pragma once

#include <memory>
#include <string>

#include "ordring/crossed_product.hpp"
#include "ordring/tower.hpp"

namespace ordring {

// Rational expression over F[G,eta,alpha]: constants combined by addition,
// negation, multiplication, and inversion.
struct RationalExpr;
using ExprPtr = std::shared_ptr<const RationalExpr>;

struct RationalExpr {
    enum class Kind { Const, Add, Neg, Mul, Inv };
    Kind kind = Kind::Const;
    CPElement value;  // Const
    ExprPtr a, b;

    static ExprPtr constant(CPElement x);
    static ExprPtr add(ExprPtr x, ExprPtr y);
    static ExprPtr sub(ExprPtr x, ExprPtr y);
    static ExprPtr neg(ExprPtr x);
    static ExprPtr mul(ExprPtr x, ExprPtr y);
    static ExprPtr inv(ExprPtr x);

    int inv_depth() const;
    std::string str() const;
};

// Grammar:  E := T (("+"|"-") T)* ;  T := F ("*" F)* ;
//           F := "inv(" E ")" | "(" E ")" | "-" F | term-literal
// where a term literal is  scalar "*[" word "]"  or "[" word "]".
ExprPtr parse_expr(const CPRingPtr& ring, const std::string& text);

// CPElement literal "a*[w] + b*[v] - ..." (the additive sub-grammar only)
CPElement parse_element(const CPRingPtr& ring, const std::string& text);

// Evaluate into the series tower. Inv nodes are expanded with widened working
// budgets; the result is checked against the requested widths and re-cut to
// them. Evaluation failures carry the offending subexpression.
TowerElem eval_expr(const TowerCtx& ctx, const ExprPtr& e);

}  // namespace ordring
