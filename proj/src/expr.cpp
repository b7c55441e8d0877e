#include "ordring/expr.hpp"

#include <algorithm>
#include <cctype>

#include "ordring/errors.hpp"

namespace ordring {

ExprPtr RationalExpr::constant(CPElement x) {
    auto e = std::make_shared<RationalExpr>();
    e->kind = Kind::Const;
    e->value = std::move(x);
    return e;
}

namespace {
ExprPtr node(RationalExpr::Kind k, ExprPtr a, ExprPtr b = nullptr) {
    auto e = std::make_shared<RationalExpr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}
}  // namespace

ExprPtr RationalExpr::add(ExprPtr x, ExprPtr y) { return node(Kind::Add, std::move(x), std::move(y)); }
ExprPtr RationalExpr::sub(ExprPtr x, ExprPtr y) {
    return node(Kind::Add, std::move(x), node(Kind::Neg, std::move(y)));
}
ExprPtr RationalExpr::neg(ExprPtr x) { return node(Kind::Neg, std::move(x)); }
ExprPtr RationalExpr::mul(ExprPtr x, ExprPtr y) { return node(Kind::Mul, std::move(x), std::move(y)); }
ExprPtr RationalExpr::inv(ExprPtr x) { return node(Kind::Inv, std::move(x)); }

int RationalExpr::inv_depth() const {
    switch (kind) {
        case Kind::Const: return 0;
        case Kind::Neg: return a->inv_depth();
        case Kind::Add:
        case Kind::Mul: return std::max(a->inv_depth(), b->inv_depth());
        case Kind::Inv: return 1 + a->inv_depth();
    }
    return 0;
}

std::string RationalExpr::str() const {
    switch (kind) {
        case Kind::Const: return value.support_size() == 1 ? value.str() : "(" + value.str() + ")";
        case Kind::Neg: return "-" + a->str();
        case Kind::Add: return "(" + a->str() + " + " + b->str() + ")";
        case Kind::Mul: return a->str() + "*" + b->str();
        case Kind::Inv: return "inv(" + a->str() + ")";
    }
    return "?";
}

namespace {

struct Parser {
    const CPRingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(const char* w) {
        skip();
        size_t n = std::string(w).size();
        if (s.compare(pos, n, w) == 0) {
            pos += n;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        raise(errc::invalid_config,
              why + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            skip();
            if (eat('+'))
                lhs = RationalExpr::add(lhs, term());
            else if (eat('-'))
                lhs = RationalExpr::sub(lhs, term());
            else
                break;
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (true) {
            skip();
            // '*' that is part of "scalar*[" belongs to the literal, which
            // factor() consumed; a bare '*' is multiplication
            if (eat('*'))
                lhs = RationalExpr::mul(lhs, factor());
            else
                break;
        }
        return lhs;
    }

    ExprPtr factor() {
        skip();
        if (eat_word("inv(")) {
            ExprPtr e = expr();
            if (!eat(')')) fail("expected ')'");
            return RationalExpr::inv(e);
        }
        if (pos < s.size() && s[pos] == '-') {
            ++pos;
            return RationalExpr::neg(factor());
        }
        if (pos < s.size() && s[pos] == '(' && !looks_like_word()) {
            ++pos;
            ExprPtr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        return literal();
    }

    // disambiguate "(1,2)"-style words from parenthesized subexpressions:
    // a word never contains the characters '+', '*', or "inv("
    bool looks_like_word() {
        int depth = 0;
        for (size_t i = pos; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') {
                if (--depth == 0) return true;
            }
            if (depth >= 1 && (s[i] == '+' || s[i] == '*' || s[i] == '[')) return false;
        }
        return false;
    }

    ExprPtr literal() {
        skip();
        size_t start = pos;
        // optionally signed rational scalar, then "*[" or end of literal
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        std::string scalar_text = s.substr(start, pos - start);
        if (scalar_text == "-" || scalar_text == "+") fail("dangling sign");
        Scalar coef = Scalar::one(ring->field);
        bool have_scalar = !scalar_text.empty();
        if (have_scalar) {
            coef = Scalar::parse(scalar_text, ring->field);
            if (!eat('*')) {
                // pure scalar literal: coefficient of the identity
                return RationalExpr::constant(CPElement::scalar(ring, coef));
            }
        }
        if (!eat('[')) fail("expected '[' of a term literal");
        size_t close = s.find(']', pos);
        if (close == std::string::npos) fail("unterminated '['");
        std::string word = s.substr(pos, close - pos);
        pos = close + 1;
        GroupElement g = elem_parse(ring->group, word);
        return RationalExpr::constant(CPElement::monomial(ring, g, coef));
    }
};

}  // namespace

ExprPtr parse_expr(const CPRingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    ExprPtr e = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

namespace {

// fold an expression tree without Inv nodes back into a CPElement
CPElement fold_cp(const ExprPtr& e) {
    switch (e->kind) {
        case RationalExpr::Kind::Const: return e->value;
        case RationalExpr::Kind::Neg: return cp_neg(fold_cp(e->a));
        case RationalExpr::Kind::Add: return cp_add(fold_cp(e->a), fold_cp(e->b));
        case RationalExpr::Kind::Mul: return cp_mul(fold_cp(e->a), fold_cp(e->b));
        case RationalExpr::Kind::Inv:
            raise(errc::invalid_config, "element literal cannot contain inv(...)");
    }
    raise(errc::invalid_config, "bad expression");
}

}  // namespace

CPElement parse_element(const CPRingPtr& ring, const std::string& text) {
    return fold_cp(parse_expr(ring, text));
}

namespace {

TowerElem eval_rec(const TowerCtx& ctx, const ExprPtr& e) {
    switch (e->kind) {
        case RationalExpr::Kind::Const: return embed_cp(ctx, e->value);
        case RationalExpr::Kind::Neg: return te_neg(eval_rec(ctx, e->a));
        case RationalExpr::Kind::Add:
            return te_add(ctx, eval_rec(ctx, e->a), eval_rec(ctx, e->b));
        case RationalExpr::Kind::Mul:
            return te_mul(ctx, eval_rec(ctx, e->a), eval_rec(ctx, e->b));
        case RationalExpr::Kind::Inv: {
            TowerElem inner = eval_rec(ctx, e->a);
            try {
                return te_invert(ctx, inner);
            } catch (const domain_error& err) {
                if (err.code() == errc::zero_up_to_frontier ||
                    err.code() == errc::level_exhausted ||
                    err.code() == errc::division_by_zero)
                    raise(err.code(), std::string(err.what()) + " in inv(" + e->a->str() + ")");
                throw;
            }
        }
    }
    raise(errc::invalid_config, "bad expression node");
}

}  // namespace

TowerElem eval_expr(const TowerCtx& ctx, const ExprPtr& e) {
    TowerCtx work = ctx;
    long mult = 1 + e->inv_depth();
    for (auto& w : work.working) w = w * mult;
    TowerElem out = eval_rec(work, e);
    if (!out.exact_zero() && out.cert_nonzero()) {
        te_verify_width(ctx, out, ctx.width);
        out = te_recut(ctx, std::move(out), ctx.width);
    }
    return out;
}

}  // namespace ordring
