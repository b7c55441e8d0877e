#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordring/crossed_product.hpp"
#include "ordring/hahn.hpp"
#include "ordring/rational.hpp"

namespace ordring {

// Evaluation context for series towers over an abelian lex group: one rank-1
// exponent level per convex jump (innermost first), so that every level is
// archimedean and geometric inversion needs only finitely many terms per
// frontier. The requested widths say how far beyond its valuation each level
// of a result must be certified.
struct TowerCtx {
    CPRingPtr ring;
    int levels = 1;
    std::vector<Rational> width;      // user-requested certified width per level
    std::vector<Rational> working;    // internal evaluation width (>= width)
    long geo_term_cap = 4096;

    const Rational& working_width(int level) const { return working.at(static_cast<size_t>(level - 1)); }
};

TowerCtx make_tower_ctx(CPRingPtr ring, std::vector<Rational> widths);

// Element of the series tower: a scalar at level 0, otherwise a truncated
// series over the level's rank-1 exponent group with coefficients one level
// down. Coefficients are dropped only when exactly zero; a stored empty
// coefficient with a finite frontier records genuine uncertainty.
class TowerElem {
  public:
    int level = 0;
    Scalar sc;
    std::vector<std::pair<Rational, TowerElem>> terms;  // ascending exponents
    QBound front = QBound::infinity();

    bool exact_zero() const;
    // has a stored chain ending in a non-zero scalar
    bool cert_nonzero() const;
    // least exponent of possibly non-zero content (frontier when stored-empty)
    QBound lower_bound() const;

    std::string str() const;
};

TowerElem te_scalar(const Scalar& a);
TowerElem te_zero(int level);
TowerElem te_one(const FieldSpec& field, int level);
TowerElem te_monomial(int level, const Rational& exp, TowerElem coef);

TowerElem te_add(const TowerCtx& ctx, const TowerElem& a, const TowerElem& b);
TowerElem te_neg(const TowerElem& a);
TowerElem te_sub(const TowerCtx& ctx, const TowerElem& a, const TowerElem& b);
TowerElem te_scale(const TowerElem& a, const Scalar& s);
TowerElem te_mul(const TowerCtx& ctx, const TowerElem& a, const TowerElem& b);

// conjugation x_{s e_k} . a . x_{s e_k}^-1 of an element living below level k
TowerElem te_conj(const TowerCtx& ctx, int k, const Rational& s, const TowerElem& a);

// Inversion by leading-term factoring: m = d (1 + eps) x_{v(m)},
// m^-1 = x_{v(m)}^-1 (sum (-eps)^j) d^-1, recursing into lower levels for
// d^-1. Raises ZeroUpToFrontier when no leading term is certified and
// LevelExhausted when the recursion hits one.
TowerElem te_invert(const TowerCtx& ctx, const TowerElem& m);

// true if every certified coefficient is zero (ghosts are vacuously fine)
bool te_zero_on_certified(const TowerElem& e);

// crossed-product element as an exact tower element
TowerElem embed_cp(const TowerCtx& ctx, const CPElement& x);

// tower element as a series over the full group, with the staircase
// certificate collapsed to the strongest single lex cut
HahnSeries flatten(const TowerCtx& ctx, const TowerElem& e);

// restrict certificates to the requested widths (anchored at valuations)
TowerElem te_recut(const TowerCtx& ctx, TowerElem e, const std::vector<Rational>& widths);
// check the leading-chain certified widths; raises FrontierBudgetExceeded
void te_verify_width(const TowerCtx& ctx, const TowerElem& e, const std::vector<Rational>& widths);

struct LeftRepr {
    GroupElement h;
    int jump_index = 1;  // the jump (C_{k-1}, C_k)
    std::vector<std::pair<Rational, TowerElem>> terms;  // transversal exponent, lower coefficient
    QBound front = QBound::infinity();                  // certificate at the jump level
};

// Left representation x = x_h (sum_g d_g x_g): the jump is the innermost
// level with at least two certified coset contributions; h collects the
// single-term levels above it.
LeftRepr tower_left_repr(const TowerCtx& ctx, const TowerElem& x);

// x = x_h . reduced with reduced's representation living at its jump level
struct Reduced {
    GroupElement h;
    int jump_index = 1;
    TowerElem reduced;
};
Reduced tower_reduce(const TowerCtx& ctx, const TowerElem& x);

// x_h (sum_g d_g x_g) reassembled, for roundtrip checks
TowerElem assemble_left_repr(const TowerCtx& ctx, const LeftRepr& rep);

}  // namespace ordring
