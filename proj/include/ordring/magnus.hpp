#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ordring/rational.hpp"
#include "ordring/words.hpp"

namespace ordring {

// Truncated free associative series over Q in noncommuting variables
// X_0 .. X_{k-1}, cut at total degree <= degree. This is the desk-scale model
// of D_{F_k}: the Magnus map sends generator i to 1 + X_i, and elements whose
// image has non-zero constant term can be inverted geometrically.

struct MagnusCtx {
    int nvars = 2;
    int degree = 8;

    bool operator==(const MagnusCtx& o) const {
        return nvars == o.nvars && degree == o.degree;
    }
};

// Monomial = word over variable indices; ordered by degree, then lex.
using MagnusMono = std::vector<int>;

struct MagnusMonoLess {
    bool operator()(const MagnusMono& a, const MagnusMono& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class MagnusSeries {
  public:
    MagnusSeries() = default;
    explicit MagnusSeries(MagnusCtx c) : ctx_(c) {}

    static MagnusSeries constant(MagnusCtx c, const Rational& a);
    static MagnusSeries variable(MagnusCtx c, int i);

    const MagnusCtx& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    // valuation: least total degree of a term, degree+1 when zero
    int low_degree() const;

    MagnusSeries operator+(const MagnusSeries& o) const;
    MagnusSeries operator-(const MagnusSeries& o) const;
    MagnusSeries operator-() const;
    MagnusSeries operator*(const MagnusSeries& o) const;
    MagnusSeries scaled(const Rational& a) const;

    // Inverse of a series with non-zero constant term; raises
    // MagnusNotReducible otherwise.
    MagnusSeries inverse() const;

    // Ring endomorphism X_i -> images[i]; every image must have zero constant
    // term so that truncation at the degree bound stays sound.
    MagnusSeries substitute(const std::vector<MagnusSeries>& images) const;

    // Coefficient of the degree-then-lex least non-constant term; (mono, coeff).
    // Only valid when (*this - constant) is non-zero.
    std::pair<MagnusMono, Rational> leading_nonconstant() const;

    bool operator==(const MagnusSeries& o) const { return terms_ == o.terms_; }

    const std::map<MagnusMono, Rational, MagnusMonoLess>& terms() const { return terms_; }
    std::string str() const;

  private:
    void set(const MagnusMono& m, const Rational& v);

    MagnusCtx ctx_{};
    std::map<MagnusMono, Rational, MagnusMonoLess> terms_;
};

// Magnus embedding of the free group: generator i -> 1 + X_i, its inverse to
// the alternating geometric series.
MagnusSeries magnus_image(const Word& w, MagnusCtx ctx);

enum class Ordering { LT, EQ, GT };

// The standard bi-order of the free group: u < w iff the first non-constant
// coefficient of magnus_image(u^-1 w) is positive. Ties that survive to the
// degree bound raise UndecidedAtTruncation unless the words are equal.
Ordering magnus_compare(const Word& u, const Word& w, MagnusCtx ctx);

}  // namespace ordring
