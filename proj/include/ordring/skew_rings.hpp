#pragma once

#include <string>
#include <vector>

#include "ordring/magnus.hpp"
#include "ordring/scalar.hpp"
#include "ordring/skew_poly.hpp"
#include "ordring/tower.hpp"

namespace ordring {

// Plain commutative coefficients; phi = id. The classical-division oracle.
struct ScalarSkewRing {
    using value = Scalar;
    FieldSpec field;

    value zero() const { return Scalar::zero(field); }
    value one() const { return Scalar::one(field); }
    value add(const value& a, const value& b) const { return a + b; }
    value neg(const value& a) const { return -a; }
    value mul(const value& a, const value& b) const { return a * b; }
    value inv(const value& a) const { return a.inv(); }
    bool is_zero(const value& a) const { return a.is_zero(); }
    value twist(const value& a) const { return a; }
    value twist_inv(const value& a) const { return a; }
};

// Truncated D_{F_k} via the Magnus model, with an automorphism of the free
// group extended by substitution.
struct MagnusSkewRing {
    using value = MagnusSeries;
    MagnusCtx ctx;
    std::vector<MagnusSeries> phi_images, phi_inv_images;  // of the variables

    value zero() const { return MagnusSeries(ctx); }
    value one() const { return MagnusSeries::constant(ctx, 1); }
    value add(const value& a, const value& b) const { return a + b; }
    value neg(const value& a) const { return -a; }
    value mul(const value& a, const value& b) const { return a * b; }
    value inv(const value& a) const { return a.inverse(); }
    bool is_zero(const value& a) const { return a.is_zero(); }
    value twist(const value& a) const {
        return phi_images.empty() ? a : a.substitute(phi_images);
    }
    value twist_inv(const value& a) const {
        return phi_inv_images.empty() ? a : a.substitute(phi_inv_images);
    }
};

// The braid automorphism a -> b, b -> a^-1 b of F_2 = [B_3, B_3] in the
// Magnus model (a, b are the variables' group preimages).
MagnusSkewRing magnus_skew_ring_b3(MagnusCtx ctx);

// Coefficients one level below the top of a tower; t is the top-level axis
// monomial and phi its conjugation action. Models R[x_g, eta, alpha] as a
// skew polynomial ring over the inner levels.
struct TowerSkewRing {
    using value = TowerElem;
    const TowerCtx* ctx = nullptr;
    int coef_level = 0;  // = ctx->levels - 1; 0 means scalar coefficients

    value zero() const { return coef_level == 0 ? te_scalar(Scalar::zero(ctx->ring->field)) : te_zero(coef_level); }
    value one() const { return te_one(ctx->ring->field, coef_level); }
    value add(const value& a, const value& b) const { return te_add(*ctx, a, b); }
    value neg(const value& a) const { return te_neg(a); }
    value mul(const value& a, const value& b) const { return te_mul(*ctx, a, b); }
    value inv(const value& a) const { return te_invert(*ctx, a); }
    bool is_zero(const value& a) const { return !a.cert_nonzero(); }
    value twist(const value& a) const { return te_conj(*ctx, ctx->levels, Rational(1), a); }
    value twist_inv(const value& a) const { return te_conj(*ctx, ctx->levels, Rational(-1), a); }
};

}  // namespace ordring
