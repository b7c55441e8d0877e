#pragma once

#include <utility>
#include <vector>

#include "ordring/errors.hpp"

namespace ordring {

// Skew polynomials sum c_i t^i over a division context Ring, with the
// commutation rule t c = phi(c) t. Ring supplies the coefficient arithmetic:
//
//   using value = ...;
//   value zero(), one();
//   value add(a, b), neg(a), mul(a, b), inv(a);   // inv may throw
//   bool is_zero(a);
//   value twist(a);       // phi
//   value twist_inv(a);   // phi^-1
//
// Coefficient rings in use: truncated Magnus series over F_2 with the braid
// automorphism, and tower-series levels with conjugation by the top monomial.
template <class Ring>
struct SkewPoly {
    std::vector<typename Ring::value> c;  // c[i] on t^i

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
};

template <class Ring>
void sp_normalize(const Ring& R, SkewPoly<Ring>& p) {
    while (!p.c.empty() && R.is_zero(p.c.back())) p.c.pop_back();
}

template <class Ring>
SkewPoly<Ring> sp_from_coeffs(const Ring& R, std::vector<typename Ring::value> coeffs) {
    SkewPoly<Ring> p{std::move(coeffs)};
    sp_normalize(R, p);
    return p;
}

template <class Ring>
SkewPoly<Ring> sp_zero(const Ring&) {
    return {};
}

template <class Ring>
SkewPoly<Ring> sp_one(const Ring& R) {
    return {{R.one()}};
}

template <class Ring>
SkewPoly<Ring> sp_t(const Ring& R) {
    return {{R.zero(), R.one()}};
}

template <class Ring>
typename Ring::value sp_twist_pow(const Ring& R, long k, typename Ring::value a) {
    for (long i = 0; i < k; ++i) a = R.twist(a);
    for (long i = 0; i > k; --i) a = R.twist_inv(a);
    return a;
}

template <class Ring>
SkewPoly<Ring> sp_add(const Ring& R, const SkewPoly<Ring>& a, const SkewPoly<Ring>& b) {
    SkewPoly<Ring> out;
    size_t n = std::max(a.c.size(), b.c.size());
    out.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i >= a.c.size())
            out.c.push_back(b.c[i]);
        else if (i >= b.c.size())
            out.c.push_back(a.c[i]);
        else
            out.c.push_back(R.add(a.c[i], b.c[i]));
    }
    sp_normalize(R, out);
    return out;
}

template <class Ring>
SkewPoly<Ring> sp_neg(const Ring& R, const SkewPoly<Ring>& a) {
    SkewPoly<Ring> out = a;
    for (auto& v : out.c) v = R.neg(v);
    return out;
}

template <class Ring>
SkewPoly<Ring> sp_sub(const Ring& R, const SkewPoly<Ring>& a, const SkewPoly<Ring>& b) {
    return sp_add(R, a, sp_neg(R, b));
}

template <class Ring>
SkewPoly<Ring> sp_mul(const Ring& R, const SkewPoly<Ring>& a, const SkewPoly<Ring>& b) {
    SkewPoly<Ring> out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, R.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (R.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            // (a t^i)(b t^j) = a phi^i(b) t^{i+j}
            auto piece = R.mul(a.c[i], sp_twist_pow(R, static_cast<long>(i), b.c[j]));
            out.c[i + j] = R.add(out.c[i + j], piece);
        }
    }
    sp_normalize(R, out);
    return out;
}

// a = q b + r with deg r < deg b.
template <class Ring>
std::pair<SkewPoly<Ring>, SkewPoly<Ring>> sp_divmod(const Ring& R, SkewPoly<Ring> a,
                                                    const SkewPoly<Ring>& b) {
    if (b.is_zero()) raise(errc::division_by_zero, "skew division by zero");
    SkewPoly<Ring> q;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        long k = a.degree() - b.degree();
        // (c t^k)(lead_b t^db) = c phi^k(lead_b) t^da
        auto c = R.mul(a.c.back(), R.inv(sp_twist_pow(R, k, b.c.back())));
        SkewPoly<Ring> mono;
        mono.c.assign(static_cast<size_t>(k) + 1, R.zero());
        mono.c.back() = c;
        q = sp_add(R, q, mono);
        a = sp_sub(R, a, sp_mul(R, mono, b));
        if (!a.is_zero() && a.degree() >= b.degree() + k)
            raise(errc::certification_failed, "skew division failed to reduce degree");
    }
    return {q, a};
}

// Least common left multiple witnesses: u a = v b, both non-zero, via the
// extended Euclidean algorithm on right division.
template <class Ring>
std::pair<SkewPoly<Ring>, SkewPoly<Ring>> sp_ore_witness(const Ring& R, const SkewPoly<Ring>& a,
                                                         const SkewPoly<Ring>& b) {
    if (a.is_zero() || b.is_zero()) raise(errc::division_by_zero, "ore witness of zero");
    // rows r_i = u_i a + v_i b
    SkewPoly<Ring> r0 = a, r1 = b;
    SkewPoly<Ring> u0 = sp_one(R), v0 = sp_zero(R);
    SkewPoly<Ring> u1 = sp_zero(R), v1 = sp_one(R);
    long guard = 0;
    while (!r1.is_zero()) {
        auto [q, r2] = sp_divmod(R, r0, r1);
        SkewPoly<Ring> u2 = sp_sub(R, u0, sp_mul(R, q, u1));
        SkewPoly<Ring> v2 = sp_sub(R, v0, sp_mul(R, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
        if (++guard > 1000) raise(errc::certification_failed, "euclidean loop did not terminate");
    }
    // r1 = 0 = u1 a + v1 b
    return {u1, sp_neg(R, v1)};
}

}  // namespace ordring
