#pragma once

#include <string>

#include "ordring/errors.hpp"
#include "ordring/rational.hpp"

namespace ordring {

// Ground field of the crossed product: Q, or a prime field F_p with runtime p.
// Both are commutative, so the level-0 automorphisms alpha_g are trivial;
// noncommutativity only enters through the series towers built on top.
struct FieldSpec {
    long p = 0;  // 0 = rationals

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec& o) const { return p == o.p; }
};

class Scalar {
  public:
    Scalar() = default;  // rational zero

    static Scalar rational(const Rational& q) {
        Scalar s;
        s.q_ = q;
        return s;
    }
    static Scalar fp(long value, long p) {
        if (p < 2) raise(errc::invalid_config, "prime field modulus must be >= 2");
        Scalar s;
        s.p_ = p;
        s.v_ = ((value % p) + p) % p;
        return s;
    }
    static Scalar zero(const FieldSpec& f) { return f.is_rational() ? rational(0) : fp(0, f.p); }
    static Scalar one(const FieldSpec& f) { return f.is_rational() ? rational(1) : fp(1, f.p); }
    static Scalar of_long(long n, const FieldSpec& f) {
        return f.is_rational() ? rational(Rational(n)) : fp(n, f.p);
    }

    FieldSpec field() const { return FieldSpec{p_}; }
    bool is_zero() const { return p_ == 0 ? q_ == 0 : v_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : v_ == 1; }

    const Rational& rat() const {
        if (p_ != 0) raise(errc::mismatch, "scalar is not rational");
        return q_;
    }

    Scalar operator+(const Scalar& o) const {
        check(o);
        return p_ == 0 ? rational(q_ + o.q_) : fp(v_ + o.v_, p_);
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        return p_ == 0 ? rational(q_ - o.q_) : fp(v_ - o.v_ + p_, p_);
    }
    Scalar operator-() const { return p_ == 0 ? rational(-q_) : fp(p_ - v_, p_); }
    Scalar operator*(const Scalar& o) const {
        check(o);
        if (p_ == 0) return rational(q_ * o.q_);
        return fp(mulmod(v_, o.v_, p_), p_);
    }
    Scalar inv() const {
        if (is_zero()) raise(errc::division_by_zero, "inverse of zero scalar");
        if (p_ == 0) return rational(1 / q_);
        // extended Euclid
        long a = v_, m = p_, x0 = 0, x1 = 1;
        long b = m;
        while (a > 1) {
            long q = a / b;
            long t = b;
            b = a - q * b;
            a = t;
            t = x0;
            x0 = x1 - q * x0;
            x1 = t;
        }
        return fp(((x1 % m) + m) % m, m);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar pow(long e) const {
        if (p_ == 0) return rational(rat_pow(q_, e));
        Scalar base = e < 0 ? inv() : *this;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        Scalar acc = one(field());
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool operator==(const Scalar& o) const {
        return p_ == o.p_ && (p_ == 0 ? q_ == o.q_ : v_ == o.v_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const {
        if (p_ == 0) return rat_str(q_);
        return std::to_string(v_);
    }

    static Scalar parse(const std::string& text, const FieldSpec& f) {
        if (f.is_rational()) return rational(rat_parse(text));
        return fp(std::stol(text), f.p);
    }

  private:
    void check(const Scalar& o) const {
        if (p_ != o.p_) raise(errc::mismatch, "scalars from different fields");
    }
    static long mulmod(long a, long b, long m) {
        return static_cast<long>((static_cast<unsigned __int128>(a) * b) % m);
    }

    Rational q_{};
    long v_ = 0;
    long p_ = 0;
};

}  // namespace ordring
