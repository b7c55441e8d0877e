#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordring {

// Exact rational scalar. All arithmetic in this library is exact; nothing
// anywhere is allowed to round.
using Rational = mpq_class;

inline Rational rat_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a", "a/b", with optional sign.
inline Rational rat_parse(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline int rat_sign(const Rational& r) { return sgn(r); }

// r^e for integer e; e < 0 requires r != 0.
inline Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw std::domain_error("0^negative");
        return Rational(0);
    }
    mpz_class num = r.get_num(), den = r.get_den();
    if (e < 0) {
        std::swap(num, den);
        e = -e;
        if (sgn(den) < 0) { num = -num; den = -den; }
    }
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rational out(pn, pd);
    out.canonicalize();
    return out;
}

inline bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

// Exact conversion to long; throws if not an integer or out of range.
inline long rat_to_long(const Rational& r) {
    if (!rat_is_integer(r)) throw std::domain_error("rational is not an integer: " + rat_str(r));
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large: " + rat_str(r));
    return r.get_num().get_si();
}

// A rational bound that may be +infinity. Used for truncation frontiers of
// rank-1 exponent levels.
struct QBound {
    bool inf = true;
    Rational v{};

    static QBound infinity() { return QBound{}; }
    static QBound at(const Rational& x) { return QBound{false, x}; }

    bool operator==(const QBound& o) const {
        if (inf != o.inf) return false;
        return inf || v == o.v;
    }
    bool operator<(const QBound& o) const {
        if (inf) return false;
        if (o.inf) return true;
        return v < o.v;
    }
};

inline QBound qb_min(const QBound& a, const QBound& b) { return a < b ? a : b; }

// bound + finite shift
inline QBound qb_shift(const QBound& a, const Rational& s) {
    if (a.inf) return a;
    return QBound::at(a.v + s);
}

inline std::string qb_str(const QBound& b) { return b.inf ? "inf" : rat_str(b.v); }

}  // namespace ordring
