#include "ordring/magnus.hpp"

#include <cstdlib>

#include "ordring/errors.hpp"

namespace ordring {

MagnusSeries MagnusSeries::constant(MagnusCtx c, const Rational& a) {
    MagnusSeries s(c);
    s.set({}, a);
    return s;
}

MagnusSeries MagnusSeries::variable(MagnusCtx c, int i) {
    if (i < 0 || i >= c.nvars) raise(errc::invalid_config, "variable index out of range");
    MagnusSeries s(c);
    if (c.degree >= 1) s.set({i}, Rational(1));
    return s;
}

void MagnusSeries::set(const MagnusMono& m, const Rational& v) {
    if (v == 0)
        terms_.erase(m);
    else
        terms_[m] = v;
}

Rational MagnusSeries::constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Rational(0) : it->second;
}

int MagnusSeries::low_degree() const {
    if (terms_.empty()) return ctx_.degree + 1;
    return static_cast<int>(terms_.begin()->first.size());
}

MagnusSeries MagnusSeries::operator+(const MagnusSeries& o) const {
    MagnusSeries out = *this;
    for (const auto& [m, v] : o.terms_) out.set(m, out.terms_.count(m) ? out.terms_[m] + v : v);
    return out;
}

MagnusSeries MagnusSeries::operator-() const {
    MagnusSeries out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

MagnusSeries MagnusSeries::operator-(const MagnusSeries& o) const { return *this + (-o); }

MagnusSeries MagnusSeries::scaled(const Rational& a) const {
    MagnusSeries out(ctx_);
    if (a == 0) return out;
    out.terms_ = terms_;
    for (auto& [m, v] : out.terms_) v = v * a;
    return out;
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& o) const {
    MagnusSeries out(ctx_);
    for (const auto& [ma, va] : terms_) {
        for (const auto& [mb, vb] : o.terms_) {
            if (ma.size() + mb.size() > static_cast<size_t>(ctx_.degree)) continue;
            MagnusMono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            auto it = out.terms_.find(m);
            Rational v = (it == out.terms_.end() ? Rational(0) : it->second) + va * vb;
            out.set(m, v);
        }
    }
    return out;
}

MagnusSeries MagnusSeries::inverse() const {
    Rational c0 = constant_term();
    if (c0 == 0)
        raise(errc::magnus_not_reducible,
              is_zero() ? "series is zero at this truncation"
                        : "series has zero constant term");
    // (c0 (1 + eps))^-1 = (sum (-eps)^k) c0^-1 with val(eps) >= 1
    MagnusSeries eps = (*this - constant(ctx_, c0)).scaled(1 / c0);
    MagnusSeries acc = constant(ctx_, 1);
    MagnusSeries pw = constant(ctx_, 1);
    for (int k = 1; k <= ctx_.degree; ++k) {
        pw = pw * (-eps);
        if (pw.is_zero()) break;
        acc = acc + pw;
    }
    return acc.scaled(1 / c0);
}

MagnusSeries MagnusSeries::substitute(const std::vector<MagnusSeries>& images) const {
    if (static_cast<int>(images.size()) != ctx_.nvars)
        raise(errc::invalid_config, "substitution needs one image per variable");
    for (const auto& im : images)
        if (im.constant_term() != 0)
            raise(errc::invalid_config, "substitution image has non-zero constant term");
    MagnusSeries out(ctx_);
    for (const auto& [m, v] : terms_) {
        MagnusSeries prod = constant(ctx_, v);
        for (int var : m) {
            prod = prod * images[static_cast<size_t>(var)];
            if (prod.is_zero()) break;
        }
        out = out + prod;
    }
    return out;
}

std::pair<MagnusMono, Rational> MagnusSeries::leading_nonconstant() const {
    for (const auto& [m, v] : terms_)
        if (!m.empty()) return {m, v};
    raise(errc::magnus_not_reducible, "no non-constant term");
}

std::string MagnusSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += rat_str(v);
        for (int var : m) {
            out += '*';
            out += static_cast<char>('A' + var);
        }
    }
    return out;
}

MagnusSeries magnus_image(const Word& w, MagnusCtx ctx) {
    MagnusSeries acc = MagnusSeries::constant(ctx, 1);
    for (int letter : w) {
        int var = std::abs(letter) - 1;
        MagnusSeries x = MagnusSeries::variable(ctx, var);
        if (letter > 0) {
            acc = acc * (MagnusSeries::constant(ctx, 1) + x);
        } else {
            // (1 + X)^-1 = 1 - X + X^2 - ...
            MagnusSeries inv(ctx);
            MagnusSeries pw = MagnusSeries::constant(ctx, 1);
            inv = inv + pw;
            for (int k = 1; k <= ctx.degree; ++k) {
                pw = pw * (-x);
                inv = inv + pw;
            }
            acc = acc * inv;
        }
    }
    return acc;
}

Ordering magnus_compare(const Word& u, const Word& w, MagnusCtx ctx) {
    Word d = word_mul(word_inverse(u), w);
    if (d.empty()) return Ordering::EQ;
    MagnusSeries m = magnus_image(d, ctx) - MagnusSeries::constant(ctx, 1);
    if (m.is_zero())
        raise(errc::undecided_at_truncation,
              "first differing Magnus coefficient lies beyond degree " +
                  std::to_string(ctx.degree));
    return m.leading_nonconstant().second > 0 ? Ordering::LT : Ordering::GT;
}

}  // namespace ordring
