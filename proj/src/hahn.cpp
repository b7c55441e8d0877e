#include "ordring/hahn.hpp"

#include "ordring/errors.hpp"

namespace ordring {

Frontier Frontier::infinite() { return Frontier(); }

Frontier Frontier::at(const GroupElement& g) {
    Frontier f;
    f.spec_ = g.spec;
    if (is_abelian_vector(g.spec)) {
        f.kind_ = Kind::Cut;
        f.from_level_ = 1;
        f.coords_ = elem_coords(g);
    } else {
        f.kind_ = Kind::Element;
        f.g_ = g;
    }
    return f;
}

Frontier Frontier::cut(const GroupSpecPtr& spec, int from_level, std::vector<Rational> coords) {
    if (!is_abelian_vector(spec)) raise(errc::unsupported_family, "cut frontiers need abelian exponents");
    if (from_level < 1 || from_level + static_cast<int>(coords.size()) - 1 != spec->rank)
        raise(errc::invalid_config, "cut coordinates do not reach the top level");
    Frontier f;
    f.kind_ = Kind::Cut;
    f.spec_ = spec;
    f.from_level_ = from_level;
    f.coords_ = std::move(coords);
    return f;
}

std::vector<std::optional<Rational>> Frontier::padded() const {
    std::vector<std::optional<Rational>> p(static_cast<size_t>(spec_->rank));
    for (size_t i = 0; i < coords_.size(); ++i)
        p[static_cast<size_t>(from_level_ - 1) + i] = coords_[i];
    return p;
}

Frontier Frontier::from_padded(const GroupSpecPtr& spec,
                               const std::vector<std::optional<Rational>>& p) {
    int from = spec->rank + 1;
    std::vector<Rational> coords;
    for (int lvl = spec->rank; lvl >= 1; --lvl) {
        if (!p[static_cast<size_t>(lvl - 1)].has_value()) break;
        from = lvl;
    }
    if (from > spec->rank)
        raise(errc::invalid_config, "empty frontier cut");
    for (int lvl = from; lvl <= spec->rank; ++lvl) coords.push_back(*p[static_cast<size_t>(lvl - 1)]);
    return cut(spec, from, std::move(coords));
}

bool Frontier::admits(const GroupElement& g) const {
    switch (kind_) {
        case Kind::Infinite: return true;
        case Kind::Element: return compare(g, g_) == Ordering::LT;
        case Kind::Cut: {
            auto p = padded();
            for (int lvl = spec_->rank; lvl >= 1; --lvl) {
                const auto& cutv = p[static_cast<size_t>(lvl - 1)];
                Rational c = abelian_coord(g, lvl);
                if (!cutv.has_value()) return false;  // -infinity below g's coordinate
                if (c < *cutv) return true;
                if (c > *cutv) return false;
            }
            return false;  // equality is not strictly below
        }
    }
    return false;
}

Frontier fr_min(const Frontier& a, const Frontier& b) {
    if (a.kind_ == Frontier::Kind::Infinite) return b;
    if (b.kind_ == Frontier::Kind::Infinite) return a;
    if (a.kind_ == Frontier::Kind::Element && b.kind_ == Frontier::Kind::Element)
        return compare(a.g_, b.g_) == Ordering::LT ? a : b;
    if (a.kind_ != Frontier::Kind::Cut || b.kind_ != Frontier::Kind::Cut)
        raise(errc::mismatch, "incomparable frontier kinds");
    auto pa = a.padded(), pb = b.padded();
    for (int lvl = a.spec_->rank; lvl >= 1; --lvl) {
        const auto& x = pa[static_cast<size_t>(lvl - 1)];
        const auto& y = pb[static_cast<size_t>(lvl - 1)];
        if (!x.has_value() && !y.has_value()) return a;
        if (!x.has_value()) return a;
        if (!y.has_value()) return b;
        if (*x < *y) return a;
        if (*y < *x) return b;
    }
    return a;
}

Frontier Frontier::shifted(const GroupElement& h) const {
    switch (kind_) {
        case Kind::Infinite: return *this;
        case Kind::Element: return Frontier::at(mul(h, g_));
        case Kind::Cut: return plus(Frontier::at(h));
    }
    return *this;
}

Frontier Frontier::plus(const Frontier& o) const {
    if (kind_ == Kind::Infinite || o.kind_ == Kind::Infinite)
        raise(errc::mismatch, "cannot add an infinite frontier");
    if (kind_ == Kind::Element && o.kind_ == Kind::Element)
        return Frontier::at(mul(g_, o.g_));
    if (kind_ != Kind::Cut || o.kind_ != Kind::Cut)
        raise(errc::mismatch, "incomparable frontier kinds");
    auto pa = padded(), pb = o.padded();
    std::vector<std::optional<Rational>> out(pa.size());
    for (size_t i = 0; i < pa.size(); ++i)
        if (pa[i].has_value() && pb[i].has_value()) out[i] = *pa[i] + *pb[i];
    return from_padded(spec_, out);
}

bool Frontier::operator==(const Frontier& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Infinite: return true;
        case Kind::Element: return elem_equal(g_, o.g_);
        case Kind::Cut: return from_level_ == o.from_level_ && coords_ == o.coords_;
    }
    return false;
}

std::string Frontier::str() const {
    switch (kind_) {
        case Kind::Infinite: return "inf";
        case Kind::Element: return elem_str(g_);
        case Kind::Cut: {
            if (from_level_ == 1) {
                std::string out = "(";
                for (size_t i = 0; i < coords_.size(); ++i) {
                    if (i) out += ',';
                    out += rat_str(coords_[i]);
                }
                return out + ")";
            }
            std::string out = "cut(" + std::to_string(from_level_) + ":(";
            for (size_t i = 0; i < coords_.size(); ++i) {
                if (i) out += ',';
                out += rat_str(coords_[i]);
            }
            return out + "))";
        }
    }
    return "?";
}

HahnSeries HahnSeries::monomial(const CPRingPtr& ring, const GroupElement& g, const Scalar& a) {
    HahnSeries m(ring);
    m.add_term(g, a);
    return m;
}

HahnSeries HahnSeries::from_cp(const CPElement& x) {
    HahnSeries m(x.ring());
    for (const auto& [g, a] : x.terms()) m.add_term(g, a);
    return m;
}

Scalar HahnSeries::coeff(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
}

void HahnSeries::add_term(const GroupElement& g, const Scalar& a) {
    if (a.is_zero() || !front_.admits(g)) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
        terms_.emplace(g, a);
        return;
    }
    Scalar s = it->second + a;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

void HahnSeries::restrict_frontier(const Frontier& f) {
    front_ = fr_min(front_, f);
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (!front_.admits(it->first))
            it = terms_.erase(it);
        else
            ++it;
    }
}

std::string HahnSeries::str() const { return hs_str(*this); }

std::optional<GroupElement> hs_v(const HahnSeries& m) {
    if (m.stored_zero()) return std::nullopt;
    return m.terms().begin()->first;
}

HahnSeries hs_add(const HahnSeries& a, const HahnSeries& b) {
    if (a.ring() != b.ring()) raise(errc::mismatch, "series over different rings");
    HahnSeries out(a.ring(), fr_min(a.frontier(), b.frontier()));
    for (const auto& [g, c] : a.terms()) out.add_term(g, c);
    for (const auto& [g, c] : b.terms()) out.add_term(g, c);
    return out;
}

HahnSeries hs_neg(const HahnSeries& a) {
    HahnSeries out(a.ring(), a.frontier());
    for (const auto& [g, c] : a.terms()) out.add_term(g, -c);
    return out;
}

HahnSeries hs_scalar_right(const HahnSeries& m, const Scalar& a) {
    if (a.is_zero()) return HahnSeries::zero(m.ring());  // exactly zero
    HahnSeries out(m.ring(), m.frontier());
    for (const auto& [g, c] : m.terms()) out.add_term(g, c * a);
    return out;
}

HahnSeries hs_monomial_act(const Scalar& a, const GroupElement& h, const HahnSeries& m) {
    if (a.is_zero()) return HahnSeries::zero(m.ring());
    const auto& tw = m.ring()->twist;
    Frontier f = m.frontier().is_infinite() ? Frontier::infinite() : m.frontier().shifted(h);
    HahnSeries out(m.ring(), f);
    for (const auto& [g, c] : m.terms()) out.add_term(mul(h, g), a * tw.eta(h, g) * c);
    return out;
}

HahnSeries hs_finite_act(const CPElement& x, const HahnSeries& m) {
    if (x.is_zero()) return HahnSeries::zero(m.ring());
    HahnSeries out(m.ring(), Frontier::infinite());
    bool first = true;
    for (const auto& [h, a] : x.terms()) {
        HahnSeries piece = hs_monomial_act(a, h, m);
        out = first ? piece : hs_add(out, piece);
        first = false;
    }
    return out;
}

namespace {

// lower bound for the exponents of the *unknown* part of m: its valuation if
// terms are stored, otherwise the frontier itself
Frontier unknown_bound(const HahnSeries& m) {
    auto v = hs_v(m);
    if (v.has_value()) return Frontier::at(*v);
    return m.frontier();
}

}  // namespace

HahnSeries hs_series_mul(const HahnSeries& a, const HahnSeries& b) {
    if (a.ring() != b.ring()) raise(errc::mismatch, "series over different rings");
    const auto& spec = a.ring()->group;
    if (!is_abelian_vector(spec))
        raise(errc::non_abelian_exponent,
              "series-by-series multiplication needs an abelian exponent group");
    Frontier f = Frontier::infinite();
    if (!a.frontier().is_infinite() || !b.frontier().is_infinite()) {
        // exact factors do not limit; otherwise min(F1 + v2, F2 + v1)
        Frontier f1 = Frontier::infinite(), f2 = Frontier::infinite();
        if (!a.frontier().is_infinite()) {
            Frontier lb = unknown_bound(b);
            f1 = lb.is_infinite() ? Frontier::infinite() : a.frontier().plus(lb);
        }
        if (!b.frontier().is_infinite()) {
            Frontier lb = unknown_bound(a);
            f2 = lb.is_infinite() ? Frontier::infinite() : b.frontier().plus(lb);
        }
        f = fr_min(f1, f2);
    }
    const auto& tw = a.ring()->twist;
    HahnSeries out(a.ring(), f);
    for (const auto& [g, c] : a.terms())
        for (const auto& [h, d] : b.terms()) out.add_term(mul(g, h), c * tw.eta(g, h) * d);
    return out;
}

HahnSeries hs_sum_family(const CPRingPtr& ring, const std::vector<HahnSeries>& family) {
    HahnSeries out = HahnSeries::zero(ring);
    for (const auto& m : family) out = hs_add(out, m);
    return out;
}

std::string hs_str(const HahnSeries& m) {
    std::string out;
    if (m.stored_zero()) {
        out = "0";
    } else {
        bool first = true;
        for (const auto& [g, c] : m.terms()) {
            if (!first) out += " + ";
            first = false;
            out += c.str() + "*[" + elem_str(g) + "]";
        }
    }
    out += " (frontier: " + m.frontier().str() + ")";
    return out;
}

HahnSeries hs_parse(const CPRingPtr& ring, const std::string& text) {
    size_t fpos = text.rfind(" (frontier: ");
    std::string body = fpos == std::string::npos ? text : text.substr(0, fpos);
    Frontier front = Frontier::infinite();
    if (fpos != std::string::npos) {
        std::string ftext = text.substr(fpos + 12);
        if (!ftext.empty() && ftext.back() == ')') ftext.pop_back();
        if (ftext != "inf") front = Frontier::at(elem_parse(ring->group, ftext));
    }
    HahnSeries out(ring, front);
    if (body == "0") return out;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t plus = body.find(" + ", pos);
        std::string term = body.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        size_t star = term.find("*[");
        if (star == std::string::npos || term.back() != ']')
            raise(errc::invalid_config, "bad series term '" + term + "'");
        Scalar c = Scalar::parse(term.substr(0, star), ring->field);
        GroupElement g = elem_parse(ring->group, term.substr(star + 2, term.size() - star - 3));
        out.add_term(g, c);
        if (plus == std::string::npos) break;
        pos = plus + 3;
    }
    return out;
}

bool hs_agree_on_common(const HahnSeries& a, const HahnSeries& b) {
    for (const auto& [g, c] : a.terms())
        if (b.frontier().admits(g) && !(b.coeff(g) == c)) return false;
    for (const auto& [g, c] : b.terms())
        if (a.frontier().admits(g) && !(a.coeff(g) == c)) return false;
    return true;
}

}  // namespace ordring
