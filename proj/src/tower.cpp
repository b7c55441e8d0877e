#include "ordring/tower.hpp"

#include <algorithm>

#include "ordring/errors.hpp"

namespace ordring {

TowerCtx make_tower_ctx(CPRingPtr ring, std::vector<Rational> widths) {
    if (!is_abelian_vector(ring->group))
        raise(errc::unsupported_family, "series towers need an abelian lex group");
    TowerCtx ctx;
    ctx.levels = ring->group->rank;
    if (widths.size() != static_cast<size_t>(ctx.levels))
        raise(errc::invalid_config, "need one frontier width per tower level");
    for (const auto& w : widths)
        if (!(w > 0)) raise(errc::invalid_config, "frontier widths must be positive");
    ctx.ring = std::move(ring);
    ctx.width = widths;
    ctx.working = std::move(widths);
    return ctx;
}

bool TowerElem::exact_zero() const {
    if (level == 0) return sc.is_zero();
    return terms.empty() && front.inf;
}

bool TowerElem::cert_nonzero() const {
    if (level == 0) return !sc.is_zero();
    for (const auto& [e, c] : terms)
        if (c.cert_nonzero()) return true;
    return false;
}

QBound TowerElem::lower_bound() const {
    if (level == 0) return sc.is_zero() ? QBound::infinity() : QBound::at(0);
    if (!terms.empty()) return QBound::at(terms.front().first);
    return front;
}

std::string TowerElem::str() const {
    if (level == 0) return sc.str();
    std::string out;
    if (terms.empty()) {
        out = "0";
    } else {
        bool first = true;
        for (const auto& [e, c] : terms) {
            if (!first) out += " + ";
            first = false;
            out += (c.level == 0 ? c.str() : "(" + c.str() + ")") + "*t" +
                   std::to_string(level) + "^" + rat_str(e);
        }
    }
    return out + " (frontier: " + qb_str(front) + ")";
}

TowerElem te_scalar(const Scalar& a) {
    TowerElem e;
    e.level = 0;
    e.sc = a;
    return e;
}

TowerElem te_zero(int level) {
    TowerElem e;
    e.level = level;
    return e;
}

TowerElem te_one(const FieldSpec& field, int level) {
    if (level == 0) return te_scalar(Scalar::one(field));
    return te_monomial(level, Rational(0), te_one(field, level - 1));
}

TowerElem te_monomial(int level, const Rational& exp, TowerElem coef) {
    TowerElem e;
    e.level = level;
    if (coef.level != level - 1) raise(errc::mismatch, "coefficient level mismatch");
    if (!coef.exact_zero()) e.terms.emplace_back(exp, std::move(coef));
    return e;
}

namespace {

void check_levels(const TowerElem& a, const TowerElem& b) {
    if (a.level != b.level) raise(errc::mismatch, "tower elements at different levels");
}

// drop terms at/past the frontier and exactly-zero coefficients
void normalize(TowerElem& e) {
    if (e.level == 0) return;
    std::vector<std::pair<Rational, TowerElem>> kept;
    kept.reserve(e.terms.size());
    for (auto& [x, c] : e.terms) {
        if (!e.front.inf && !(x < e.front.v)) continue;
        if (c.exact_zero()) continue;
        kept.emplace_back(x, std::move(c));
    }
    e.terms = std::move(kept);
}

GroupElement axis_elem(const TowerCtx& ctx, int k, const Rational& s) {
    std::vector<Rational> coords(static_cast<size_t>(ctx.levels), Rational(0));
    coords[static_cast<size_t>(k - 1)] = s;
    return elem_from_coords(ctx.ring->group, coords);
}

Scalar level_eta(const TowerCtx& ctx, int k, const Rational& s, const Rational& t) {
    if (ctx.ring->twist.is_trivial()) return Scalar::one(ctx.ring->field);
    return ctx.ring->twist.eta(axis_elem(ctx, k, s), axis_elem(ctx, k, t));
}

// x_a x_b x_a^-1 = conj_scalar(a,b) x_b for axis monomials a, b
Scalar conj_scalar(const TowerCtx& ctx, int k, const Rational& s, int j, const Rational& t) {
    if (ctx.ring->twist.is_trivial()) return Scalar::one(ctx.ring->field);
    const auto& tw = ctx.ring->twist;
    GroupElement a = axis_elem(ctx, k, s);
    GroupElement b = axis_elem(ctx, j, t);
    GroupElement ai = inv(a);
    return tw.eta(a, b) * tw.eta(mul(a, b), ai) * tw.eta(a, ai).inv();
}

}  // namespace

TowerElem te_conj(const TowerCtx& ctx, int k, const Rational& s, const TowerElem& a) {
    if (a.level == 0 || s == 0) return a;
    TowerElem out;
    out.level = a.level;
    out.front = a.front;
    for (const auto& [t, c] : a.terms) {
        TowerElem cc = te_scale(te_conj(ctx, k, s, c), conj_scalar(ctx, k, s, a.level, t));
        out.terms.emplace_back(t, std::move(cc));
    }
    normalize(out);
    return out;
}

TowerElem te_add(const TowerCtx& ctx, const TowerElem& a, const TowerElem& b) {
    check_levels(a, b);
    if (a.level == 0) return te_scalar(a.sc + b.sc);
    TowerElem out;
    out.level = a.level;
    out.front = qb_min(a.front, b.front);
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
            out.terms.push_back(b.terms[j++]);
        } else {
            out.terms.emplace_back(a.terms[i].first,
                                   te_add(ctx, a.terms[i].second, b.terms[j].second));
            ++i;
            ++j;
        }
    }
    normalize(out);
    return out;
}

TowerElem te_neg(const TowerElem& a) {
    if (a.level == 0) return te_scalar(-a.sc);
    TowerElem out;
    out.level = a.level;
    out.front = a.front;
    for (const auto& [x, c] : a.terms) out.terms.emplace_back(x, te_neg(c));
    return out;
}

TowerElem te_sub(const TowerCtx& ctx, const TowerElem& a, const TowerElem& b) {
    return te_add(ctx, a, te_neg(b));
}

TowerElem te_scale(const TowerElem& a, const Scalar& s) {
    if (a.level == 0) return te_scalar(a.sc * s);
    TowerElem out;
    out.level = a.level;
    out.front = a.front;
    if (s.is_zero()) return out;  // exact zero, certificate no longer needed
    for (const auto& [x, c] : a.terms) out.terms.emplace_back(x, te_scale(c, s));
    normalize(out);
    return out;
}

TowerElem te_mul(const TowerCtx& ctx, const TowerElem& a, const TowerElem& b) {
    check_levels(a, b);
    if (a.level == 0) return te_scalar(a.sc * b.sc);
    if (a.exact_zero() || b.exact_zero()) return te_zero(a.level);
    TowerElem out;
    out.level = a.level;
    // unknown content of either factor enters at frontier + other's lower bound
    QBound f1 = QBound::infinity(), f2 = QBound::infinity();
    if (!a.front.inf) {
        QBound lb = b.lower_bound();
        f1 = lb.inf ? QBound::infinity() : QBound::at(a.front.v + lb.v);
    }
    if (!b.front.inf) {
        QBound lb = a.lower_bound();
        f2 = lb.inf ? QBound::infinity() : QBound::at(b.front.v + lb.v);
    }
    out.front = qb_min(f1, f2);
    std::map<Rational, TowerElem> acc;
    for (const auto& [s, c] : a.terms) {
        for (const auto& [t, d] : b.terms) {
            Rational x = s + t;
            if (!out.front.inf && !(x < out.front.v)) continue;
            // (c x_s)(d x_t) = c (x_s d x_s^-1) eta_k(s,t) x_{s+t}
            TowerElem piece = te_scale(te_mul(ctx, c, te_conj(ctx, a.level, s, d)),
                                       level_eta(ctx, a.level, s, t));
            auto it = acc.find(x);
            if (it == acc.end())
                acc.emplace(x, std::move(piece));
            else
                it->second = te_add(ctx, it->second, piece);
        }
    }
    for (auto& [x, c] : acc) out.terms.emplace_back(x, std::move(c));
    normalize(out);
    return out;
}

TowerElem te_invert(const TowerCtx& ctx, const TowerElem& m) {
    if (m.level == 0) {
        if (m.sc.is_zero()) raise(errc::division_by_zero, "inverse of zero");
        return te_scalar(m.sc.inv());
    }
    if (m.terms.empty()) {
        if (m.front.inf) raise(errc::division_by_zero, "inverse of zero");
        raise(errc::zero_up_to_frontier,
              "certified zero below frontier " + qb_str(m.front) + " at level " +
                  std::to_string(m.level));
    }
    const int k = m.level;
    const Rational s0 = m.terms.front().first;
    const TowerElem& d0 = m.terms.front().second;
    TowerElem d0inv;
    try {
        d0inv = te_invert(ctx, d0);
    } catch (const domain_error& err) {
        if (err.code() == errc::zero_up_to_frontier || err.code() == errc::level_exhausted)
            raise(errc::level_exhausted,
                  std::string("leading coefficient not certified invertible (") + err.what() + ")");
        throw;
    }

    // eps = d0^-1 (sum_{t > s0} d_t x_t) x_{s0}^-1, valuation > 0
    Scalar wconst = level_eta(ctx, k, s0, -s0).inv();
    TowerElem eps = te_zero(k);
    eps.front = qb_shift(m.front, -s0);
    for (size_t i = 1; i < m.terms.size(); ++i) {
        const auto& [t, dt] = m.terms[i];
        Scalar u = level_eta(ctx, k, t, -s0) * wconst;
        eps.terms.emplace_back(t - s0, te_scale(te_mul(ctx, d0inv, dt), u));
    }
    normalize(eps);

    // geometric sum cut at this level's working width
    const Rational W = ctx.working_width(k);
    TowerElem geo = te_one(ctx.ring->field, k);
    geo.front = eps.terms.empty() ? eps.front : QBound::at(W);
    if (!eps.terms.empty()) {
        if (!(eps.terms.front().first > 0))
            raise(errc::certification_failed, "inversion tail has non-positive valuation");
        TowerElem pw = te_one(ctx.ring->field, k);
        TowerElem neps = te_neg(eps);
        long steps = 0;
        while (true) {
            pw = te_mul(ctx, pw, neps);
            QBound lb = pw.lower_bound();
            if (lb.inf || !(lb.v < W)) {
                geo.front = qb_min(geo.front, lb);
                break;
            }
            geo = te_add(ctx, geo, pw);
            if (++steps > ctx.geo_term_cap)
                raise(errc::frontier_budget_exceeded,
                      "geometric expansion exceeds " + std::to_string(ctx.geo_term_cap) +
                          " terms at level " + std::to_string(k));
        }
        geo.front = qb_min(geo.front, QBound::at(W));
        normalize(geo);
    }

    // x_{s0}^-1 geo d0^-1
    TowerElem out = te_zero(k);
    out.front = qb_shift(geo.front, -s0);
    for (const auto& [r, c] : geo.terms) {
        TowerElem rc = te_mul(ctx, c, te_conj(ctx, k, r, d0inv));
        Scalar lscale = wconst * level_eta(ctx, k, -s0, r);
        out.terms.emplace_back(r - s0, te_scale(te_conj(ctx, k, -s0, rc), lscale));
    }
    normalize(out);
    return out;
}

bool te_zero_on_certified(const TowerElem& e) {
    if (e.level == 0) return e.sc.is_zero();
    for (const auto& [x, c] : e.terms)
        if (!te_zero_on_certified(c)) return false;
    return true;
}

TowerElem embed_cp(const TowerCtx& ctx, const CPElement& x) {
    if (x.ring() != ctx.ring) raise(errc::mismatch, "element from a different ring");
    TowerElem out = te_zero(ctx.levels);
    const auto& tw = ctx.ring->twist;
    for (const auto& [g, a] : x.terms()) {
        // peel x_g into nested axis monomials, top level first
        std::vector<Rational> coords = elem_coords(g);
        Scalar c = a;
        std::vector<Rational> exps(coords.size());
        GroupElement cur = g;
        for (int k = ctx.levels; k >= 1; --k) {
            Rational s = coords[static_cast<size_t>(k - 1)];
            exps[static_cast<size_t>(k - 1)] = s;
            if (s != 0) {
                GroupElement ax = axis_elem(ctx, k, s);
                GroupElement axi = inv(ax);
                GroupElement rest = mul(cur, axi);
                // x_cur x_ax^-1 = eta(ax,ax^-1)^-1 eta(cur,ax^-1) x_rest
                c = c * tw.eta(ax, axi).inv() * tw.eta(cur, axi);
                cur = rest;
            }
        }
        TowerElem nested = te_scalar(c);
        for (int k = 1; k <= ctx.levels; ++k)
            nested = te_monomial(k, exps[static_cast<size_t>(k - 1)], std::move(nested));
        out = te_add(ctx, out, nested);
    }
    return out;
}

namespace {

struct FlatPiece {
    std::vector<std::pair<std::vector<Rational>, Scalar>> terms;  // coords levels 1..k
    std::vector<std::vector<std::optional<Rational>>> cuts;       // padded candidates, levels 1..k
};

FlatPiece flatten_rec(const TowerCtx& ctx, const TowerElem& e) {
    FlatPiece out;
    if (e.level == 0) {
        if (!e.sc.is_zero()) out.terms.emplace_back(std::vector<Rational>{}, e.sc);
        return out;
    }
    size_t k = static_cast<size_t>(e.level);
    if (!e.front.inf) {
        std::vector<std::optional<Rational>> cut(k);
        cut[k - 1] = e.front.v;
        out.cuts.push_back(std::move(cut));
    }
    for (const auto& [t, c] : e.terms) {
        FlatPiece lower = flatten_rec(ctx, c);
        for (auto& [coords, a] : lower.terms) {
            coords.resize(k, Rational(0));
            coords[k - 1] = t;
            out.terms.emplace_back(std::move(coords), a);
        }
        for (auto& cut : lower.cuts) {
            cut.resize(k);
            cut[k - 1] = t;
            out.cuts.push_back(std::move(cut));
        }
    }
    return out;
}

}  // namespace

HahnSeries flatten(const TowerCtx& ctx, const TowerElem& e) {
    if (e.level != ctx.levels) raise(errc::mismatch, "flatten expects a top-level element");
    FlatPiece flat = flatten_rec(ctx, e);
    // strongest single cut = lex-least candidate cut point
    Frontier front = Frontier::infinite();
    const auto& spec = ctx.ring->group;
    for (const auto& cut : flat.cuts) {
        std::vector<std::optional<Rational>> padded(static_cast<size_t>(ctx.levels));
        for (size_t i = 0; i < cut.size(); ++i) padded[i] = cut[i];
        int from = ctx.levels + 1;
        std::vector<Rational> coords;
        for (int lvl = ctx.levels; lvl >= 1; --lvl) {
            if (!padded[static_cast<size_t>(lvl - 1)].has_value()) break;
            from = lvl;
        }
        std::vector<Rational> cc;
        for (int lvl = from; lvl <= ctx.levels; ++lvl) cc.push_back(*padded[static_cast<size_t>(lvl - 1)]);
        front = fr_min(front, Frontier::cut(spec, from, std::move(cc)));
    }
    HahnSeries out(ctx.ring, front);
    const auto& tw = ctx.ring->twist;
    for (const auto& [coords, a] : flat.terms) {
        // reassociate nested monomials into x_g, collecting eta factors
        GroupElement cur = identity(spec);
        Scalar c = a;
        for (int k = ctx.levels; k >= 1; --k) {
            const Rational& t = coords[static_cast<size_t>(k - 1)];
            if (t == 0) continue;
            GroupElement ax = axis_elem(ctx, k, t);
            c = c * tw.eta(cur, ax);
            cur = mul(cur, ax);
        }
        out.add_term(cur, c);
    }
    return out;
}

TowerElem te_recut(const TowerCtx& ctx, TowerElem e, const std::vector<Rational>& widths) {
    if (e.level == 0) return e;
    if (!e.terms.empty()) {
        Rational cut = e.terms.front().first + widths.at(static_cast<size_t>(e.level - 1));
        e.front = qb_min(e.front, QBound::at(cut));
    }
    for (auto& [x, c] : e.terms) c = te_recut(ctx, std::move(c), widths);
    normalize(e);
    return e;
}

void te_verify_width(const TowerCtx& ctx, const TowerElem& e, const std::vector<Rational>& widths) {
    if (e.level == 0) return;
    if (e.terms.empty()) return;  // nothing to anchor a width request at
    if (!e.front.inf && e.front.v - e.terms.front().first < widths.at(static_cast<size_t>(e.level - 1)))
        raise(errc::frontier_budget_exceeded,
              "certified width " + rat_str(e.front.v - e.terms.front().first) + " at level " +
                  std::to_string(e.level) + " is below the requested " +
                  rat_str(widths.at(static_cast<size_t>(e.level - 1))));
    te_verify_width(ctx, e.terms.front().second, widths);
}

namespace {

struct Descent {
    GroupElement h;
    int jump_index = 0;
    TowerElem at_jump;  // element at the jump level (its pure representation)
};

Descent descend(const TowerCtx& ctx, const TowerElem& x) {
    Descent d;
    std::vector<Rational> hcoords(static_cast<size_t>(ctx.levels), Rational(0));
    TowerElem cur = x;
    for (int k = ctx.levels; k >= 1; --k) {
        if (cur.terms.empty())
            raise(errc::zero_up_to_frontier,
                  cur.front.inf ? "element is exactly zero"
                                : "certified zero below frontier at level " + std::to_string(k));
        int certified = 0;
        for (const auto& [t, c] : cur.terms)
            if (c.cert_nonzero()) ++certified;
        if (cur.terms.size() >= 2) {
            if (certified < 2)
                raise(errc::zero_up_to_frontier,
                      "jump level " + std::to_string(k) + " has uncertified coefficients");
            d.jump_index = k;
            d.at_jump = cur;
            d.h = elem_from_coords(ctx.ring->group, hcoords);
            return d;
        }
        const auto& [s, c] = cur.terms.front();
        hcoords[static_cast<size_t>(k - 1)] = s;
        // c x_s = x_s (x_s^-1 c x_s)
        cur = te_conj(ctx, k, -s, c);
    }
    raise(errc::single_term_only, "element is a unit monomial below the frontier");
}

}  // namespace

LeftRepr tower_left_repr(const TowerCtx& ctx, const TowerElem& x) {
    Descent d = descend(ctx, x);
    LeftRepr rep;
    rep.h = d.h;
    rep.jump_index = d.jump_index;
    rep.terms = d.at_jump.terms;
    rep.front = d.at_jump.front;
    return rep;
}

Reduced tower_reduce(const TowerCtx& ctx, const TowerElem& x) {
    Descent d = descend(ctx, x);
    Reduced r;
    r.h = d.h;
    r.jump_index = d.jump_index;
    TowerElem wrapped = d.at_jump;
    for (int k = d.jump_index + 1; k <= ctx.levels; ++k)
        wrapped = te_monomial(k, Rational(0), std::move(wrapped));
    // a stored-empty inner frontier must survive the wrapping
    r.reduced = wrapped;
    return r;
}

TowerElem assemble_left_repr(const TowerCtx& ctx, const LeftRepr& rep) {
    TowerElem body = te_zero(rep.jump_index);
    body.terms = rep.terms;
    body.front = rep.front;
    for (int k = rep.jump_index + 1; k <= ctx.levels; ++k)
        body = te_monomial(k, Rational(0), std::move(body));
    CPElement xh = CPElement::monomial(ctx.ring, rep.h, Scalar::one(ctx.ring->field));
    return te_mul(ctx, embed_cp(ctx, xh), body);
}

}  // namespace ordring
