#include "ordring/endo.hpp"

#include <algorithm>
#include <random>

#include "ordring/errors.hpp"

namespace ordring {

bool Window::contains(const GroupElement& g) const {
    auto coords = elem_coords(g);
    if (coords.size() != lo.size()) return false;
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] < Rational(lo[i]) || coords[i] > Rational(hi[i])) return false;
    return true;
}

std::vector<GroupElement> Window::elements(const GroupSpecPtr& spec) const {
    if (!is_abelian_vector(spec))
        raise(errc::unsupported_family, "windows are boxes in abelian lattice groups");
    long count = 1;
    for (size_t i = 0; i < lo.size(); ++i) {
        if (hi[i] < lo[i]) raise(errc::invalid_config, "empty window");
        count *= hi[i] - lo[i] + 1;
        if (count > 200000) raise(errc::invalid_config, "window too large");
    }
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<long> cur(lo);
    while (true) {
        std::vector<Rational> coords;
        coords.reserve(cur.size());
        for (long c : cur) coords.emplace_back(c);
        out.push_back(elem_from_coords(spec, coords));
        size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
        }
        if (i == cur.size()) break;
    }
    std::sort(out.begin(), out.end(), GroupLess{});
    return out;
}

Window default_window(const GroupSpecPtr& spec, long radius, Rational width) {
    Window w;
    w.lo.assign(static_cast<size_t>(spec->rank), -radius);
    w.hi.assign(static_cast<size_t>(spec->rank), radius);
    w.width = std::move(width);
    return w;
}

EndoPtr EndoRep::monomial(const CPRingPtr& ring, const Scalar& a, const GroupElement& h) {
    auto e = std::shared_ptr<EndoRep>(new EndoRep());
    e->kind_ = Kind::Monomial;
    e->ring_ = ring;
    e->a_ = a;
    e->h_ = h;
    return e;
}

EndoPtr EndoRep::embed(CPElement x) {
    auto e = std::shared_ptr<EndoRep>(new EndoRep());
    e->kind_ = Kind::FiniteSum;
    e->ring_ = x.ring();
    e->fs_ = std::move(x);
    return e;
}

EndoPtr EndoRep::sum(EndoPtr f, EndoPtr g) {
    if (f->ring_ != g->ring_) raise(errc::mismatch, "endomorphisms over different rings");
    auto e = std::shared_ptr<EndoRep>(new EndoRep());
    e->kind_ = Kind::Sum;
    e->ring_ = f->ring_;
    e->lhs_ = std::move(f);
    e->rhs_ = std::move(g);
    return e;
}

EndoPtr EndoRep::compose(EndoPtr f, EndoPtr g) {
    if (f->ring_ != g->ring_) raise(errc::mismatch, "endomorphisms over different rings");
    auto e = std::shared_ptr<EndoRep>(new EndoRep());
    e->kind_ = Kind::Compose;
    e->ring_ = f->ring_;
    e->lhs_ = std::move(f);
    e->rhs_ = std::move(g);
    return e;
}

EndoPtr EndoRep::negate(EndoPtr f) {
    CPElement minus_one =
        CPElement::scalar(f->ring(), -Scalar::one(f->ring()->field));
    return compose(embed(std::move(minus_one)), std::move(f));
}

HahnSeries EndoRep::column(const GroupElement& g) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(g);
        if (it != memo_.end()) return it->second;
    }
    HahnSeries col = compute_column(g);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(g, std::move(col));
    (void)inserted;
    return it->second;
}

HahnSeries EndoRep::compute_column(const GroupElement& g) const {
    HahnSeries xg = HahnSeries::monomial(ring_, g, Scalar::one(ring_->field));
    switch (kind_) {
        case Kind::Monomial: return hs_monomial_act(a_, h_, xg);
        case Kind::FiniteSum: return hs_finite_act(fs_, xg);
        case Kind::Sum: return hs_add(lhs_->column(g), rhs_->column(g));
        case Kind::Compose: return lhs_->apply(rhs_->column(g));
        case Kind::Inverse: return inverse_column(g);
    }
    raise(errc::certification_failed, "bad endomorphism node");
}

HahnSeries EndoRep::apply(const HahnSeries& m) const {
    // continuity: f(m) = sum over supp m of f(x_g m_g)
    HahnSeries out = HahnSeries::zero(ring_);
    for (const auto& [g, c] : m.terms()) out = hs_add(out, hs_scalar_right(column(g), c));
    if (!m.frontier().is_infinite()) out.restrict_frontier(unknown_image_bound(m.frontier()));
    return out;
}

Frontier EndoRep::unknown_image_bound(const Frontier& f) const {
    switch (kind_) {
        case Kind::Monomial: return f.shifted(h_);
        case Kind::FiniteSum: {
            if (fs_.is_zero()) return Frontier::infinite();
            Frontier out = f.shifted(fs_.terms().begin()->first);
            for (const auto& [h, a] : fs_.terms()) out = fr_min(out, f.shifted(h));
            return out;
        }
        case Kind::Sum:
            return fr_min(lhs_->unknown_image_bound(f), rhs_->unknown_image_bound(f));
        case Kind::Compose: return lhs_->unknown_image_bound(rhs_->unknown_image_bound(f));
        case Kind::Inverse: {
            for (const auto& [v, g] : vmap())
                if (!f.admits(v)) return Frontier::at(g);
            raise(errc::window_exhausted,
                  "cannot bound inverse images beyond the window for " + describe());
        }
    }
    return Frontier::infinite();
}

const std::map<GroupElement, GroupElement, GroupLess>& EndoRep::vmap() const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (vmap_) return *vmap_;
    }
    auto built = std::make_shared<std::map<GroupElement, GroupElement, GroupLess>>();
    for (const auto& g : window_.elements(ring_->group)) {
        HahnSeries col = inner_->column(g);
        auto v = hs_v(col);
        if (!v.has_value()) continue;
        built->emplace(*v, g);  // duplicates keep the first; the checks flag them
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (!vmap_) vmap_ = built;
    return *vmap_;
}

namespace {

GroupElement shift_level1(const GroupElement& g, const Rational& w) {
    auto coords = elem_coords(g);
    coords[0] = coords[0] + w;
    return elem_from_coords(g.spec, coords);
}

}  // namespace

HahnSeries EndoRep::inverse_column(const GroupElement& g) const {
    const auto& vm = vmap();
    auto it = vm.find(g);
    if (it == vm.end())
        raise(errc::not_found_in_window,
              "no window monomial maps to valuation " + elem_str(g));
    // solve f(u) = x_g by triangular elimination of the residual's leading term
    Frontier cutoff = Frontier::at(shift_level1(g, window_.width));
    Scalar one = Scalar::one(ring_->field);
    HahnSeries u = HahnSeries::zero(ring_);
    HahnSeries r = HahnSeries::monomial(ring_, g, one);
    std::optional<GroupElement> last;
    long steps = 0;
    while (true) {
        // least residual term inside the certified region
        std::optional<GroupElement> lead;
        Scalar lead_c = Scalar::zero(ring_->field);
        for (const auto& [p, c] : r.terms()) {
            if (cutoff.admits(p) && r.frontier().admits(p)) {
                lead = p;
                lead_c = c;
                break;
            }
        }
        if (!lead.has_value()) break;
        if (last.has_value() && !(compare(*last, *lead) == Ordering::LT))
            raise(errc::certification_failed, "residual valuation failed to increase");
        last = lead;
        auto pit = vm.find(*lead);
        if (pit == vm.end())
            raise(errc::not_found_in_window,
                  "residual term " + elem_str(*lead) + " has no preimage in the window");
        const GroupElement& gp = pit->second;
        HahnSeries fcol = inner_->column(gp);
        Scalar c0 = fcol.coeff(*lead);
        if (c0.is_zero()) raise(errc::certification_failed, "v-map column lost its lead");
        Scalar t = lead_c / c0;
        u = hs_add(u, HahnSeries::monomial(ring_, gp, t));
        r = hs_add(r, hs_neg(hs_scalar_right(fcol, t)));
        if (++steps > window_.max_steps)
            raise(errc::window_exhausted, "inverse column exceeded the step budget");
    }
    u.restrict_frontier(fr_min(cutoff, r.frontier()));
    return u;
}

EndoPtr EndoRep::inverse(EndoPtr f, Window w) {
    CheckReport vc = check_v_compatible(f, w);
    if (!vc.ok)
        raise(errc::certification_failed,
              "not v-compatible on the window: " + vc.violations.front());
    CheckReport sj = check_surjective_on_g(f, w);
    if (!sj.ok)
        raise(errc::certification_failed,
              "not surjective on the window: " + sj.violations.front());
    auto e = std::shared_ptr<EndoRep>(new EndoRep());
    e->kind_ = Kind::Inverse;
    e->ring_ = f->ring_;
    e->inner_ = f;
    e->window_ = std::move(w);

    // certificate: two-sided identity on certified terms over the window
    Scalar one = Scalar::one(e->ring_->field);
    for (const auto& g : e->window_.elements(e->ring_->group)) {
        if (e->vmap().count(g) == 0) continue;
        HahnSeries col = e->column(g);
        HahnSeries back = f->apply(col);
        HahnSeries xg = HahnSeries::monomial(e->ring_, g, one);
        xg.restrict_frontier(back.frontier());
        if (!hs_agree_on_common(back, xg))
            raise(errc::certification_failed,
                  "f applied to the inverse column of " + elem_str(g) + " is not x_g");
    }
    return e;
}

bool EndoRep::supported_in(int k) const {
    switch (kind_) {
        case Kind::Monomial: return in_convex_subgroup(h_, k);
        case Kind::FiniteSum:
            for (const auto& [g, a] : fs_.terms())
                if (!in_convex_subgroup(g, k)) return false;
            return true;
        case Kind::Sum:
        case Kind::Compose: return lhs_->supported_in(k) && rhs_->supported_in(k);
        case Kind::Inverse: return inner_->supported_in(k);
    }
    return false;
}

std::string EndoRep::describe() const {
    switch (kind_) {
        case Kind::Monomial: return a_.str() + "*[" + elem_str(h_) + "]";
        case Kind::FiniteSum: return "(" + fs_.str() + ")";
        case Kind::Sum: return "(" + lhs_->describe() + " + " + rhs_->describe() + ")";
        case Kind::Compose: return lhs_->describe() + "*" + rhs_->describe();
        case Kind::Inverse: return "inv(" + inner_->describe() + ")";
    }
    return "?";
}

CheckReport check_v_compatible(const EndoPtr& f, const Window& w, unsigned seed) {
    CheckReport rep;
    auto elems = w.elements(f->ring()->group);
    auto note = [&](const std::string& msg) {
        rep.ok = false;
        if (rep.violations.size() < 10) rep.violations.push_back(msg);
    };
    std::vector<std::optional<GroupElement>> vs;
    vs.reserve(elems.size());
    for (const auto& g : elems) vs.push_back(hs_v(f->column(g)));
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = i + 1; j < elems.size(); ++j) {
            ++rep.checks;
            // elems ascending: need v(f(x_i)) < v(f(x_j)) (infinite = zero map)
            if (!vs[i].has_value() || !vs[j].has_value()) {
                note("image of " + elem_str(!vs[i] ? elems[i] : elems[j]) + " vanishes");
                continue;
            }
            if (!(compare(*vs[i], *vs[j]) == Ordering::LT))
                note("v order violated at " + elem_str(elems[i]) + ", " + elem_str(elems[j]));
        }
    }
    // random finite combinations: the biconditional on series, not just monomials
    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, elems.empty() ? 0 : elems.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int round = 0; round < 20 && !elems.empty(); ++round) {
        HahnSeries m = HahnSeries::zero(f->ring());
        HahnSeries m2 = HahnSeries::zero(f->ring());
        for (int t = 0; t < 3; ++t) {
            m.add_term(elems[pick(rng)], Scalar::of_long(coeff(rng), f->ring()->field));
            m2.add_term(elems[pick(rng)], Scalar::of_long(coeff(rng), f->ring()->field));
        }
        auto vm = hs_v(m), vm2 = hs_v(m2);
        if (!vm.has_value() || !vm2.has_value()) continue;
        ++rep.checks;
        auto fv = hs_v(f->apply(m)), fv2 = hs_v(f->apply(m2));
        if (!fv.has_value() || !fv2.has_value()) {
            note("image of a random series vanishes");
            continue;
        }
        bool lhs = compare(*vm, *vm2) != Ordering::GT;
        bool rhs = compare(*fv, *fv2) != Ordering::GT;
        if (lhs != rhs) note("biconditional fails on a random pair");
    }
    return rep;
}

CheckReport check_surjective_on_g(const EndoPtr& f, const Window& w) {
    CheckReport rep;
    auto elems = w.elements(f->ring()->group);
    std::map<GroupElement, GroupElement, GroupLess> vm;
    for (const auto& g : elems) {
        auto v = hs_v(f->column(g));
        if (v.has_value()) vm.emplace(*v, g);
    }
    if (vm.empty()) {
        rep.ok = false;
        rep.violations.push_back("no image valuations attained on the window");
        return rep;
    }
    const GroupElement& lo = vm.begin()->first;
    const GroupElement& hi = vm.rbegin()->first;
    for (const auto& g : elems) {
        if (!(compare(lo, g) == Ordering::LT) || !(compare(g, hi) == Ordering::LT)) continue;
        ++rep.checks;
        auto it = vm.find(g);
        if (it == vm.end())
            raise(errc::not_found_in_window,
                  "no monomial in the window maps to valuation " + elem_str(g));
        rep.notes.push_back(elem_str(g) + " <- " + elem_str(it->second));
    }
    return rep;
}

CheckReport support_containment_check(const EndoPtr& f, int k, const HahnSeries& m) {
    CheckReport rep;
    HahnSeries image = f->apply(m);
    for (const auto& [p, c] : image.terms()) {
        ++rep.checks;
        bool inside = false;
        for (const auto& [h, a] : m.terms()) {
            if (in_convex_subgroup(mul(p, inv(h)), k)) {
                inside = true;
                break;
            }
        }
        if (!inside) {
            rep.ok = false;
            if (rep.violations.size() < 10)
                rep.violations.push_back("term " + elem_str(p) + " escapes the cosets");
        }
    }
    return rep;
}

bool hughes_independence(const CPRingPtr& ring, int k, const std::vector<GroupElement>& hs,
                         const std::vector<EndoPtr>& ds, const Window& w) {
    if (hs.size() != ds.size() || hs.empty())
        raise(errc::invalid_config, "need matching h and d lists");
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j)
            if (elem_equal(rep_mod(hs[i], k), rep_mod(hs[j], k)))
                raise(errc::mismatch, "cosets h_i C are not pairwise distinct");
    for (const auto& d : ds)
        if (!d->supported_in(k))
            raise(errc::mismatch, "coefficient endomorphism not built over the subgroup");
    (void)w;
    Scalar one = Scalar::one(ring->field);
    std::vector<HahnSeries> images;
    for (size_t i = 0; i < hs.size(); ++i) {
        HahnSeries m = ds[i]->apply(HahnSeries::monomial(ring, hs[i], one));
        // support containment: supp d_i(x_{h_i}) inside C_k h_i
        for (const auto& [p, c] : m.terms())
            if (!in_convex_subgroup(mul(p, inv(hs[i])), k))
                raise(errc::certification_failed,
                      "support containment violated at " + elem_str(p));
        images.push_back(std::move(m));
    }
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            for (const auto& [p, c] : images[i].terms())
                if (!images[j].coeff(p).is_zero())
                    raise(errc::certification_failed, "supports are not disjoint");
    return true;
}

bool transcendence_check(const CPRingPtr& ring, const GroupElement& h, int k, int degree_bound,
                         const Window& w) {
    if (in_convex_subgroup(h, k))
        raise(errc::mismatch, "x_h lies over the subgroup: h N is not infinite cyclic");
    Scalar one = Scalar::one(ring->field);
    // sampled generating coefficients of the closure of F[C_k]: a constant, a
    // polynomial, and an inverse
    GroupElement n1 = elem_from_coords(
        ring->group, [&] {
            std::vector<Rational> c(static_cast<size_t>(ring->group->rank), Rational(0));
            c[0] = 1;
            return c;
        }());
    std::vector<EndoPtr> samples;
    samples.push_back(EndoRep::embed(CPElement::one(ring)));
    CPElement poly = cp_add(CPElement::monomial(ring, n1, one),
                            CPElement::scalar(ring, Scalar::of_long(-2, ring->field)));
    samples.push_back(EndoRep::embed(poly));
    CPElement one_minus = cp_sub(CPElement::one(ring), CPElement::monomial(ring, n1, one));
    samples.push_back(EndoRep::inverse(EndoRep::embed(one_minus), w));

    GroupElement hk = identity(ring->group);
    std::vector<HahnSeries> images;
    std::vector<GroupElement> anchors;
    for (int deg = 0; deg <= degree_bound; ++deg) {
        const EndoPtr& d = samples[static_cast<size_t>(deg) % samples.size()];
        HahnSeries m = d->apply(HahnSeries::monomial(ring, hk, one));
        if (!hs_v(m).has_value())
            raise(errc::certification_failed, "sampled coefficient image vanished");
        for (const auto& [p, c] : m.terms())
            if (!in_convex_subgroup(mul(p, inv(hk)), k))
                raise(errc::certification_failed,
                      "support containment violated at " + elem_str(p));
        images.push_back(std::move(m));
        anchors.push_back(hk);
        hk = mul(hk, h);
    }
    for (size_t i = 0; i < anchors.size(); ++i)
        for (size_t j = i + 1; j < anchors.size(); ++j)
            if (elem_equal(rep_mod(anchors[i], k), rep_mod(anchors[j], k)))
                raise(errc::certification_failed, "powers of h do not separate cosets");
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            for (const auto& [p, c] : images[i].terms())
                if (!images[j].coeff(p).is_zero()) return false;
    return true;
}

EndoPtr endo_from_expr(const ExprPtr& e, const Window& w) {
    switch (e->kind) {
        case RationalExpr::Kind::Const: return EndoRep::embed(e->value);
        case RationalExpr::Kind::Neg: return EndoRep::negate(endo_from_expr(e->a, w));
        case RationalExpr::Kind::Add:
            return EndoRep::sum(endo_from_expr(e->a, w), endo_from_expr(e->b, w));
        case RationalExpr::Kind::Mul:
            return EndoRep::compose(endo_from_expr(e->a, w), endo_from_expr(e->b, w));
        case RationalExpr::Kind::Inv: return EndoRep::inverse(endo_from_expr(e->a, w), w);
    }
    raise(errc::invalid_config, "bad expression node");
}

}  // namespace ordring
