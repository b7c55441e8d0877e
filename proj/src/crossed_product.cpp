#include "ordring/crossed_product.hpp"

#include "ordring/errors.hpp"

namespace ordring {

TwistData TwistData::trivial(FieldSpec field) {
    TwistData t;
    t.field_ = field;
    return t;
}

TwistData TwistData::bilinear_q(Scalar q, std::vector<std::vector<long>> matrix) {
    if (q.is_zero()) raise(errc::invalid_config, "twist base q must be non-zero");
    TwistData t;
    t.kind_ = Kind::BilinearQ;
    t.field_ = q.field();
    t.q_ = std::move(q);
    t.matrix_ = std::move(matrix);
    return t;
}

void TwistData::add_override(GroupElement g, GroupElement h, Scalar value) {
    overrides_.emplace_back(std::move(g), std::move(h), std::move(value));
}

Scalar TwistData::eta(const GroupElement& g, const GroupElement& h) const {
    for (const auto& [og, oh, val] : overrides_)
        if (elem_equal(og, g) && elem_equal(oh, h)) return val;
    if (kind_ == Kind::Trivial) return Scalar::one(field_);
    auto gv = elem_coords(g);
    auto hv = elem_coords(h);
    if (matrix_.size() != gv.size()) raise(errc::invalid_config, "twist matrix shape mismatch");
    Rational b(0);
    for (size_t i = 0; i < gv.size(); ++i)
        for (size_t j = 0; j < hv.size(); ++j)
            if (matrix_[i][j] != 0) b += gv[i] * Rational(matrix_[i][j]) * hv[j];
    if (!rat_is_integer(b))
        raise(errc::invalid_config, "bilinear twist exponent " + rat_str(b) + " is not integral");
    return q_.pow(rat_to_long(b));
}

std::string TwistData::describe() const {
    std::string s = kind_ == Kind::Trivial ? "trivial" : ("q=" + q_.str() + " bilinear");
    if (!overrides_.empty()) s += " with " + std::to_string(overrides_.size()) + " override(s)";
    return s;
}

CPRingPtr make_cp_ring(GroupSpecPtr group, TwistData twist, FieldSpec field) {
    auto r = std::make_shared<CPRing>();
    r->group = std::move(group);
    r->twist = std::move(twist);
    r->field = field;
    return r;
}

CPElement CPElement::monomial(const CPRingPtr& ring, const GroupElement& g, const Scalar& a) {
    CPElement x(ring);
    x.add_term(g, a);
    return x;
}

CPElement CPElement::scalar(const CPRingPtr& ring, const Scalar& a) {
    return monomial(ring, identity(ring->group), a);
}

CPElement CPElement::one(const CPRingPtr& ring) {
    return scalar(ring, Scalar::one(ring->field));
}

Scalar CPElement::coeff(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
}

void CPElement::add_term(const GroupElement& g, const Scalar& a) {
    if (a.is_zero()) return;
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

std::string CPElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, a] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += a.str() + "*[" + elem_str(g) + "]";
    }
    return out;
}

namespace {
void check_ring(const CPElement& x, const CPElement& y) {
    if (x.ring() != y.ring()) raise(errc::mismatch, "elements from different crossed products");
}
}  // namespace

CPElement cp_add(const CPElement& x, const CPElement& y) {
    check_ring(x, y);
    CPElement out = x;
    for (const auto& [g, a] : y.terms()) out.add_term(g, a);
    return out;
}

CPElement cp_neg(const CPElement& x) {
    CPElement out(x.ring());
    for (const auto& [g, a] : x.terms()) out.add_term(g, -a);
    return out;
}

CPElement cp_sub(const CPElement& x, const CPElement& y) { return cp_add(x, cp_neg(y)); }

CPElement cp_mul(const CPElement& x, const CPElement& y) {
    check_ring(x, y);
    const auto& ring = *x.ring();
    CPElement out(x.ring());
    for (const auto& [g, a] : x.terms()) {
        for (const auto& [h, b] : y.terms()) {
            // a_g x_g . b_h x_h = a_g alpha_g(b_h) eta(g,h) x_{gh}
            out.add_term(mul(g, h), a * ring.twist.alpha(g, b) * ring.twist.eta(g, h));
        }
    }
    return out;
}

CPElement cp_scale(const CPElement& x, const Scalar& a) {
    CPElement out(x.ring());
    for (const auto& [g, c] : x.terms()) out.add_term(g, c * a);
    return out;
}

bool cp_equal(const CPElement& x, const CPElement& y) { return cp_sub(x, y).is_zero(); }

CPElement cp_monomial_inverse(const CPRingPtr& ring, const GroupElement& g, const Scalar& a) {
    if (a.is_zero()) raise(errc::division_by_zero, "monomial with zero coefficient");
    // (a x_g)(b x_{g^-1}) = a alpha_g(b) eta(g, g^-1) x_e = 1
    GroupElement gi = inv(g);
    Scalar b = (a * ring->twist.eta(g, gi)).inv();
    return CPElement::monomial(ring, gi, b);
}

bool is_unit(const CPElement& x) { return x.support_size() == 1; }

CPElement conj_alpha(const GroupElement& g, const CPElement& x) {
    const auto& ring = x.ring();
    CPElement xg = CPElement::monomial(ring, g, Scalar::one(ring->field));
    CPElement xgi = cp_monomial_inverse(ring, g, Scalar::one(ring->field));
    return cp_mul(cp_mul(xg, x), xgi);
}

std::map<GroupElement, CPElement, GroupLess> decompose_by_cosets(const CPElement& x, int k) {
    const auto& ring = x.ring();
    std::map<GroupElement, CPElement, GroupLess> out;
    for (const auto& [g, a] : x.terms()) {
        GroupElement t = rep_mod(g, k);
        CPElement piece = cp_mul(CPElement::monomial(ring, g, a),
                                 cp_monomial_inverse(ring, t, Scalar::one(ring->field)));
        for (const auto& [n, c] : piece.terms())
            if (!in_convex_subgroup(n, k))
                raise(errc::not_normal, "coset piece leaves the subgroup at " + elem_str(n));
        auto it = out.find(t);
        if (it == out.end())
            out.emplace(t, piece);
        else
            it->second = cp_add(it->second, piece);
    }
    return out;
}

CocycleReport validate_cocycle(const CPRingPtr& ring, const std::vector<GroupElement>& samples,
                               const std::vector<Scalar>& field_samples) {
    CocycleReport rep;
    const auto& tw = ring->twist;
    GroupElement e = identity(ring->group);
    Scalar one = Scalar::one(ring->field);
    auto note = [&](const std::string& msg) {
        rep.ok = false;
        if (rep.violations.size() < 20) rep.violations.push_back(msg);
    };
    for (const auto& g : samples) {
        ++rep.checks;
        if (tw.eta(g, e) != one || tw.eta(e, g) != one)
            note("(6) fails at g=" + elem_str(g));
    }
    for (const auto& g : samples) {
        for (const auto& h : samples) {
            for (const auto& a : field_samples) {
                ++rep.checks;
                // commutative ground field: (7) reads alpha_g alpha_h = alpha_{gh}
                if (tw.alpha(g, tw.alpha(h, a)) != tw.alpha(mul(g, h), a))
                    note("(7) fails at g=" + elem_str(g) + ", h=" + elem_str(h));
            }
            for (const auto& l : samples) {
                ++rep.checks;
                Scalar lhs = tw.alpha(g, tw.eta(h, l)) * tw.eta(g, mul(h, l));
                Scalar rhs = tw.eta(g, h) * tw.eta(mul(g, h), l);
                if (lhs != rhs)
                    note("(8) fails at g=" + elem_str(g) + ", h=" + elem_str(h) +
                         ", l=" + elem_str(l));
            }
        }
    }
    return rep;
}

}  // namespace ordring
