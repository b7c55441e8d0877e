#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordring/crossed_product.hpp"
#include "ordring/group.hpp"

namespace ordring {

// Truncation certificate for a series in F((G)): the set of exponents on
// which the stored terms are exact. Either everything (an exact element),
// everything below a group element, or - for the abelian lattice groups -
// everything below a lex cut that may be "minus infinity" in its lower
// coordinates (the natural shape after flattening a tower).
class Frontier {
  public:
    static Frontier infinite();
    static Frontier at(const GroupElement& g);
    // Cut over levels from_level..rank; coords[i] belongs to level
    // from_level + i. Levels below from_level read as -infinity.
    static Frontier cut(const GroupSpecPtr& spec, int from_level, std::vector<Rational> coords);

    bool is_infinite() const { return kind_ == Kind::Infinite; }
    // g lies strictly below the cut
    bool admits(const GroupElement& g) const;
    std::string str() const;

    friend Frontier fr_min(const Frontier& a, const Frontier& b);
    // image of the certificate under m -> x_h m
    Frontier shifted(const GroupElement& h) const;
    // cut-point sum (abelian); -infinity coordinates absorb
    Frontier plus(const Frontier& o) const;

    bool operator==(const Frontier& o) const;

  private:
    enum class Kind { Infinite, Element, Cut };
    Kind kind_ = Kind::Infinite;
    GroupElement g_;
    GroupSpecPtr spec_;
    int from_level_ = 1;
    std::vector<Rational> coords_;

    // abelian cuts in padded form, [level-1] entry; nullopt = -infinity
    std::vector<std::optional<Rational>> padded() const;
    static Frontier from_padded(const GroupSpecPtr& spec,
                                const std::vector<std::optional<Rational>>& p);
};

// Element of the right F-vector space F((G)), stored as its certified prefix:
// every term of the true series below the frontier is present and exact.
class HahnSeries {
  public:
    HahnSeries() = default;
    HahnSeries(CPRingPtr ring, Frontier f = Frontier::infinite())
        : ring_(std::move(ring)), front_(std::move(f)) {}

    static HahnSeries zero(const CPRingPtr& ring) { return HahnSeries(ring); }
    static HahnSeries monomial(const CPRingPtr& ring, const GroupElement& g, const Scalar& a);
    static HahnSeries from_cp(const CPElement& x);

    const CPRingPtr& ring() const { return ring_; }
    const Frontier& frontier() const { return front_; }
    const std::map<GroupElement, Scalar, GroupLess>& terms() const { return terms_; }
    bool stored_zero() const { return terms_.empty(); }
    bool is_exact() const { return front_.is_infinite(); }

    Scalar coeff(const GroupElement& g) const;
    void add_term(const GroupElement& g, const Scalar& a);  // drops terms at/past the frontier
    void restrict_frontier(const Frontier& f);

    std::string str() const;

  private:
    CPRingPtr ring_;
    std::map<GroupElement, Scalar, GroupLess> terms_;
    Frontier front_;
};

// v(m): least support element; +infinity (nullopt) for a series with no
// stored terms.
std::optional<GroupElement> hs_v(const HahnSeries& m);

HahnSeries hs_add(const HahnSeries& a, const HahnSeries& b);
HahnSeries hs_neg(const HahnSeries& a);
HahnSeries hs_scalar_right(const HahnSeries& m, const Scalar& a);

// iota_{a x_h}(m) = sum x_{hg} (alpha^-1_{hg}(a eta(h,g)) m_g)
HahnSeries hs_monomial_act(const Scalar& a, const GroupElement& h, const HahnSeries& m);

// Action of a finite crossed-product element, term by term.
HahnSeries hs_finite_act(const CPElement& x, const HahnSeries& m);

// Series-times-series multiplication; abelian exponent groups only.
HahnSeries hs_series_mul(const HahnSeries& a, const HahnSeries& b);

HahnSeries hs_sum_family(const CPRingPtr& ring, const std::vector<HahnSeries>& family);

// deterministic rendering "c*[g] + ... (frontier: ...)" and its parse
std::string hs_str(const HahnSeries& m);
HahnSeries hs_parse(const CPRingPtr& ring, const std::string& text);

// equality of certified data on the overlap of the two frontiers
bool hs_agree_on_common(const HahnSeries& a, const HahnSeries& b);

}  // namespace ordring
