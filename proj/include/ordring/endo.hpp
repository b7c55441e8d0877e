#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ordring/expr.hpp"
#include "ordring/hahn.hpp"

namespace ordring {

class EndoRep;
using EndoPtr = std::shared_ptr<const EndoRep>;

// Finite order-convex box of basis monomials x_g on which endomorphism data
// is certified, plus the certified width of inverse columns.
struct Window {
    std::vector<long> lo, hi;  // per level, inclusive
    Rational width = Rational(16);
    long max_steps = 4096;

    bool contains(const GroupElement& g) const;
    std::vector<GroupElement> elements(const GroupSpecPtr& spec) const;
};

Window default_window(const GroupSpecPtr& spec, long radius = 10, Rational width = Rational(16));

struct CheckReport {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};

// Elements of the rational closure of F[G,eta,alpha] in End(F((G))),
// represented by an expression tree plus memoized truncated columns
// (the action on basis monomials). Immutable; the memo is synchronized.
class EndoRep : public std::enable_shared_from_this<EndoRep> {
  public:
    enum class Kind { Monomial, FiniteSum, Sum, Compose, Inverse };

    static EndoPtr monomial(const CPRingPtr& ring, const Scalar& a, const GroupElement& h);
    static EndoPtr embed(CPElement x);
    static EndoPtr sum(EndoPtr f, EndoPtr g);
    static EndoPtr compose(EndoPtr f, EndoPtr g);  // m -> f(g(m))
    static EndoPtr negate(EndoPtr f);
    // Certifies v-compatibility and surjectivity on the window first, then
    // checks the two-sided identity on certified terms.
    static EndoPtr inverse(EndoPtr f, Window w);

    Kind kind() const { return kind_; }
    const CPRingPtr& ring() const { return ring_; }

    // memoized action on the basis monomial x_g
    HahnSeries column(const GroupElement& g) const;
    HahnSeries apply(const HahnSeries& m) const;

    // all crossed-product constants in the tree supported in C_k
    bool supported_in(int k) const;
    std::string describe() const;

    // least window element whose image valuation is not admitted by f;
    // bounds where images of unknown input terms can appear
    Frontier unknown_image_bound(const Frontier& f) const;

  private:
    EndoRep() = default;

    Kind kind_ = Kind::FiniteSum;
    CPRingPtr ring_;
    CPElement fs_;
    Scalar a_;
    GroupElement h_;
    EndoPtr lhs_, rhs_, inner_;
    Window window_;

    mutable std::mutex mu_;
    mutable std::map<GroupElement, HahnSeries, GroupLess> memo_;
    // v(inner(x_g)) -> g, over the window; built once on demand
    mutable std::shared_ptr<const std::map<GroupElement, GroupElement, GroupLess>> vmap_;

    HahnSeries compute_column(const GroupElement& g) const;
    HahnSeries inverse_column(const GroupElement& g) const;
    const std::map<GroupElement, GroupElement, GroupLess>& vmap() const;

    friend CheckReport check_v_compatible(const EndoPtr& f, const Window& w, unsigned seed);
    friend CheckReport check_surjective_on_g(const EndoPtr& f, const Window& w);
};

// v(m) <= v(m') <=> v(f(m)) <= v(f(m')) on window pairs and random samples.
CheckReport check_v_compatible(const EndoPtr& f, const Window& w, unsigned seed = 1);

// For every g strictly inside the attained valuation range, some window
// monomial maps to valuation g. Raises NotFoundInWindow on a gap.
CheckReport check_surjective_on_g(const EndoPtr& f, const Window& w);

// supp f(m) is contained in { u h : u in C_k, h in supp m }.
CheckReport support_containment_check(const EndoPtr& f, int k, const HahnSeries& m);

// Linear independence of x_{h_1},...,x_{h_n} over the rational closure of
// F[C_k]: disjoint-coset supports of the d_i(x_{h_i}); containment asserted.
bool hughes_independence(const CPRingPtr& ring, int k, const std::vector<GroupElement>& hs,
                         const std::vector<EndoPtr>& ds, const Window& w);

// x_h transcendental over the closure of F[C_k] up to the degree bound,
// by the same disjoint-coset argument applied to d_j x_h^j.
bool transcendence_check(const CPRingPtr& ring, const GroupElement& h, int k, int degree_bound,
                         const Window& w);

// Endomorphism mirroring an expression tree (Const -> embed, Mul -> compose,
// Inv -> certified inverse on the window).
EndoPtr endo_from_expr(const ExprPtr& e, const Window& w);

}  // namespace ordring
