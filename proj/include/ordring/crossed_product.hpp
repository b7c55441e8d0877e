#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ordring/group.hpp"
#include "ordring/scalar.hpp"

namespace ordring {

// The twisting data (eta, alpha) of F[G,eta,alpha]. Ground fields here are
// commutative (Q or F_p), so the alpha_g are the identity on F; eta is either
// trivial or the bilinear form q^(g^T M h) on abelian vector groups (the
// quantum-torus shape). Single ordered pairs can be overridden, which is how
// the cocycle validator gets fed deliberately corrupted data.
class TwistData {
  public:
    static TwistData trivial(FieldSpec field = {});
    static TwistData bilinear_q(Scalar q, std::vector<std::vector<long>> matrix);

    Scalar eta(const GroupElement& g, const GroupElement& h) const;
    Scalar alpha(const GroupElement& g, const Scalar& a) const {
        (void)g;
        return a;
    }

    bool is_trivial() const { return kind_ == Kind::Trivial && overrides_.empty(); }
    void add_override(GroupElement g, GroupElement h, Scalar value);
    std::string describe() const;

  private:
    enum class Kind { Trivial, BilinearQ };
    Kind kind_ = Kind::Trivial;
    FieldSpec field_;
    Scalar q_;
    std::vector<std::vector<long>> matrix_;
    std::vector<std::tuple<GroupElement, GroupElement, Scalar>> overrides_;
};

struct CPRing {
    GroupSpecPtr group;
    TwistData twist;
    FieldSpec field;
};
using CPRingPtr = std::shared_ptr<const CPRing>;

CPRingPtr make_cp_ring(GroupSpecPtr group, TwistData twist, FieldSpec field = {});

// Finite-support element sum a_g x_g of F[G,eta,alpha]; term maps iterate in
// the group's left-order and never store zero coefficients.
class CPElement {
  public:
    CPElement() = default;
    explicit CPElement(CPRingPtr ring) : ring_(std::move(ring)) {}

    static CPElement zero(const CPRingPtr& ring) { return CPElement(ring); }
    static CPElement monomial(const CPRingPtr& ring, const GroupElement& g, const Scalar& a);
    static CPElement scalar(const CPRingPtr& ring, const Scalar& a);
    static CPElement one(const CPRingPtr& ring);

    const CPRingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }
    const std::map<GroupElement, Scalar, GroupLess>& terms() const { return terms_; }
    Scalar coeff(const GroupElement& g) const;
    void add_term(const GroupElement& g, const Scalar& a);

    std::string str() const;

  private:
    CPRingPtr ring_;
    std::map<GroupElement, Scalar, GroupLess> terms_;
};

CPElement cp_add(const CPElement& x, const CPElement& y);
CPElement cp_neg(const CPElement& x);
CPElement cp_sub(const CPElement& x, const CPElement& y);
CPElement cp_mul(const CPElement& x, const CPElement& y);
CPElement cp_scale(const CPElement& x, const Scalar& a);
bool cp_equal(const CPElement& x, const CPElement& y);

// x_g^-1 as an element: the eta-corrected monomial at g^-1.
CPElement cp_monomial_inverse(const CPRingPtr& ring, const GroupElement& g, const Scalar& a);

// Units of F[G,eta,alpha] over a left-ordered group are exactly the non-zero
// scalar multiples of basis monomials.
bool is_unit(const CPElement& x);

// x_g . x . x_g^-1
CPElement conj_alpha(const GroupElement& g, const CPElement& x);

// Writes x = sum_t c_t x_t over the canonical transversal of C_k, with every
// c_t supported in C_k; reassembling with cp_mul returns x exactly.
std::map<GroupElement, CPElement, GroupLess> decompose_by_cosets(const CPElement& x, int k);

struct CocycleReport {
    bool ok = true;
    long checks = 0;
    std::vector<std::string> violations;
};

// Checks identity (6) on all samples and identities (7), (8) on all sample
// triples; violations are collected, not thrown.
CocycleReport validate_cocycle(const CPRingPtr& ring, const std::vector<GroupElement>& samples,
                               const std::vector<Scalar>& field_samples);

}  // namespace ordring
