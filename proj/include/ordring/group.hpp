#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordring/magnus.hpp"
#include "ordring/rational.hpp"
#include "ordring/scalar.hpp"
#include "ordring/words.hpp"

namespace ordring {

enum class Family { FreeAbelian, RationalVector, FreeGroup, BraidB3, Semidirect };
enum class OrderKind { Lex, DubrovinaDubrovin, Magnus, SemidirectLex };

struct GroupSpec;
using GroupSpecPtr = std::shared_ptr<const GroupSpec>;

// Action of the rank-1 quotient generator on the normal part, on generators.
// FreeAbelian normal parts use integer matrices, FreeGroup parts substitution
// words; both directions are supplied and validated to compose to the
// identity on generators.
struct SemidirectAction {
    std::vector<std::vector<long>> mat, mat_inv;
    std::vector<Word> words, words_inv;
};

struct GroupSpec {
    Family family = Family::FreeAbelian;
    OrderKind order = OrderKind::Lex;
    int rank = 1;          // vector rank / free-group generator count
    int magnus_degree = 8;  // FreeGroup order truncation
    GroupSpecPtr normal, quotient;  // Semidirect
    SemidirectAction action;

    std::string describe() const;
};

GroupSpecPtr make_free_abelian(int rank);
GroupSpecPtr make_rational_vector(int rank);
GroupSpecPtr make_free_group(int rank, int magnus_degree = 8);
GroupSpecPtr make_braid_b3();
GroupSpecPtr make_semidirect(GroupSpecPtr normal, GroupSpecPtr quotient, SemidirectAction action);

class GroupElement {
  public:
    GroupElement() = default;

    GroupSpecPtr spec;
    std::vector<long> ivec;       // FreeAbelian
    std::vector<Rational> qvec;   // RationalVector
    Word word;                    // FreeGroup (freely reduced), BraidB3 (freely reduced)
    std::shared_ptr<const GroupElement> sn, sq;  // Semidirect parts

    bool same_group(const GroupElement& o) const;
};

GroupElement identity(const GroupSpecPtr& spec);
GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inv(const GroupElement& g);
bool is_identity(const GroupElement& g);
bool elem_equal(const GroupElement& g, const GroupElement& h);

// The spec's left-order: a < b iff a^-1 b lies in the positive cone.
Ordering compare(const GroupElement& g, const GroupElement& h);
bool is_positive(const GroupElement& g);  // e < g

GroupElement elem_from_ivec(const GroupSpecPtr& spec, std::vector<long> v);
GroupElement elem_from_qvec(const GroupSpecPtr& spec, std::vector<Rational> v);
GroupElement elem_from_word(const GroupSpecPtr& spec, Word w);
GroupElement elem_pair(const GroupSpecPtr& spec, GroupElement n, GroupElement q);

// Coordinate of an abelian element at 1-based level k (FreeAbelian and
// RationalVector both expose rational coordinates).
Rational abelian_coord(const GroupElement& g, int level);
int abelian_rank(const GroupSpecPtr& spec);
bool is_abelian_vector(const GroupSpecPtr& spec);
GroupElement elem_from_coords(const GroupSpecPtr& spec, const std::vector<Rational>& coords);
std::vector<Rational> elem_coords(const GroupElement& g);

// Smallest n <= n_max with ab < (ba)^n, for e < a, e < b.
std::optional<long> conradian_witness(const GroupElement& a, const GroupElement& b, long n_max);

struct ConvexJump {
    int index = 1;          // jump (C_{index-1}, C_index)
    std::string lower, upper;
    int factor_rank = 1;    // 1 for the rank-1 lex factors, 0 for collapsed blocks
    bool collapsed = false;
};

// Full chain of convex jumps, innermost first. Supported for the lex families
// and semidirect-lex; the braid order has no computed chain.
std::vector<ConvexJump> convex_jumps(const GroupSpecPtr& spec);

// Canonical transversal for the lex jumps: the coset representative of
// g C_k zeroes all coordinates at levels <= k; rep_mod(e, k) = e.
GroupElement rep_mod(const GroupElement& g, int k);
bool in_convex_subgroup(const GroupElement& g, int k);  // g in C_k

// Positive-cone membership for a semidirect product (strict cone, e excluded):
// the quotient part is positive, or it is trivial and the normal part is.
bool semidirect_cone_member(const GroupElement& g);

std::string elem_str(const GroupElement& g);
GroupElement elem_parse(const GroupSpecPtr& spec, const std::string& text);

// Strict-weak-order functor so group elements can key ordered maps.
struct GroupLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        return compare(a, b) == Ordering::LT;
    }
};

}  // namespace ordring
