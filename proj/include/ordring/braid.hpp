#pragma once

#include <string>
#include <vector>

#include "ordring/words.hpp"

namespace ordring {

// B3 = <s1, s2 | s1 s2 s1 = s2 s1 s2>, words over {+-1, +-2}.

// Removes all s1-handles. The result represents the same braid and is
// s1-positive, s1-negative, or s1-free; this decides the word problem and the
// Dubrovina-Dubrovin order.
Word b3_handle_reduce(const Word& w);

// Membership in the positive cone P generated as a semigroup by
// u = s1 s2 and w = s2^-1. Classification from the handle-reduced shape:
// s1-positive, or s1-free and s2-negative. e is not in P.
bool b3_dd_positive(const Word& w);

inline bool b3_is_trivial(const Word& w) { return b3_handle_reduce(w).empty(); }

// Independent word-problem oracle. B3 is the trefoil knot group
// <x, y | x^2 = y^3> with x = s1 s2 s1, y = s1 s2 and center <x^2>; the
// quotient by the center is the free product Z/2 * Z/3 whose normal forms are
// computed by plain syllable rewriting (x^2 -> e, y^3 -> e). A braid word is
// determined by that normal form together with its exponent sum.
struct B3NormalForm {
    // syllables: 1 for x, 2 for y, 3 for y^2
    std::vector<int> syllables;
    long central_power = 0;  // exponent of x^2

    bool operator==(const B3NormalForm& o) const {
        return syllables == o.syllables && central_power == o.central_power;
    }
};

B3NormalForm b3_oracle_normal_form(const Word& w);

inline bool b3_oracle_equal(const Word& a, const Word& b) {
    return b3_oracle_normal_form(a) == b3_oracle_normal_form(b);
}

// "s1.S2.s1" <-> word; capital = inverse, "e" = empty word.
Word b3_parse(const std::string& text);
std::string b3_str(const Word& w);

}  // namespace ordring
