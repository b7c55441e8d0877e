#pragma once

#include <cstdlib>
#include <vector>

namespace ordring {

// Words over generators and their inverses, letter i encoded as +(i+1) for
// the generator and -(i+1) for its inverse.
using Word = std::vector<int>;

inline Word word_free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (letter == 0) continue;
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

inline Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

inline Word word_mul(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return word_free_reduce(out);
}

inline long word_exponent_sum(const Word& w) {
    long s = 0;
    for (int letter : w) s += letter > 0 ? 1 : -1;
    return s;
}

}  // namespace ordring
