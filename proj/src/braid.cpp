#include "ordring/braid.hpp"

#include <cstdlib>
#include <stdexcept>

#include "ordring/errors.hpp"

namespace ordring {

namespace {

int sign_of(int letter) { return letter > 0 ? 1 : -1; }

// Leftmost s1-handle in a freely reduced word: positions i < j holding
// opposite-sign s1 letters with only s2 letters in between. Free reduction
// guarantees the inner s2 letters form a single block of one sign.
bool find_handle(const Word& w, size_t& i, size_t& j) {
    size_t prev = w.size();
    for (size_t k = 0; k < w.size(); ++k) {
        if (std::abs(w[k]) != 1) continue;
        if (prev != w.size() && w[prev] == -w[k]) {
            i = prev;
            j = k;
            return true;
        }
        prev = k;
    }
    return false;
}

}  // namespace

Word b3_handle_reduce(const Word& input) {
    Word w = word_free_reduce(input);
    size_t i = 0, j = 0;
    long guard = 0;
    while (find_handle(w, i, j)) {
        if (++guard > 4000000) throw std::logic_error("handle reduction did not terminate");
        int e = sign_of(w[i]);
        Word next(w.begin(), w.begin() + static_cast<long>(i));
        // s1^e s2^d s1^-e  ->  s2^-e s1^d s2^e
        next.push_back(-e * 2);
        for (size_t k = i + 1; k < j; ++k) next.push_back(sign_of(w[k]) * 1);
        next.push_back(e * 2);
        next.insert(next.end(), w.begin() + static_cast<long>(j) + 1, w.end());
        w = word_free_reduce(next);
    }
    return w;
}

bool b3_dd_positive(const Word& word) {
    Word w = b3_handle_reduce(word);
    if (w.empty()) return false;
    bool has_s1 = false, s1_positive = false;
    for (int letter : w) {
        if (std::abs(letter) == 1) {
            has_s1 = true;
            s1_positive = letter > 0;
            break;  // definite: all s1 letters share this sign
        }
    }
    if (has_s1) return s1_positive;
    return w.front() < 0;  // s1-free: pure power of s2, positive iff s2-negative
}

namespace {

// Push one syllable of Z/2 * Z/3 onto a normal-form stack.
void push_syllable(std::vector<int>& nf, int s) {
    if (s == 1) {  // x
        if (!nf.empty() && nf.back() == 1)
            nf.pop_back();
        else
            nf.push_back(1);
        return;
    }
    int e = s - 1;  // y^e, e in {1,2}
    if (!nf.empty() && nf.back() >= 2) {
        int cur = nf.back() - 1;
        nf.pop_back();
        int m = (cur + e) % 3;
        if (m != 0) nf.push_back(m + 1);
        return;
    }
    nf.push_back(e + 1);
}

long lift_exponent_sum(const std::vector<int>& nf) {
    // x lifts to s1 s2 s1 (sum 3), y to s1 s2 (sum 2), y^2 to (s1 s2)^2 (sum 4)
    long s = 0;
    for (int syl : nf) s += syl == 1 ? 3 : (syl == 2 ? 2 : 4);
    return s;
}

}  // namespace

B3NormalForm b3_oracle_normal_form(const Word& input) {
    Word w = word_free_reduce(input);
    std::vector<int> nf;
    for (int letter : w) {
        // s1 = y^-1 x = y^2 x, s1^-1 = x y, s2 = x y^2, s2^-1 = y x
        switch (letter) {
            case 1: push_syllable(nf, 3); push_syllable(nf, 1); break;
            case -1: push_syllable(nf, 1); push_syllable(nf, 2); break;
            case 2: push_syllable(nf, 1); push_syllable(nf, 3); break;
            case -2: push_syllable(nf, 2); push_syllable(nf, 1); break;
            default: throw std::invalid_argument("bad braid letter");
        }
    }
    long diff = word_exponent_sum(w) - lift_exponent_sum(nf);
    if (diff % 6 != 0) throw std::logic_error("braid oracle invariant broken");
    return B3NormalForm{std::move(nf), diff / 6};
}

Word b3_parse(const std::string& text) {
    if (text.empty() || text == "e") return {};
    Word w;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t dot = text.find('.', pos);
        std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (tok == "s1")
            w.push_back(1);
        else if (tok == "S1")
            w.push_back(-1);
        else if (tok == "s2")
            w.push_back(2);
        else if (tok == "S2")
            w.push_back(-2);
        else
            raise(errc::invalid_config, "bad braid token '" + tok + "'");
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return word_free_reduce(w);
}

std::string b3_str(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out += '.';
        switch (w[k]) {
            case 1: out += "s1"; break;
            case -1: out += "S1"; break;
            case 2: out += "s2"; break;
            case -2: out += "S2"; break;
        }
    }
    return out;
}

}  // namespace ordring
