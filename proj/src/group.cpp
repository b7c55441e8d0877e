#include "ordring/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ordring/braid.hpp"
#include "ordring/errors.hpp"

namespace ordring {

std::string GroupSpec::describe() const {
    switch (family) {
        case Family::FreeAbelian: return "Z^" + std::to_string(rank) + " (lex)";
        case Family::RationalVector: return "Q^" + std::to_string(rank) + " (lex)";
        case Family::FreeGroup:
            return "F_" + std::to_string(rank) + " (Magnus, degree " +
                   std::to_string(magnus_degree) + ")";
        case Family::BraidB3: return "B_3 (Dubrovina-Dubrovin)";
        case Family::Semidirect:
            return normal->describe() + " x| " + quotient->describe();
    }
    return "?";
}

GroupSpecPtr make_free_abelian(int rank) {
    if (rank < 1) raise(errc::invalid_config, "rank must be >= 1");
    auto s = std::make_shared<GroupSpec>();
    s->family = Family::FreeAbelian;
    s->order = OrderKind::Lex;
    s->rank = rank;
    return s;
}

GroupSpecPtr make_rational_vector(int rank) {
    if (rank < 1) raise(errc::invalid_config, "rank must be >= 1");
    auto s = std::make_shared<GroupSpec>();
    s->family = Family::RationalVector;
    s->order = OrderKind::Lex;
    s->rank = rank;
    return s;
}

GroupSpecPtr make_free_group(int rank, int magnus_degree) {
    if (rank < 1 || magnus_degree < 1) raise(errc::invalid_config, "rank/degree must be >= 1");
    auto s = std::make_shared<GroupSpec>();
    s->family = Family::FreeGroup;
    s->order = OrderKind::Magnus;
    s->rank = rank;
    s->magnus_degree = magnus_degree;
    return s;
}

GroupSpecPtr make_braid_b3() {
    auto s = std::make_shared<GroupSpec>();
    s->family = Family::BraidB3;
    s->order = OrderKind::DubrovinaDubrovin;
    s->rank = 2;
    return s;
}

namespace {

Word act_word(const GroupSpec& n, const std::vector<Word>& images, const Word& w) {
    Word out;
    for (int letter : w) {
        size_t i = static_cast<size_t>(std::abs(letter)) - 1;
        if (i >= images.size()) raise(errc::invalid_config, "action image missing");
        Word im = letter > 0 ? images[i] : word_inverse(images[i]);
        out.insert(out.end(), im.begin(), im.end());
    }
    (void)n;
    return word_free_reduce(out);
}

std::vector<long> act_vec(const std::vector<std::vector<long>>& m, const std::vector<long>& v) {
    std::vector<long> out(v.size(), 0);
    for (size_t r = 0; r < out.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

}  // namespace

GroupSpecPtr make_semidirect(GroupSpecPtr normal, GroupSpecPtr quotient, SemidirectAction action) {
    if (!normal || !quotient) raise(errc::invalid_config, "semidirect needs both parts");
    if (quotient->family != Family::FreeAbelian || quotient->rank != 1)
        raise(errc::invalid_config, "only infinite-cyclic quotients are supported");
    auto s = std::make_shared<GroupSpec>();
    s->family = Family::Semidirect;
    s->order = OrderKind::SemidirectLex;
    s->normal = std::move(normal);
    s->quotient = std::move(quotient);
    s->action = std::move(action);
    // the two directions must compose to the identity on generators
    const auto& n = *s->normal;
    if (n.family == Family::FreeAbelian) {
        if (s->action.mat.size() != static_cast<size_t>(n.rank) ||
            s->action.mat_inv.size() != static_cast<size_t>(n.rank))
            raise(errc::invalid_config, "action matrix has wrong shape");
        for (int c = 0; c < n.rank; ++c) {
            std::vector<long> e(static_cast<size_t>(n.rank), 0);
            e[static_cast<size_t>(c)] = 1;
            auto round = act_vec(s->action.mat_inv, act_vec(s->action.mat, e));
            if (round != e) raise(errc::invalid_config, "action matrices are not inverse");
        }
    } else if (n.family == Family::FreeGroup) {
        for (int c = 0; c < n.rank; ++c) {
            Word e{c + 1};
            Word round = act_word(n, s->action.words_inv, act_word(n, s->action.words, e));
            if (round != e) raise(errc::invalid_config, "action words are not inverse");
        }
    } else {
        raise(errc::unsupported_family, "semidirect normal part must be free abelian or free");
    }
    return s;
}

bool GroupElement::same_group(const GroupElement& o) const {
    return spec == o.spec || (spec && o.spec && spec->describe() == o.spec->describe());
}

GroupElement identity(const GroupSpecPtr& spec) {
    GroupElement g;
    g.spec = spec;
    switch (spec->family) {
        case Family::FreeAbelian: g.ivec.assign(static_cast<size_t>(spec->rank), 0); break;
        case Family::RationalVector: g.qvec.assign(static_cast<size_t>(spec->rank), Rational(0)); break;
        case Family::FreeGroup:
        case Family::BraidB3: break;
        case Family::Semidirect:
            g.sn = std::make_shared<GroupElement>(identity(spec->normal));
            g.sq = std::make_shared<GroupElement>(identity(spec->quotient));
            break;
    }
    return g;
}

namespace {

void check_same(const GroupElement& g, const GroupElement& h) {
    if (!g.same_group(h)) raise(errc::group_mismatch, "elements from different groups");
}

// phi^k applied to a normal-part element
GroupElement semidirect_act(const GroupSpecPtr& spec, long k, const GroupElement& n) {
    GroupElement out = n;
    const auto& a = spec->action;
    for (long step = 0; step < std::labs(k); ++step) {
        if (spec->normal->family == Family::FreeAbelian)
            out.ivec = act_vec(k > 0 ? a.mat : a.mat_inv, out.ivec);
        else
            out.word = act_word(*spec->normal, k > 0 ? a.words : a.words_inv, out.word);
    }
    return out;
}

}  // namespace

GroupElement mul(const GroupElement& g, const GroupElement& h) {
    check_same(g, h);
    GroupElement out;
    out.spec = g.spec;
    switch (g.spec->family) {
        case Family::FreeAbelian:
            out.ivec.resize(g.ivec.size());
            for (size_t i = 0; i < g.ivec.size(); ++i) out.ivec[i] = g.ivec[i] + h.ivec[i];
            break;
        case Family::RationalVector:
            out.qvec.resize(g.qvec.size());
            for (size_t i = 0; i < g.qvec.size(); ++i) out.qvec[i] = g.qvec[i] + h.qvec[i];
            break;
        case Family::FreeGroup:
        case Family::BraidB3: out.word = word_mul(g.word, h.word); break;
        case Family::Semidirect: {
            long k = g.sq->ivec[0];
            out.sn = std::make_shared<GroupElement>(mul(*g.sn, semidirect_act(g.spec, k, *h.sn)));
            out.sq = std::make_shared<GroupElement>(mul(*g.sq, *h.sq));
            break;
        }
    }
    return out;
}

GroupElement inv(const GroupElement& g) {
    GroupElement out;
    out.spec = g.spec;
    switch (g.spec->family) {
        case Family::FreeAbelian:
            out.ivec.resize(g.ivec.size());
            for (size_t i = 0; i < g.ivec.size(); ++i) out.ivec[i] = -g.ivec[i];
            break;
        case Family::RationalVector:
            out.qvec.resize(g.qvec.size());
            for (size_t i = 0; i < g.qvec.size(); ++i) out.qvec[i] = -g.qvec[i];
            break;
        case Family::FreeGroup:
        case Family::BraidB3: out.word = word_inverse(g.word); break;
        case Family::Semidirect: {
            long k = g.sq->ivec[0];
            out.sq = std::make_shared<GroupElement>(inv(*g.sq));
            out.sn = std::make_shared<GroupElement>(semidirect_act(g.spec, -k, inv(*g.sn)));
            break;
        }
    }
    return out;
}

bool is_identity(const GroupElement& g) {
    switch (g.spec->family) {
        case Family::FreeAbelian:
            return std::all_of(g.ivec.begin(), g.ivec.end(), [](long v) { return v == 0; });
        case Family::RationalVector:
            return std::all_of(g.qvec.begin(), g.qvec.end(), [](const Rational& v) { return v == 0; });
        case Family::FreeGroup: return g.word.empty();
        case Family::BraidB3: return b3_is_trivial(g.word);
        case Family::Semidirect: return is_identity(*g.sn) && is_identity(*g.sq);
    }
    return false;
}

bool elem_equal(const GroupElement& g, const GroupElement& h) {
    check_same(g, h);
    return is_identity(mul(inv(g), h));
}

bool is_positive(const GroupElement& g) {
    switch (g.spec->family) {
        case Family::FreeAbelian:
            for (size_t i = g.ivec.size(); i-- > 0;)
                if (g.ivec[i] != 0) return g.ivec[i] > 0;
            return false;
        case Family::RationalVector:
            for (size_t i = g.qvec.size(); i-- > 0;)
                if (g.qvec[i] != 0) return g.qvec[i] > 0;
            return false;
        case Family::FreeGroup: {
            MagnusCtx ctx{g.spec->rank, g.spec->magnus_degree};
            return magnus_compare({}, g.word, ctx) == Ordering::LT;
        }
        case Family::BraidB3: return b3_dd_positive(g.word);
        case Family::Semidirect: return semidirect_cone_member(g);
    }
    return false;
}

Ordering compare(const GroupElement& g, const GroupElement& h) {
    GroupElement d = mul(inv(g), h);
    if (is_identity(d)) return Ordering::EQ;
    return is_positive(d) ? Ordering::LT : Ordering::GT;
}

bool semidirect_cone_member(const GroupElement& g) {
    if (g.spec->family != Family::Semidirect)
        raise(errc::unsupported_family, "not a semidirect product");
    if (!is_identity(*g.sq)) return is_positive(*g.sq);
    return !is_identity(*g.sn) && is_positive(*g.sn);
}

GroupElement elem_from_ivec(const GroupSpecPtr& spec, std::vector<long> v) {
    if (spec->family != Family::FreeAbelian || v.size() != static_cast<size_t>(spec->rank))
        raise(errc::group_mismatch, "bad integer-vector payload");
    GroupElement g;
    g.spec = spec;
    g.ivec = std::move(v);
    return g;
}

GroupElement elem_from_qvec(const GroupSpecPtr& spec, std::vector<Rational> v) {
    if (spec->family != Family::RationalVector || v.size() != static_cast<size_t>(spec->rank))
        raise(errc::group_mismatch, "bad rational-vector payload");
    GroupElement g;
    g.spec = spec;
    g.qvec = std::move(v);
    return g;
}

GroupElement elem_from_word(const GroupSpecPtr& spec, Word w) {
    if (spec->family != Family::FreeGroup && spec->family != Family::BraidB3)
        raise(errc::group_mismatch, "bad word payload");
    for (int letter : w)
        if (letter == 0 || std::abs(letter) > spec->rank)
            raise(errc::invalid_config, "word letter out of range");
    GroupElement g;
    g.spec = spec;
    g.word = word_free_reduce(w);
    return g;
}

GroupElement elem_pair(const GroupSpecPtr& spec, GroupElement n, GroupElement q) {
    if (spec->family != Family::Semidirect) raise(errc::group_mismatch, "not a semidirect product");
    GroupElement g;
    g.spec = spec;
    g.sn = std::make_shared<GroupElement>(std::move(n));
    g.sq = std::make_shared<GroupElement>(std::move(q));
    return g;
}

bool is_abelian_vector(const GroupSpecPtr& spec) {
    return spec->family == Family::FreeAbelian || spec->family == Family::RationalVector;
}

int abelian_rank(const GroupSpecPtr& spec) {
    if (!is_abelian_vector(spec)) raise(errc::unsupported_family, "not an abelian vector group");
    return spec->rank;
}

Rational abelian_coord(const GroupElement& g, int level) {
    size_t i = static_cast<size_t>(level - 1);
    if (g.spec->family == Family::FreeAbelian) return Rational(g.ivec.at(i));
    if (g.spec->family == Family::RationalVector) return g.qvec.at(i);
    raise(errc::unsupported_family, "not an abelian vector group");
}

GroupElement elem_from_coords(const GroupSpecPtr& spec, const std::vector<Rational>& coords) {
    if (spec->family == Family::RationalVector) return elem_from_qvec(spec, coords);
    if (spec->family == Family::FreeAbelian) {
        std::vector<long> v;
        v.reserve(coords.size());
        for (const auto& c : coords) v.push_back(rat_to_long(c));
        return elem_from_ivec(spec, std::move(v));
    }
    raise(errc::unsupported_family, "not an abelian vector group");
}

std::vector<Rational> elem_coords(const GroupElement& g) {
    std::vector<Rational> out;
    if (g.spec->family == Family::FreeAbelian) {
        for (long v : g.ivec) out.emplace_back(v);
        return out;
    }
    if (g.spec->family == Family::RationalVector) return g.qvec;
    raise(errc::unsupported_family, "not an abelian vector group");
}

std::optional<long> conradian_witness(const GroupElement& a, const GroupElement& b, long n_max) {
    if (!is_positive(a) || !is_positive(b))
        raise(errc::not_positive, "conradian witness needs e < a and e < b");
    GroupElement ab = mul(a, b);
    GroupElement ba = mul(b, a);
    GroupElement pw = identity(a.spec);
    for (long n = 1; n <= n_max; ++n) {
        pw = mul(pw, ba);
        if (compare(ab, pw) == Ordering::LT) return n;
    }
    return std::nullopt;
}

std::vector<ConvexJump> convex_jumps(const GroupSpecPtr& spec) {
    std::vector<ConvexJump> out;
    if (is_abelian_vector(spec)) {
        std::string base = spec->family == Family::FreeAbelian ? "Z" : "Q";
        for (int k = 1; k <= spec->rank; ++k) {
            ConvexJump j;
            j.index = k;
            j.lower = k == 1 ? "{e}" : base + "^" + std::to_string(k - 1);
            j.upper = base + "^" + std::to_string(k);
            j.factor_rank = 1;
            out.push_back(j);
        }
        return out;
    }
    if (spec->family == Family::Semidirect) {
        if (is_abelian_vector(spec->normal)) {
            out = convex_jumps(spec->normal);
        } else {
            // the normal part's own chain is not computed; it enters as one block
            ConvexJump block;
            block.index = 1;
            block.lower = "{e}";
            block.upper = spec->normal->describe();
            block.factor_rank = 0;
            block.collapsed = true;
            out.push_back(block);
        }
        ConvexJump top;
        top.index = static_cast<int>(out.size()) + 1;
        top.lower = spec->normal->describe();
        top.upper = spec->describe();
        top.factor_rank = 1;
        out.push_back(top);
        return out;
    }
    raise(errc::unsupported_family,
          "convex jumps are not computed for " + spec->describe());
}

GroupElement rep_mod(const GroupElement& g, int k) {
    if (k == 0) return g;
    if (is_abelian_vector(g.spec)) {
        GroupElement out = g;
        for (int lvl = 1; lvl <= k && lvl <= g.spec->rank; ++lvl) {
            if (out.spec->family == Family::FreeAbelian)
                out.ivec[static_cast<size_t>(lvl - 1)] = 0;
            else
                out.qvec[static_cast<size_t>(lvl - 1)] = 0;
        }
        return out;
    }
    if (g.spec->family == Family::Semidirect) {
        int below = static_cast<int>(convex_jumps(g.spec).size()) - 1;
        if (k >= below)  // coset representative modulo (at least) the normal part
            return elem_pair(g.spec, identity(g.spec->normal),
                             k > below ? identity(g.spec->quotient) : *g.sq);
        return elem_pair(g.spec, rep_mod(*g.sn, k), *g.sq);
    }
    raise(errc::unsupported_family, "no transversal rule for " + g.spec->describe());
}

bool in_convex_subgroup(const GroupElement& g, int k) {
    return is_identity(rep_mod(g, k));
}

namespace {

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::string strip_parens(const std::string& s0) {
    std::string s = strip(s0);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
    raise(errc::invalid_config, "expected parenthesized element: '" + s0 + "'");
}

Word parse_letter_word(const std::string& text, int rank) {
    if (text.empty() || text == "e") return {};
    Word w;
    for (const auto& tok : split_top(text, '.')) {
        std::string t = strip(tok);
        if (t.size() != 1 || !std::isalpha(static_cast<unsigned char>(t[0])))
            raise(errc::invalid_config, "bad generator token '" + t + "'");
        char c = t[0];
        int idx = std::tolower(c) - 'a' + 1;
        if (idx > rank) raise(errc::invalid_config, "generator out of range: '" + t + "'");
        w.push_back(std::isupper(static_cast<unsigned char>(c)) ? -idx : idx);
    }
    return word_free_reduce(w);
}

std::string letter_word_str(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        char c = static_cast<char>('a' + std::abs(w[i]) - 1);
        out += w[i] < 0 ? static_cast<char>(std::toupper(c)) : c;
    }
    return out;
}

}  // namespace

GroupElement elem_parse(const GroupSpecPtr& spec, const std::string& text0) {
    std::string text = strip(text0);
    switch (spec->family) {
        case Family::FreeAbelian: {
            auto parts = split_top(strip_parens(text), ',');
            if (parts.size() != static_cast<size_t>(spec->rank))
                raise(errc::invalid_config, "expected " + std::to_string(spec->rank) +
                                                " coordinates in '" + text + "'");
            std::vector<long> v;
            for (const auto& p : parts) v.push_back(rat_to_long(rat_parse(strip(p))));
            return elem_from_ivec(spec, std::move(v));
        }
        case Family::RationalVector: {
            auto parts = split_top(strip_parens(text), ',');
            if (parts.size() != static_cast<size_t>(spec->rank))
                raise(errc::invalid_config, "expected " + std::to_string(spec->rank) +
                                                " coordinates in '" + text + "'");
            std::vector<Rational> v;
            for (const auto& p : parts) v.push_back(rat_parse(strip(p)));
            return elem_from_qvec(spec, std::move(v));
        }
        case Family::FreeGroup: return elem_from_word(spec, parse_letter_word(text, spec->rank));
        case Family::BraidB3: return elem_from_word(spec, b3_parse(text));
        case Family::Semidirect: {
            auto parts = split_top(strip_parens(text), ';');
            if (parts.size() != 2)
                raise(errc::invalid_config, "expected '(normal;quotient)' in '" + text + "'");
            return elem_pair(spec, elem_parse(spec->normal, strip(parts[0])),
                             elem_parse(spec->quotient, strip(parts[1])));
        }
    }
    raise(errc::invalid_config, "unparsable element '" + text + "'");
}

std::string elem_str(const GroupElement& g) {
    switch (g.spec->family) {
        case Family::FreeAbelian: {
            std::string out = "(";
            for (size_t i = 0; i < g.ivec.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(g.ivec[i]);
            }
            return out + ")";
        }
        case Family::RationalVector: {
            std::string out = "(";
            for (size_t i = 0; i < g.qvec.size(); ++i) {
                if (i) out += ',';
                out += rat_str(g.qvec[i]);
            }
            return out + ")";
        }
        case Family::FreeGroup: return letter_word_str(g.word);
        case Family::BraidB3: return b3_str(g.word);
        case Family::Semidirect:
            return "(" + elem_str(*g.sn) + ";" + elem_str(*g.sq) + ")";
    }
    return "?";
}

}  // namespace ordring
