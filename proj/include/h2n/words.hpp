#pragma once

// Genus-g surface group presentation  < a1,b1,...,ag,bg | prod [ai,bi] >,
// freely reduced words, conjugacy-class representatives and evaluation.
// Letters are signed generator indices: +k / -k for the k-th generator and
// its inverse, generators ordered a1, b1, a2, b2, ...

#include "h2n/core.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace h2n {

struct Word {
    std::vector<int> letters;  // freely reduced

    bool empty() const { return letters.empty(); }
    int size() const { return static_cast<int>(letters.size()); }

    bool operator==(const Word&) const = default;
};

/// letter order used everywhere: +1 < -1 < +2 < -2 < ...
inline int letter_rank(int l) { return l > 0 ? 2 * l - 2 : -2 * l - 1; }

inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int i = 0; i < a.size(); ++i) {
        const int ra = letter_rank(a.letters[static_cast<size_t>(i)]);
        const int rb = letter_rank(b.letters[static_cast<size_t>(i)]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

inline Word reduce(std::vector<int> letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int l : letters) {
        if (l == 0) throw invariant_error("Word: zero letter");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word{std::move(out)};
}

inline Word concat(const Word& a, const Word& b) {
    std::vector<int> ls = a.letters;
    ls.insert(ls.end(), b.letters.begin(), b.letters.end());
    return reduce(std::move(ls));
}

inline Word inverse(const Word& w) {
    std::vector<int> ls(w.letters.rbegin(), w.letters.rend());
    for (int& l : ls) l = -l;
    return Word{std::move(ls)};
}

inline Word power(const Word& w, int k) {
    Word out;
    for (int i = 0; i < k; ++i) out = concat(out, w);
    return out;
}

inline bool cyclically_reduced(const Word& w) {
    return w.empty() || w.letters.front() != -w.letters.back();
}

inline Word cyclic_reduce(Word w) {
    while (w.size() >= 2 && w.letters.front() == -w.letters.back()) {
        w.letters.erase(w.letters.begin());
        w.letters.pop_back();
    }
    return w;
}

/// lexicographically minimal cyclic rotation (letter_rank order)
inline Word min_rotation(const Word& w) {
    if (w.empty()) return w;
    const int n = w.size();
    Word best = w;
    std::vector<int> rot = w.letters;
    for (int s = 1; s < n; ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        Word cand{rot};
        if (word_less(cand, best)) best = cand;
    }
    return best;
}

struct Presentation {
    int genus = 2;

    int num_generators() const { return 2 * genus; }

    Word relator() const {
        std::vector<int> ls;
        for (int i = 0; i < genus; ++i) {
            const int a = 2 * i + 1, b = 2 * i + 2;
            ls.insert(ls.end(), {a, b, -a, -b});
        }
        return Word{std::move(ls)};
    }

    bool valid_letter(int l) const { return l != 0 && std::abs(l) <= num_generators(); }

    /// generator names a1,b1,a2,b2,... ; inverses get a trailing '
    std::string letter_name(int l) const {
        if (!valid_letter(l)) throw invariant_error("letter out of range");
        const int idx = std::abs(l) - 1;
        std::string s = (idx % 2 == 0 ? "a" : "b") + std::to_string(idx / 2 + 1);
        if (l < 0) s += "'";
        return s;
    }

    std::string word_name(const Word& w) const {
        if (w.empty()) return "e";
        std::string s;
        for (int i = 0; i < w.size(); ++i) {
            if (i) s += ".";
            s += letter_name(w.letters[static_cast<size_t>(i)]);
        }
        return s;
    }

    Word parse_word(const std::string& text) const {
        std::vector<int> ls;
        size_t i = 0;
        while (i < text.size()) {
            if (text[i] == '.' || text[i] == ' ') { ++i; continue; }
            const char c = text[i];
            if (c == 'e' && text.size() == 1) break;
            if (c != 'a' && c != 'b') throw invariant_error("parse_word: bad letter in '" + text + "'");
            ++i;
            size_t j = i;
            while (j < text.size() && std::isdigit(text[j])) ++j;
            if (j == i) throw invariant_error("parse_word: missing handle index in '" + text + "'");
            const int handle = std::stoi(text.substr(i, j - i));
            i = j;
            int l = 2 * (handle - 1) + (c == 'a' ? 1 : 2);
            if (i < text.size() && text[i] == '\'') { l = -l; ++i; }
            if (!valid_letter(l)) throw invariant_error("parse_word: letter out of range");
            ls.push_back(l);
        }
        return reduce(std::move(ls));
    }
};

/// all freely reduced nonempty words up to maxlen, in lexicographic
/// (prefix-DFS) order
inline std::vector<Word> enumerate_reduced(const Presentation& pres, int maxlen,
                                           std::size_t cap = 50'000'000) {
    if (maxlen < 1) throw invariant_error("enumerate_reduced: maxlen must be >= 1");
    const int ng = pres.num_generators();
    std::vector<int> alphabet;
    for (int g = 1; g <= ng; ++g) {
        alphabet.push_back(g);
        alphabet.push_back(-g);
    }
    std::vector<Word> out;
    std::vector<int> stack;
    auto dfs = [&](auto&& self) -> void {
        if (!stack.empty()) {
            if (out.size() >= cap)
                throw invariant_error("enumerate_reduced: word count exceeds cap");
            out.push_back(Word{stack});
        }
        if (static_cast<int>(stack.size()) == maxlen) return;
        for (int l : alphabet) {
            if (!stack.empty() && stack.back() == -l) continue;
            stack.push_back(l);
            self(self);
            stack.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

struct ConjugacyOptions {
    bool dedup_inversion = false;
    std::size_t cap = 50'000'000;
};

/// Cyclically reduced words, one per cyclic-rotation class (and optionally per
/// inversion class).  Deduplication is exact on the free group only: distinct
/// representatives may be conjugate in the surface group through the relator,
/// so counts overestimate surface-group conjugacy classes.
inline std::vector<Word> conjugacy_reps(const Presentation& pres, int maxlen,
                                        ConjugacyOptions opts = {}) {
    if (maxlen < 1) throw invariant_error("conjugacy_reps: maxlen must be >= 1");
    const int ng = pres.num_generators();
    std::vector<int> alphabet;
    for (int g = 1; g <= ng; ++g) {
        alphabet.push_back(g);
        alphabet.push_back(-g);
    }
    std::vector<Word> out;
    std::vector<int> stack;
    auto keep = [&](const Word& w) {
        if (!cyclically_reduced(w)) return false;
        if (min_rotation(w) != w) return false;
        if (opts.dedup_inversion) {
            const Word wi = min_rotation(inverse(w));
            if (word_less(wi, w)) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self) -> void {
        if (!stack.empty()) {
            Word w{stack};
            if (keep(w)) {
                if (out.size() >= opts.cap)
                    throw invariant_error("conjugacy_reps: class count exceeds cap");
                out.push_back(std::move(w));
            }
        }
        if (static_cast<int>(stack.size()) == maxlen) return;
        for (int l : alphabet) {
            if (!stack.empty() && stack.back() == -l) continue;
            stack.push_back(l);
            self(self);
            stack.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

/// Ordered product of generator images; inverse letters use the q-adjoint
/// Q M^T Q, which preserves the form exactly.
inline Mat evaluate(const QForm& q, const std::vector<Mat>& gen_images, const Word& w) {
    Mat m = Mat::Identity(q.dim(), q.dim());
    for (int l : w.letters) {
        const size_t idx = static_cast<size_t>(std::abs(l) - 1);
        if (idx >= gen_images.size()) throw invariant_error("evaluate: letter out of range");
        if (l > 0)
            m *= gen_images[idx];
        else
            m *= q.adjoint_inverse(gen_images[idx]);
    }
    return m;
}

/// Dehn reduction test for the standard surface-group presentation: a
/// cyclically reduced word has a strictly shorter representative in the
/// surface group iff some cyclic subword is more than half of a cyclic
/// rotation of the relator or its inverse (Dehn's algorithm).  Words passing
/// this test realize their class at the current word length.
inline bool dehn_reduced(const Presentation& pres, const Word& w) {
    const Word rel = pres.relator();
    const int rl = rel.size();
    const int k = rl / 2 + 1;  // forbidden window length
    if (w.size() < k) return true;
    std::vector<std::vector<int>> forbidden;
    for (const Word& base : {rel, inverse(rel)}) {
        for (int rot = 0; rot < rl; ++rot) {
            std::vector<int> cyc = base.letters;
            std::rotate(cyc.begin(), cyc.begin() + rot, cyc.end());
            forbidden.emplace_back(cyc.begin(), cyc.begin() + k);
        }
    }
    const int n = w.size();
    for (int s = 0; s < n; ++s) {
        std::vector<int> window(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            window[static_cast<size_t>(i)] = w.letters[static_cast<size_t>((s + i) % n)];
        for (const auto& f : forbidden)
            if (window == f) return false;
    }
    return true;
}

/// The only pairs registered as essentially intersecting: the two standard
/// generators of one handle (they meet exactly once on the surface).
inline bool essentially_intersecting(const Presentation& pres, const Word& w1, const Word& w2) {
    if (w1.size() != 1 || w2.size() != 1) return false;
    const int l1 = std::abs(w1.letters[0]), l2 = std::abs(w2.letters[0]);
    if (l1 > pres.num_generators() || l2 > pres.num_generators()) return false;
    const int h1 = (l1 - 1) / 2, h2 = (l2 - 1) / 2;
    return h1 == h2 && l1 != l2;
}

}  // namespace h2n
