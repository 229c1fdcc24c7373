#pragma once

// Free-group words on two generators, free reduction, and the word sequences:
// the quasi-Engel sequence u_1 = w, u_{n+1} = [x u_n x^-1, y u_n y^-1] and the
// Engel family e_{n+1} = [e_n, v].  Commutator convention: [A,B] = A B A^-1 B^-1.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace qengel::words {

/// Letters: +1 = x, -1 = x^-1, +2 = y, -2 = y^-1.
using Letter = std::int8_t;

class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters) : l_(reduce(std::move(letters))) {}

    static FreeWord x() { return FreeWord({+1}); }
    static FreeWord y() { return FreeWord({+2}); }

    const std::vector<Letter>& letters() const { return l_; }
    size_t length() const { return l_.size(); }
    bool is_identity() const { return l_.empty(); }

    FreeWord inverse() const {
        std::vector<Letter> r;
        r.reserve(l_.size());
        for (size_t i = l_.size(); i-- > 0;) r.push_back((Letter)-l_[i]);
        FreeWord w;
        w.l_ = std::move(r);  // inverse of a reduced word is reduced
        return w;
    }

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
        std::vector<Letter> r = a.l_;
        for (Letter c : b.l_) {
            if (!r.empty() && r.back() == -c) r.pop_back();
            else r.push_back(c);
        }
        FreeWord w;
        w.l_ = std::move(r);
        return w;
    }
    friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.l_ == b.l_; }
    friend bool operator!=(const FreeWord& a, const FreeWord& b) { return a.l_ != b.l_; }
    friend bool operator<(const FreeWord& a, const FreeWord& b) { return a.l_ < b.l_; }

    static std::vector<Letter> reduce(std::vector<Letter> in) {
        std::vector<Letter> r;
        r.reserve(in.size());
        for (Letter c : in) {
            if (c == 0 || c > 2 || c < -2) throw std::invalid_argument("bad letter");
            if (!r.empty() && r.back() == -c) r.pop_back();
            else r.push_back(c);
        }
        return r;
    }

    /// Text form "x^-2*y^-1*x" with collected powers; "1" for the identity.
    std::string str() const {
        if (l_.empty()) return "1";
        std::string s;
        size_t i = 0;
        while (i < l_.size()) {
            size_t j = i;
            while (j < l_.size() && l_[j] == l_[i]) ++j;
            int e = (int)(j - i) * (l_[i] > 0 ? 1 : -1);
            if (!s.empty()) s += "*";
            s += (std::abs(l_[i]) == 1) ? "x" : "y";
            if (e != 1) s += "^" + std::to_string(e);
            i = j;
        }
        return s;
    }

    static FreeWord parse(const std::string& text) {
        std::vector<Letter> out;
        size_t i = 0;
        auto skip = [&] { while (i < text.size() && (text[i] == '*' || isspace((unsigned char)text[i]))) ++i; };
        skip();
        if (text == "1") return FreeWord();
        while (i < text.size()) {
            char g = text[i];
            if (g != 'x' && g != 'y') throw std::invalid_argument("word parse: expected x or y");
            ++i;
            long e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                bool neg = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
                if (i >= text.size() || !isdigit((unsigned char)text[i]))
                    throw std::invalid_argument("word parse: bad exponent");
                e = 0;
                while (i < text.size() && isdigit((unsigned char)text[i])) e = e * 10 + (text[i++] - '0');
                if (neg) e = -e;
            }
            Letter base = (g == 'x') ? 1 : 2;
            Letter c = e > 0 ? base : (Letter)-base;
            for (long n = 0; n < std::labs(e); ++n) out.push_back(c);
            skip();
        }
        return FreeWord(out);
    }

private:
    std::vector<Letter> l_;
};

inline FreeWord free_reduce(const std::vector<Letter>& letters) { return FreeWord(letters); }

inline FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    return a * b * a.inverse() * b.inverse();
}

inline FreeWord conjugate(const FreeWord& g, const FreeWord& w) {  // g w g^-1
    return g * w * g.inverse();
}

/// The canonical initial word w = x^-2 y^-1 x.
inline FreeWord canonical_w() { return FreeWord::parse("x^-2*y^-1*x"); }

enum class SequenceKind { engel, quasi_engel };

struct SequenceSpec {
    SequenceKind kind = SequenceKind::quasi_engel;
    FreeWord initial = canonical_w();
    Letter engel_variable = 1;  // x by default; 2 selects the [u_n, y] form

    static SequenceSpec quasi_engel(FreeWord w = canonical_w()) {
        if (w.is_identity()) throw std::invalid_argument("quasi-Engel initial word must be nonempty");
        return {SequenceKind::quasi_engel, std::move(w), 1};
    }
    static SequenceSpec engel(FreeWord initial, Letter var = 1) {
        return {SequenceKind::engel, std::move(initial), var};
    }
};

/// n-th term of the sequence, freely reduced.  Word length grows like 4^n for the
/// quasi-Engel recursion, so callers should keep n small and prefer group-level
/// evaluation beyond n ~ 8.
inline FreeWord build_sequence(const SequenceSpec& spec, unsigned n) {
    if (n == 0) throw std::invalid_argument("build_sequence: n >= 1");
    FreeWord u = spec.initial;
    for (unsigned i = 1; i < n; ++i) {
        if (spec.kind == SequenceKind::quasi_engel) {
            u = commutator(conjugate(FreeWord::x(), u), conjugate(FreeWord::y(), u));
        } else {
            FreeWord v({spec.engel_variable});
            u = commutator(u, v);
        }
    }
    return u;
}

/// Freely reduced u_i * u_j^-1; its vanishing is the equation u_i = u_j.
inline FreeWord equation_normalize(unsigned i, unsigned j, const SequenceSpec& spec) {
    if (i == j) throw std::invalid_argument("equation_normalize: i != j required");
    return build_sequence(spec, i) * build_sequence(spec, j).inverse();
}

/// All freely reduced nonempty words of length <= max_length, in deterministic
/// (length, lexicographic) order.  4 * 3^(l-1) words of each length l.
inline std::vector<FreeWord> enumerate_initial_words(unsigned max_length) {
    if (max_length == 0) throw std::invalid_argument("enumerate_initial_words: max_length >= 1");
    std::vector<FreeWord> out;
    const Letter alphabet[4] = {+1, -1, +2, -2};
    std::vector<Letter> cur;
    auto rec = [&](auto&& self, unsigned remaining) -> void {
        if (!cur.empty()) out.push_back(FreeWord(cur));
        if (!remaining) return;
        for (Letter c : alphabet) {
            if (!cur.empty() && cur.back() == -c) continue;
            cur.push_back(c);
            self(self, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, max_length);
    std::sort(out.begin(), out.end(), [](const FreeWord& a, const FreeWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.letters() < b.letters();
    });
    return out;
}

}  // namespace qengel::words
