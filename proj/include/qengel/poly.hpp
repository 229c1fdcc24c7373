#pragma once

// Sparse multivariate polynomials over an exact coefficient field, with the
// monomial orders used throughout: lex, deglex, degrevlex, and a one-variable
// elimination order.  Includes the transcript-notation parser ("c2b3t2",
// "(a8+a6c2)*v6", explicit caret form) and the matching printer.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qengel/coeff.hpp"

namespace qengel::poly {

/// Exponent vector; length equals the ring arity.
struct Monomial {
    std::vector<std::uint16_t> e;

    explicit Monomial(size_t arity = 0) : e(arity, 0) {}
    unsigned deg() const { return std::accumulate(e.begin(), e.end(), 0u); }
    bool is_one() const {
        for (auto x : e) if (x) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    /// m / this, assuming divisibility.
    Monomial quotient_of(const Monomial& m) const {
        Monomial r(e.size());
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = m.e[i] - e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }
};

enum class OrderKind { lex, deglex, degrevlex, elim1 };

/// Total monomial order.  Variables are compared in ring-declaration order;
/// an optional permutation reorders the comparison priority.  elim1 gives the
/// first (permuted) variable lexicographic priority and breaks ties degrevlex.
struct MonomialOrder {
    OrderKind kind = OrderKind::lex;
    std::vector<unsigned> perm;  // empty = identity

    unsigned at(const Monomial& m, size_t i) const {
        return perm.empty() ? m.e[i] : m.e[perm[i]];
    }
    /// -1, 0, +1 for a < b, a == b, a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        size_t n = a.e.size();
        auto lexcmp = [&](size_t from) {
            for (size_t i = from; i < n; ++i) {
                if (at(a, i) != at(b, i)) return at(a, i) > at(b, i) ? 1 : -1;
            }
            return 0;
        };
        auto revlex = [&](size_t from) {
            for (size_t i = n; i-- > from;) {
                if (at(a, i) != at(b, i)) return at(a, i) < at(b, i) ? 1 : -1;
            }
            return 0;
        };
        auto degcmp = [&](size_t from) {
            unsigned da = 0, db = 0;
            for (size_t i = from; i < n; ++i) da += at(a, i), db += at(b, i);
            return da != db ? (da > db ? 1 : -1) : 0;
        };
        switch (kind) {
            case OrderKind::lex: return lexcmp(0);
            case OrderKind::deglex: {
                int c = degcmp(0);
                return c ? c : lexcmp(0);
            }
            case OrderKind::degrevlex: {
                int c = degcmp(0);
                return c ? c : revlex(0);
            }
            case OrderKind::elim1: {
                if (at(a, 0) != at(b, 0)) return at(a, 0) > at(b, 0) ? 1 : -1;
                int c = degcmp(1);
                return c ? c : revlex(1);
            }
        }
        return 0;
    }
};

inline MonomialOrder lex_order() { return {OrderKind::lex, {}}; }
inline MonomialOrder degrevlex_order() { return {OrderKind::degrevlex, {}}; }
inline MonomialOrder elim1_order() { return {OrderKind::elim1, {}}; }

/// Ring context: variable names, order, characteristic witness.
template <class K>
struct PolyRing {
    std::vector<std::string> vars;
    MonomialOrder ord;
    K one;

    size_t arity() const { return vars.size(); }
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return (int)i;
        return -1;
    }
    bool single_letter_vars() const {
        for (auto& v : vars)
            if (v.size() != 1) return false;
        return true;
    }
    K constant(long n) const { return one.with_value(n); }
};

template <class K>
struct Term {
    Monomial m;
    K c;
};

/// Sparse polynomial, terms sorted descending in the ring's monomial order.
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const PolyRing<K>* ring) : ring_(ring) {}
    Polynomial(const PolyRing<K>* ring, std::vector<Term<K>> ts) : ring_(ring), t_(std::move(ts)) {
        normalize();
    }
    static Polynomial constant(const PolyRing<K>* ring, K c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.t_.push_back({Monomial(ring->arity()), std::move(c)});
        return p;
    }
    static Polynomial variable(const PolyRing<K>* ring, unsigned i, unsigned e = 1) {
        Polynomial p(ring);
        Monomial m(ring->arity());
        m.e[i] = e;
        if (e == 0) return constant(ring, ring->constant(1));
        p.t_.push_back({m, ring->constant(1)});
        return p;
    }

    const PolyRing<K>* ring() const { return ring_; }
    const std::vector<Term<K>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const Monomial& lm() const { require_nonzero(); return t_.front().m; }
    const K& lc() const { require_nonzero(); return t_.front().c; }
    unsigned total_deg() const {
        unsigned d = 0;
        for (auto& t : t_) d = std::max(d, t.m.deg());
        return d;
    }
    unsigned deg_in(unsigned var) const {
        unsigned d = 0;
        for (auto& t : t_) d = std::max(d, (unsigned)t.m.e[var]);
        return d;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.chk(b);
        Polynomial r(a.ring_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size()) { r.t_.push_back(a.t_[i++]); continue; }
            if (i == a.t_.size()) { r.t_.push_back(b.t_[j++]); continue; }
            int c = a.ring_->ord.cmp(a.t_[i].m, b.t_[j].m);
            if (c > 0) r.t_.push_back(a.t_[i++]);
            else if (c < 0) r.t_.push_back(b.t_[j++]);
            else {
                K s = a.t_[i].c + b.t_[j].c;
                if (!s.is_zero()) r.t_.push_back({a.t_[i].m, std::move(s)});
                ++i, ++j;
            }
        }
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.t_) t.c = -t.c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.chk(b);
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        auto cmp = [ring = a.ring_](const Monomial& x, const Monomial& y) {
            return ring->ord.cmp(x, y) > 0;
        };
        std::map<Monomial, K, decltype(cmp)> acc(cmp);
        for (auto& ta : a.t_)
            for (auto& tb : b.t_) {
                Monomial m = ta.m * tb.m;
                K c = ta.c * tb.c;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
                else it->second = it->second + c;
            }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.t_.push_back({m, c});
        return r;
    }
    Polynomial mul_term(const Monomial& m, const K& c) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        r.t_.reserve(t_.size());
        for (auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
        return r;
    }
    Polynomial mul_scalar(const K& c) const { return mul_term(Monomial(ring_->arity()), c); }
    Polynomial monic() const {
        if (is_zero()) return *this;
        return mul_scalar(ring_->constant(1) / lc());
    }

    /// Substitute variable -> polynomial (same ring), expanding powers.
    Polynomial substitute(unsigned var, const Polynomial& value) const {
        // collect by powers of var
        unsigned d = deg_in(var);
        std::vector<Polynomial> coef(d + 1, Polynomial(ring_));
        for (auto& t : t_) {
            Monomial m = t.m;
            unsigned e = m.e[var];
            m.e[var] = 0;
            coef[e] = coef[e] + Polynomial(ring_, {{m, t.c}});
        }
        Polynomial r = coef[d];
        for (unsigned e = d; e-- > 0;) r = r * value + coef[e];
        return r;
    }

    /// Homogenize with respect to variable h (which must not occur).
    Polynomial homogenize(unsigned h) const {
        unsigned d = total_deg();
        Polynomial r(ring_);
        r.t_ = t_;
        for (auto& t : r.t_) {
            if (t.m.e[h]) throw std::invalid_argument("homogenize: variable already present");
            t.m.e[h] = d - t.m.deg();
        }
        r.normalize();
        return r;
    }
    Polynomial dehomogenize(unsigned h) const {
        Polynomial r(ring_);
        r.t_ = t_;
        for (auto& t : r.t_) t.m.e[h] = 0;
        r.normalize();
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        K acc = ring_->constant(0);
        for (auto& t : t_) {
            K v = t.c;
            for (size_t i = 0; i < point.size(); ++i)
                for (unsigned e = 0; e < t.m.e[i]; ++e) v = v * point[i];
            acc = acc + v;
        }
        return acc;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < t_.size(); ++i) {
            std::string cs = t_[i].c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            s += (i == 0) ? (neg ? "-" : "") : (neg ? "-" : "+");
            std::string ms;
            for (size_t v = 0; v < ring_->arity(); ++v) {
                unsigned e = t_[i].m.e[v];
                if (!e) continue;
                if (!ms.empty()) ms += "*";
                ms += ring_->vars[v];
                if (e > 1) ms += "^" + std::to_string(e);
            }
            if (ms.empty()) s += cs;
            else if (cs == "1") s += ms;
            else s += cs + "*" + ms;
        }
        return s;
    }

    void normalize() {
        std::sort(t_.begin(), t_.end(), [this](const Term<K>& a, const Term<K>& b) {
            return ring_->ord.cmp(a.m, b.m) > 0;
        });
        std::vector<Term<K>> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().m == t.m) out.back().c = out.back().c + t.c;
            else out.push_back(t);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Term<K>& t) { return t.c.is_zero(); }),
                  out.end());
        t_ = std::move(out);
    }

private:
    const PolyRing<K>* ring_ = nullptr;
    std::vector<Term<K>> t_;

    void chk(const Polynomial& o) const {
        if (ring_ != o.ring_) throw std::invalid_argument("polynomial ring mismatch");
    }
    void require_nonzero() const {
        if (t_.empty()) throw std::domain_error("zero polynomial has no leading term");
    }
};

/// Equality up to a global sign per polynomial (for matching char-0 transcripts).
template <class K>
bool equal_up_to_sign(const Polynomial<K>& a, const Polynomial<K>& b) {
    return a == b || a == -b;
}

// ---------------------------------------------------------------------------
// Parser for transcript notation.
//
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := integer | var [exponent] | '(' expr ')' ['^' integer]
//
// In compressed mode (all ring variables single letters) an exponent may be a
// juxtaposed integer: "a12" = a^12, "c2b3t2" = c^2*b^3*t^2.  Multi-letter
// identifiers are rejected in compressed mode.
// ---------------------------------------------------------------------------

template <class K>
class Parser {
public:
    Parser(const PolyRing<K>* ring, const std::string& text)
        : ring_(ring), s_(strip(text)), compressed_(ring->single_letter_vars()) {}

    Polynomial<K> run() {
        Polynomial<K> p = expr();
        if (pos_ != s_.size())
            throw std::invalid_argument("polynomial parse: trailing input at '" +
                                        s_.substr(pos_) + "'");
        return p;
    }

private:
    const PolyRing<K>* ring_;
    std::string s_;
    size_t pos_ = 0;
    bool compressed_;

    static std::string strip(const std::string& t) {
        std::string r;
        for (char c : t)
            if (!isspace((unsigned char)c)) r += c;
        return r;
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }

    long integer() {
        if (eof() || !isdigit((unsigned char)peek()))
            throw std::invalid_argument("polynomial parse: expected integer");
        long v = 0;
        while (!eof() && isdigit((unsigned char)peek())) v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    Polynomial<K> expr() {
        int sign = 1;
        while (peek() == '+' || peek() == '-') {
            if (s_[pos_] == '-') sign = -sign;
            ++pos_;
        }
        Polynomial<K> acc = term();
        if (sign < 0) acc = -acc;
        while (peek() == '+' || peek() == '-') {
            int sg = 1;
            while (peek() == '+' || peek() == '-') {
                if (s_[pos_] == '-') sg = -sg;
                ++pos_;
            }
            Polynomial<K> t = term();
            acc = (sg > 0) ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial<K> term() {
        Polynomial<K> acc = factor();
        for (;;) {
            if (peek() == '*') { ++pos_; acc = acc * factor(); continue; }
            if (peek() == '(' || isdigit((unsigned char)peek()) || isalpha((unsigned char)peek())) {
                acc = acc * factor();
                continue;
            }
            break;
        }
        return acc;
    }

    Polynomial<K> factor() {
        if (peek() == '(') {
            ++pos_;
            Polynomial<K> p = expr();
            if (peek() != ')') throw std::invalid_argument("polynomial parse: missing ')'");
            ++pos_;
            if (peek() == '^') {
                ++pos_;
                long e = integer();
                Polynomial<K> r = Polynomial<K>::constant(ring_, ring_->constant(1));
                for (long i = 0; i < e; ++i) r = r * p;
                return r;
            }
            return p;
        }
        if (isdigit((unsigned char)peek())) {
            long v = integer();
            return Polynomial<K>::constant(ring_, ring_->constant(v));
        }
        if (isalpha((unsigned char)peek())) {
            std::string name;
            if (compressed_) {
                name = std::string(1, s_[pos_++]);
            } else {
                while (!eof() && (isalnum((unsigned char)peek()) || peek() == '_'))
                    name += s_[pos_++];
            }
            int vi = ring_->var_index(name);
            if (vi < 0) throw std::invalid_argument("polynomial parse: unknown variable '" + name + "'");
            long e = 1;
            if (peek() == '^') {
                ++pos_;
                e = integer();
            } else if (compressed_ && isdigit((unsigned char)peek())) {
                e = integer();
            }
            return Polynomial<K>::variable(ring_, vi, (unsigned)e);
        }
        throw std::invalid_argument("polynomial parse: unexpected character '" +
                                    std::string(1, peek()) + "'");
    }
};

template <class K>
Polynomial<K> parse_poly(const PolyRing<K>* ring, const std::string& text) {
    return Parser<K>(ring, text).run();
}

}  // namespace qengel::poly
