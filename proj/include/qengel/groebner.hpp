#pragma once

// Multivariate division, Buchberger's algorithm with the product and chain
// criteria, Groebner certificates, lift verification, ideal quotient and
// saturation by elimination, and Hilbert polynomials of leading ideals by
// staircase inclusion-exclusion.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "qengel/poly.hpp"

namespace qengel::poly {

struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GbOptions {
    size_t max_pairs = 500000;   // S-pairs processed
    size_t max_basis = 4000;     // basis elements
};

/// Remainder of multivariate division of f by the list G; no remainder term is
/// divisible by any leading term of G.  Divisors are tried in list order.
template <class K>
Polynomial<K> normal_form(Polynomial<K> f, const std::vector<Polynomial<K>>& G) {
    if (G.empty()) throw std::invalid_argument("normal_form: empty divisor list");
    const PolyRing<K>* ring = f.ring();
    Polynomial<K> r(ring);
    while (!f.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (g.lm().divides(f.lm())) {
                Monomial q = g.lm().quotient_of(f.lm());
                K c = f.lc() / g.lc();
                f = f - g.mul_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move leading term to the remainder
            Polynomial<K> lt(ring, {{f.lm(), f.lc()}});
            r = r + lt;
            f = f - lt;
        }
    }
    return r;
}

/// Exact division f / g; throws if g does not divide f.
template <class K>
Polynomial<K> exact_divide(Polynomial<K> f, const Polynomial<K>& g) {
    const PolyRing<K>* ring = f.ring();
    Polynomial<K> q(ring);
    while (!f.is_zero()) {
        if (!g.lm().divides(f.lm())) throw std::domain_error("exact_divide: not divisible");
        Monomial m = g.lm().quotient_of(f.lm());
        K c = f.lc() / g.lc();
        q = q + Polynomial<K>(ring, {{m, c}});
        f = f - g.mul_term(m, c);
    }
    return q;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    Monomial L = Monomial::lcm(f.lm(), g.lm());
    K one = f.ring()->constant(1);
    return f.mul_term(f.lm().quotient_of(L), one / f.lc()) -
           g.mul_term(g.lm().quotient_of(L), one / g.lc());
}

/// True iff G is a Groebner basis: every S-polynomial reduces to zero.
/// Coprime leading monomials are skipped (Buchberger's first criterion).
template <class K>
bool is_groebner(const std::vector<Polynomial<K>>& G) {
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            if (Monomial::coprime(G[i].lm(), G[j].lm())) continue;
            if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
        }
    return true;
}

/// Interreduce to the unique reduced (monic, tail-reduced) Groebner basis.
template <class K>
std::vector<Polynomial<K>> reduce_basis(std::vector<Polynomial<K>> G) {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial<K>> min;
    for (size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || G[j].is_zero()) continue;
            if (G[j].lm().divides(G[i].lm()) && !(G[j].lm() == G[i].lm() && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) min.push_back(G[i].monic());
    }
    // tail-reduce each against the others
    std::vector<Polynomial<K>> out;
    for (size_t i = 0; i < min.size(); ++i) {
        std::vector<Polynomial<K>> others;
        for (size_t j = 0; j < min.size(); ++j)
            if (j != i) others.push_back(min[j]);
        out.push_back(others.empty() ? min[i] : normal_form(min[i], others).monic());
    }
    // deterministic order: descending leading monomial
    std::sort(out.begin(), out.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
        return a.ring()->ord.cmp(a.lm(), b.lm()) > 0;
    });
    return out;
}

/// Buchberger's algorithm; returns the reduced Groebner basis of <gens>.
template <class K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens,
                                      const GbOptions& opt = {}) {
    std::vector<Polynomial<K>> G;
    for (auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic());
    if (G.empty()) return G;

    struct Pair {
        size_t i, j;
        Monomial lcm;
        unsigned deg;
    };
    auto make_pair = [&](size_t i, size_t j) {
        Monomial L = Monomial::lcm(G[i].lm(), G[j].lm());
        return Pair{i, j, L, L.deg()};
    };
    std::vector<Pair> pairs;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) pairs.push_back(make_pair(i, j));

    auto in_queue = [&](size_t a, size_t b) {
        for (auto& pr : pairs)
            if ((pr.i == a && pr.j == b) || (pr.i == b && pr.j == a)) return true;
        return false;
    };

    size_t processed = 0;
    while (!pairs.empty()) {
        // normal selection: smallest lcm degree, then smallest indices
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            auto &a = pairs[k], &b = pairs[best];
            if (a.deg < b.deg || (a.deg == b.deg && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        if (Monomial::coprime(G[pr.i].lm(), G[pr.j].lm())) continue;
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (G[k].lm().divides(pr.lcm) && !in_queue(pr.i, k) && !in_queue(pr.j, k)) skip = true;
        }
        if (skip) continue;

        if (++processed > opt.max_pairs)
            throw ResourceCapExceeded("buchberger: pair cap exceeded (stretch-scale input)");
        Polynomial<K> r = normal_form(s_polynomial(G[pr.i], G[pr.j]), G);
        if (r.is_zero()) continue;
        G.push_back(r.monic());
        if (G.size() > opt.max_basis)
            throw ResourceCapExceeded("buchberger: basis cap exceeded (stretch-scale input)");
        for (size_t i = 0; i + 1 < G.size(); ++i) pairs.push_back(make_pair(i, G.size() - 1));
    }
    return reduce_basis(std::move(G));
}

/// Checks J[k] = sum_l M[l][k] * I[l] as exact polynomial identities.
/// M has |I| rows and |J| columns.
template <class K>
bool lift_verify(const std::vector<Polynomial<K>>& I, const std::vector<Polynomial<K>>& J,
                 const std::vector<std::vector<Polynomial<K>>>& M) {
    if (M.size() != I.size()) return false;
    for (auto& row : M)
        if (row.size() != J.size()) return false;
    for (size_t k = 0; k < J.size(); ++k) {
        Polynomial<K> s(J[k].ring());
        for (size_t l = 0; l < I.size(); ++l) s = s + M[l][k] * I[l];
        if (!(s == J[k])) return false;
    }
    return true;
}

/// f ∈ <G> test via normal form against a Groebner basis.
template <class K>
bool in_ideal(const Polynomial<K>& f, const std::vector<Polynomial<K>>& gb) {
    return normal_form(f, gb).is_zero();
}

template <class K>
bool ideal_equal(const std::vector<Polynomial<K>>& A, const std::vector<Polynomial<K>>& B,
                 const GbOptions& opt = {}) {
    auto ga = buchberger(A, opt), gb = buchberger(B, opt);
    for (auto& f : A)
        if (!in_ideal(f, gb)) return false;
    for (auto& f : B)
        if (!in_ideal(f, ga)) return false;
    return true;
}

// --- ring plumbing -----------------------------------------------------------

template <class K>
Polynomial<K> map_poly(const Polynomial<K>& p, const PolyRing<K>* target) {
    std::vector<Term<K>> ts;
    const PolyRing<K>* src = p.ring();
    for (auto& t : p.terms()) {
        Monomial m(target->arity());
        for (size_t i = 0; i < src->arity(); ++i) {
            if (!t.m.e[i]) continue;
            int vi = target->var_index(src->vars[i]);
            if (vi < 0) throw std::invalid_argument("map_poly: variable missing in target ring");
            m.e[vi] = t.m.e[i];
        }
        ts.push_back({m, t.c});
    }
    return Polynomial<K>(target, std::move(ts));
}

/// Ideal quotient I : h by elimination: I ∩ <h> = (e*I + (1-e)*h) ∩ k[x], then
/// divide the intersection generators by h.  Returns a reduced basis.
template <class K>
std::vector<Polynomial<K>> ideal_quotient(const std::vector<Polynomial<K>>& I,
                                          const Polynomial<K>& h, const GbOptions& opt = {}) {
    if (h.is_zero()) throw std::invalid_argument("ideal_quotient: h must be nonzero");
    const PolyRing<K>* ring = h.ring();
    auto ext = std::make_unique<PolyRing<K>>();
    ext->vars.push_back("@e");
    for (auto& v : ring->vars) ext->vars.push_back(v);
    ext->ord = elim1_order();
    ext->one = ring->one;

    Polynomial<K> e = Polynomial<K>::variable(ext.get(), 0);
    Polynomial<K> one = Polynomial<K>::constant(ext.get(), ext->constant(1));
    std::vector<Polynomial<K>> gens;
    for (auto& f : I) gens.push_back(e * map_poly(f, ext.get()));
    gens.push_back((one - e) * map_poly(h, ext.get()));

    auto gb = buchberger(gens, opt);
    std::vector<Polynomial<K>> result;
    for (auto& g : gb) {
        bool has_e = false;
        for (auto& t : g.terms())
            if (t.m.e[0]) { has_e = true; break; }
        if (has_e) continue;
        result.push_back(exact_divide(map_poly(g, ring), h));
    }
    if (result.empty()) result.push_back(Polynomial<K>(ring));
    return reduce_basis(std::move(result));
}

/// Saturation I : h^inf by iterating the quotient until it stabilizes.
template <class K>
std::vector<Polynomial<K>> saturate(const std::vector<Polynomial<K>>& I, const Polynomial<K>& h,
                                    const GbOptions& opt = {}) {
    std::vector<Polynomial<K>> cur = buchberger(I, opt);
    for (;;) {
        auto next = ideal_quotient(cur, h, opt);
        if (ideal_equal(cur, next, opt)) return cur;
        cur = std::move(next);
    }
}

// --- Hilbert polynomial of a one-dimensional projective scheme ---------------

struct HilbertCurveData {
    long degree;       // d in H(t) = d*t - p_a + 1
    long arith_genus;  // p_a
    long slope;        // = degree
    long intercept;    // = 1 - p_a
};

namespace detail_hilbert {
inline long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Number of degree-d monomials in m variables avoiding every generator,
/// by inclusion-exclusion over subsets of the (minimalized) generator set.
inline long long staircase_count(const std::vector<Monomial>& gens, unsigned m, long long d) {
    size_t n = gens.size();
    if (n > 24) throw ResourceCapExceeded("hilbert: too many staircase generators");
    long long total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Monomial L((size_t)m);
        bool any = false;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                L = Monomial::lcm(L, gens[i]);
                any = true;
            }
        long long dd = d - (long long)L.deg();
        long long cnt = binom(dd + m - 1, m - 1);
        total += (__builtin_popcount(mask) % 2 == 0 ? cnt : -cnt);
        (void)any;
    }
    return total;
}

/// Krull dimension of k[x]/<gens> for a monomial ideal: the largest variable
/// subset S such that no generator is supported inside S.
inline unsigned monomial_dimension(const std::vector<Monomial>& gens, unsigned m) {
    unsigned best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool independent = true;
        for (auto& g : gens) {
            bool inside = true;
            for (unsigned v = 0; v < m; ++v)
                if (g.e[v] && !(mask & (1u << v))) { inside = false; break; }
            if (inside) { independent = false; break; }
        }
        if (independent) best = std::max(best, (unsigned)__builtin_popcount(mask));
    }
    return best;
}
}  // namespace detail_hilbert

/// From a degree-ordered Groebner basis: homogenize, verify the basis property,
/// and read off H(t) = d*t - p_a + 1 from the staircase of the leading ideal.
/// homog_var names the homogenizing variable (must be present in the ring and
/// absent from the basis polynomials).
template <class K>
HilbertCurveData homogenize_hilbert(const std::vector<Polynomial<K>>& gb, unsigned homog_var) {
    if (gb.empty()) throw std::invalid_argument("homogenize_hilbert: empty basis");
    const PolyRing<K>* ring = gb.front().ring();
    if (ring->ord.kind != OrderKind::degrevlex && ring->ord.kind != OrderKind::deglex)
        throw std::invalid_argument("homogenize_hilbert: needs a degree ordering");
    if (!is_groebner(gb))
        throw std::invalid_argument("homogenize_hilbert: input is not a Groebner basis");
    std::vector<Polynomial<K>> H;
    for (auto& g : gb) H.push_back(g.homogenize(homog_var));
    if (!is_groebner(H))
        throw std::invalid_argument("homogenize_hilbert: homogenization lost the basis property");

    unsigned m = (unsigned)ring->arity();
    std::vector<Monomial> lead;
    for (auto& h : H) lead.push_back(h.lm());
    // minimalize leads
    std::vector<Monomial> min;
    for (size_t i = 0; i < lead.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < lead.size(); ++j)
            if (i != j && lead[j].divides(lead[i]) && !(lead[j] == lead[i] && j > i)) red = true;
        if (!red) min.push_back(lead[i]);
    }

    unsigned dim = detail_hilbert::monomial_dimension(min, m);
    if (dim != 2)
        throw std::domain_error("homogenize_hilbert: leading ideal is not a projective curve (cone dim " +
                                std::to_string(dim) + ")");

    long long d0 = 1;
    for (auto& g : min) d0 = std::max<long long>(d0, g.deg());
    d0 += (long long)m;  // safely past the staircase irregularity
    long long h0 = detail_hilbert::staircase_count(min, m, d0);
    long long h1 = detail_hilbert::staircase_count(min, m, d0 + 1);
    long long slope = h1 - h0;
    long long intercept = h0 - slope * d0;
    for (int extra = 2; extra <= 5; ++extra) {
        long long v = detail_hilbert::staircase_count(min, m, d0 + extra);
        if (v != slope * (d0 + extra) + intercept)
            throw std::domain_error("homogenize_hilbert: Hilbert function not eventually linear");
    }
    HilbertCurveData out;
    out.slope = (long)slope;
    out.intercept = (long)intercept;
    out.degree = (long)slope;
    out.arith_genus = (long)(1 - intercept);
    return out;
}

}  // namespace qengel::poly
