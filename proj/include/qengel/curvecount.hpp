#pragma once

// Point counting for plane curves over finite fields (per-fiber root counting
// via gcd(f, X^q - X), with brute force as cross-check) and verification of the
// PSL(2) witness tables.

#include <array>
#include <chrono>
#include <string>
#include <vector>

#include "qengel/assets.hpp"
#include "qengel/gf.hpp"
#include "qengel/matgroup.hpp"
#include "qengel/parallel.hpp"
#include "qengel/poly.hpp"

namespace qengel::vty {

using gf::FieldElement;
using gf::FieldRef;

struct CountRecord {
    std::string variety;
    gf::u64 p = 0;
    unsigned k = 0;
    gf::u64 count = 0;
    std::string method;
    double elapsed_s = 0;
    bool partial = false;  // a resource cap was hit; count is a certified lower bound
};

// --- dense univariate arithmetic over a FieldElement domain -------------------

using UPoly = std::vector<FieldElement>;  // coefficient of X^i at index i

inline void utrim(UPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}
inline int udeg(const UPoly& f) { return (int)f.size() - 1; }

inline UPoly umul(const UPoly& a, const UPoly& b, const FieldRef& F) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, FieldElement::zero(F));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    utrim(r);
    return r;
}

inline UPoly umod(UPoly a, const UPoly& f, const FieldRef& F) {
    utrim(a);
    FieldElement li = f.back().inv();
    while ((int)a.size() >= (int)f.size()) {
        FieldElement c = a.back() * li;
        size_t off = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) a[off + i] = a[off + i] - c * f[i];
        utrim(a);
    }
    return a;
}

inline UPoly ugcd(UPoly a, UPoly b, const FieldRef& F) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = umod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// X^q mod f by square-and-multiply; q is the field order.
inline UPoly upow_xq(const UPoly& f, gf::u64 q, const FieldRef& F) {
    UPoly x = {FieldElement::zero(F), FieldElement::one(F)};
    UPoly r = {FieldElement::one(F)};
    UPoly base = umod(x, f, F);
    while (q) {
        if (q & 1) r = umod(umul(r, base, F), f, F);
        q >>= 1;
        if (q) base = umod(umul(base, base, F), f, F);
    }
    return r;
}

/// Number of distinct roots of f in the field: deg gcd(f, X^q - X).
inline unsigned count_roots(const UPoly& f_in, const FieldRef& F) {
    UPoly f = f_in;
    utrim(f);
    if (f.empty()) throw std::invalid_argument("count_roots: zero polynomial");
    if (udeg(f) == 0) return 0;
    gf::u64 q = F->order_u64();
    if (q <= 64) {  // direct scan beats the gcd machinery for tiny fields
        unsigned n = 0;
        for (gf::u64 i = 0; i < q; ++i) {
            FieldElement x = FieldElement::from_index(F, i);
            FieldElement acc = FieldElement::zero(F);
            for (size_t d = f.size(); d-- > 0;) acc = acc * x + f[d];
            if (acc.is_zero()) ++n;
        }
        return n;
    }
    UPoly xq = upow_xq(f, q, F);
    // xq - x
    UPoly diff = xq;
    if (diff.size() < 2) diff.resize(2, FieldElement::zero(F));
    diff[1] = diff[1] - FieldElement::one(F);
    utrim(diff);
    if (diff.empty()) return (unsigned)udeg(f);  // f splits with distinct roots <= deg
    UPoly g = ugcd(f, diff, F);
    return (unsigned)udeg(g);
}

// --- plane curve counting -------------------------------------------------------

/// Maps an exact-rational coefficient into the field (denominator must be 1-free
/// only in the sense of being invertible mod p; integers reduce directly).
inline FieldElement to_field(const poly::Rat& c, const FieldRef& F) {
    mpz_class num = c.v.get_num(), den = c.v.get_den();
    mpz_class p((unsigned long)F->p);
    mpz_class nr = num % p;
    if (nr < 0) nr += p;
    mpz_class dr = den % p;
    if (dr == 0) throw std::domain_error("coefficient denominator vanishes in field");
    FieldElement n(F, nr.get_ui());
    FieldElement d(F, dr.get_ui());
    return n * d.inv();
}
inline FieldElement to_field(const poly::Fp& c, const FieldRef& F) {
    if (c.p != F->p) throw std::invalid_argument("coefficient characteristic mismatch");
    return FieldElement(F, c.v);
}

/// A(F_q) = #{(t,b) : P(t,b) = 0}.  Method "fiber": for each t, count roots of
/// the b-specialization via gcd with X^q - X.  Method "brute": full scan.
/// min_count > 0 stops the fiber scan once that many points are found and
/// marks the record partial (a certified lower bound).
template <class K>
CountRecord count_plane_curve(const poly::Polynomial<K>& P, const FieldRef& F,
                              const std::string& method = "fiber", unsigned jobs = 1,
                              gf::u64 min_count = 0) {
    if (P.is_zero()) throw std::invalid_argument("count_plane_curve: zero polynomial");
    const auto* ring = P.ring();
    int ti = ring->var_index("t"), bi = ring->var_index("b");
    if (ti < 0 || bi < 0) throw std::invalid_argument("count_plane_curve: ring needs t and b");
    for (size_t v = 0; v < ring->arity(); ++v)
        if ((int)v != ti && (int)v != bi && P.deg_in((unsigned)v))
            throw std::invalid_argument("count_plane_curve: polynomial not bivariate in (t,b)");
    auto t0 = std::chrono::steady_clock::now();
    gf::u64 q = F->order_u64();
    unsigned db = P.deg_in((unsigned)bi);
    CountRecord rec;
    rec.variety = "plane-curve";
    rec.p = F->p;
    rec.k = F->k;
    rec.method = method;

    if (method == "brute") {
        if (q > (1u << 12)) throw std::invalid_argument("brute plane count capped at q <= 4096");
        rec.count = par::sum_over_range<gf::u64>(q, jobs, 0, [&](gf::u64 lo, gf::u64 hi) {
            gf::u64 n = 0;
            for (gf::u64 it = lo; it < hi; ++it) {
                FieldElement t = FieldElement::from_index(F, it);
                UPoly fb(db + 1, FieldElement::zero(F));
                for (auto& tm : P.terms()) {
                    FieldElement v = to_field(tm.c, F);
                    for (unsigned e = 0; e < tm.m.e[ti]; ++e) v = v * t;
                    fb[tm.m.e[bi]] = fb[tm.m.e[bi]] + v;
                }
                for (gf::u64 ib = 0; ib < q; ++ib) {
                    FieldElement b = FieldElement::from_index(F, ib);
                    FieldElement acc = FieldElement::zero(F);
                    for (size_t d = fb.size(); d-- > 0;) acc = acc * b + fb[d];
                    if (acc.is_zero()) ++n;
                }
            }
            return n;
        });
    } else if (method == "fiber") {
        if (min_count > 0) {
            // sequential early-stopping scan; the count is a lower bound
            gf::u64 n = 0, it = 0;
            for (; it < q && n < min_count; ++it) {
                FieldElement t = FieldElement::from_index(F, it);
                UPoly fb(db + 1, FieldElement::zero(F));
                for (auto& tm : P.terms()) {
                    FieldElement v = to_field(tm.c, F);
                    for (unsigned e = 0; e < tm.m.e[ti]; ++e) v = v * t;
                    fb[tm.m.e[bi]] = fb[tm.m.e[bi]] + v;
                }
                utrim(fb);
                if (fb.empty()) n += q;
                else if (udeg(fb) == 0) continue;
                else n += count_roots(fb, F);
            }
            rec.count = n;
            rec.partial = (it < q);
            rec.method = "fiber-partial";
            rec.elapsed_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return rec;
        }
        rec.count = par::sum_over_range<gf::u64>(q, jobs, 0, [&](gf::u64 lo, gf::u64 hi) {
            gf::u64 n = 0;
            for (gf::u64 it = lo; it < hi; ++it) {
                FieldElement t = FieldElement::from_index(F, it);
                UPoly fb(db + 1, FieldElement::zero(F));
                for (auto& tm : P.terms()) {
                    FieldElement v = to_field(tm.c, F);
                    for (unsigned e = 0; e < tm.m.e[ti]; ++e) v = v * t;
                    fb[tm.m.e[bi]] = fb[tm.m.e[bi]] + v;
                }
                utrim(fb);
                if (fb.empty()) n += q;  // identically zero fiber
                else if (udeg(fb) == 0) continue;
                else n += count_roots(fb, F);
            }
            return n;
        });
    } else {
        throw std::invalid_argument("count_plane_curve: unknown method " + method);
    }
    rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

// --- PSL(2) witness verification --------------------------------------------------

struct WitnessReport {
    bool valid = false;
    bool on_curve = false;
    bool nontrivial = false;     // u1 != 1 projectively
    bool equation_holds = false; // u1 = u2 projectively
    std::string validated_order; // coordinate assignment that put the point on C
    std::string generator;       // generator of F_q* used for symbolic coordinates
    std::string note;
};

/// Checks one witness row: the point lies on C (all four curve generators vanish)
/// under the declared (c,b,t) order (other permutations tried and logged), and
/// x(t), y(b,c) solve u1 = u2 projectively with u1 != 1.
template <class K>
WitnessReport verify_psl2_witness(const std::vector<poly::Polynomial<K>>& curve_gens,
                                  const FieldRef& F, const std::array<std::string, 3>& coords) {
    WitnessReport rep;
    static const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    static const char* names[6] = {"(c,b,t)", "(c,t,b)", "(b,c,t)", "(t,c,b)", "(b,t,c)", "(t,b,c)"};

    // candidate interpretations of the coordinate expressions
    std::vector<std::pair<std::string, std::array<FieldElement, 3>>> candidates;
    bool symbolic = false;
    for (auto& c : coords)
        if (c.find('a') != std::string::npos) symbolic = true;
    if (!symbolic) {
        std::array<FieldElement, 3> pt = {gf::parse_element(F, coords[0]),
                                          gf::parse_element(F, coords[1]),
                                          gf::parse_element(F, coords[2])};
        candidates.push_back({"", pt});
    } else {
        for (gf::u64 i = 2; i < F->order_u64(); ++i) {
            FieldElement g = FieldElement::from_index(F, i);
            if (!g.is_primitive()) continue;
            std::array<FieldElement, 3> pt;
            for (int j = 0; j < 3; ++j) {
                // substitute the generator for the symbol a
                std::string expr = coords[j];
                if (expr.find('a') == std::string::npos) {
                    pt[j] = gf::parse_element(F, expr);
                } else if (expr == "a") {
                    pt[j] = g;
                } else if (expr.rfind("a^", 0) == 0) {
                    pt[j] = g.pow(std::stoull(expr.substr(2)));
                } else {
                    throw std::invalid_argument("witness coordinate syntax: " + expr);
                }
            }
            candidates.push_back({g.str(), pt});
        }
    }

    for (auto& [gen, pt] : candidates) {
        for (size_t pi = 0; pi < perms.size(); ++pi) {
            // assignment: ring variable order is (c, b, t)
            std::vector<FieldElement> point = {pt[perms[pi][0]], pt[perms[pi][1]], pt[perms[pi][2]]};
            bool on = true;
            for (auto& g : curve_gens) {
                FieldElement acc = FieldElement::zero(F);
                for (auto& tm : g.terms()) {
                    FieldElement v = to_field(tm.c, F);
                    for (size_t vi = 0; vi < 3; ++vi)
                        for (unsigned e = 0; e < tm.m.e[vi]; ++e) v = v * point[vi];
                    acc = acc + v;
                }
                if (!acc.is_zero()) { on = false; break; }
            }
            if (!on) continue;
            rep.on_curve = true;
            rep.validated_order = names[pi];
            rep.generator = gen;
            FieldElement c = point[0], b = point[1], t = point[2];
            auto [x, y] = mats::psl2_gens(t, b, c);
            mats::MatrixElement u1 = mats::quasi_engel_eval(words::canonical_w(), x, y, 1);
            mats::MatrixElement u2 = mats::quasi_engel_eval(words::canonical_w(), x, y, 2);
            rep.nontrivial = !mats::projectively_identity(u1);
            rep.equation_holds = mats::projective_eq(u1, u2);
            rep.valid = rep.nontrivial && rep.equation_holds;
            if (rep.valid) return rep;
        }
    }
    if (!rep.on_curve) rep.note = "no coordinate order places the point on the curve";
    return rep;
}

}  // namespace qengel::vty
