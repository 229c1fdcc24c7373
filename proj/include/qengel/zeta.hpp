#pragma once

// The zeta series of the operator alpha, Z(T) = exp(-sum N_n/n T^n), as an
// exact rational power series, and the projective boundary check for the
// appendix plane curve.

#include <gmpxx.h>

#include <vector>

#include "qengel/poly.hpp"

namespace qengel::vty {

/// Coefficients [T^0 .. T^m] of exp(-sum_{n=1}^{len} N_n/n T^n).
inline std::vector<mpq_class> zeta_series(const std::vector<long>& counts, unsigned truncation) {
    if (truncation > counts.size())
        throw std::invalid_argument("zeta_series: truncation exceeds available counts");
    // S(T) = -sum N_n/n T^n ; Z' = S' Z gives z_k = (1/k) sum_{j=1..k} j s_j z_{k-j}
    std::vector<mpq_class> s(truncation + 1, 0), z(truncation + 1, 0);
    for (unsigned n = 1; n <= truncation; ++n) s[n] = mpq_class(-counts[n - 1], n);
    z[0] = 1;
    for (unsigned k = 1; k <= truncation; ++k) {
        mpq_class acc = 0;
        for (unsigned j = 1; j <= k; ++j) acc += mpq_class(j) * s[j] * z[k - j];
        z[k] = acc / k;
        z[k].canonicalize();
    }
    return z;
}

struct BoundaryReport {
    bool homogenization_matches = false;  // Pbar is the degree-7 homogenization of P
    bool z0_identity = false;             // Pbar(t,b,0) = -b^2 t^4 (b+t)
    bool three_points_every_p = false;    // the z=0 locus has exactly 3 projective classes
    bool char2_point = false;             // (1:1:0) lies on the curve over GF(2)
};

/// Symbolic and small-field checks for the boundary of the appendix curve.
/// P and Pbar live in a ring with variables (t, b, z).
inline BoundaryReport projective_boundary_check(const poly::Polynomial<poly::Rat>& P,
                                                const poly::Polynomial<poly::Rat>& Pbar) {
    using poly::Polynomial;
    using poly::Rat;
    BoundaryReport rep;
    const auto* ring = P.ring();
    int zt = ring->var_index("z"), tt = ring->var_index("t"), bt = ring->var_index("b");
    if (zt < 0 || tt < 0 || bt < 0)
        throw std::invalid_argument("projective_boundary_check: ring must be (t,b,z)");

    rep.homogenization_matches = (P.homogenize((unsigned)zt) == Pbar);

    Polynomial<Rat> at_infinity = Pbar.substitute((unsigned)zt, Polynomial<Rat>(ring));
    Polynomial<Rat> target = poly::parse_poly(ring, "-b^2*t^4*(b+t)");
    rep.z0_identity = (at_infinity == target);

    // boundary points over GF(p): classes (1:s:0) for s in F_p, plus (0:1:0)
    rep.three_points_every_p = true;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
        unsigned zeros = 0;
        bool has11 = false;
        auto eval_ts = [&](long tv, long bv) {
            mpz_class acc = 0;
            for (auto& tm : at_infinity.terms()) {
                mpz_class v = tm.c.v.get_num();
                for (unsigned e = 0; e < tm.m.e[tt]; ++e) v *= tv;
                for (unsigned e = 0; e < tm.m.e[bt]; ++e) v *= bv;
                acc += v;
            }
            mpz_class r = acc % (long)p;
            return r == 0;
        };
        for (unsigned long s = 0; s < p; ++s)
            if (eval_ts(1, (long)s)) {
                ++zeros;
                if (s == 1) has11 = true;
            }
        if (eval_ts(0, 1)) ++zeros;
        if (zeros != 3) rep.three_points_every_p = false;
        if (p == 2) rep.char2_point = has11;
    }
    return rep;
}

}  // namespace qengel::vty
