#pragma once

// Exact bound arithmetic: Hasse-Weil lower bounds and thresholds, the
// Lefschetz-type fixpoint bound 2^n - b1*2^(3n/4) - b2*2^(n/2), the
// Adolphson-Sperber Euler-characteristic bound, and genus arithmetic.
// Square roots and fractional powers of two are compared by repeated squaring
// of integers; no floating point is involved in any decision.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace qengel::vty {

struct BoundReport {
    std::string name;
    std::map<std::string, mpz_class> inputs;
    bool positive = false;       // lower bound is strictly positive
    mpz_class floor_value;       // integer floor of the bound value
};

/// q + 1 - 2*p_a*sqrt(q) - d > 0, decided exactly:
///   q + 1 - d > 2*p_a*sqrt(q)  <=>  (q + 1 - d)^2 > 4*p_a^2*q  (when q+1-d > 0).
inline bool hasse_weil_positive(const mpz_class& q, const mpz_class& p_a, const mpz_class& d) {
    mpz_class lhs = q + 1 - d;
    if (lhs <= 0) return false;
    return lhs * lhs > 4 * p_a * p_a * q;
}

inline BoundReport hasse_weil(const mpz_class& q, const mpz_class& p_a, const mpz_class& d) {
    BoundReport r;
    r.name = "hasse-weil";
    r.inputs = {{"q", q}, {"p_a", p_a}, {"d", d}};
    r.positive = hasse_weil_positive(q, p_a, d);
    // floor(q + 1 - d - 2 p_a sqrt(q))
    mpz_class s = sqrt(4 * p_a * p_a * q);           // floor of 2 p_a sqrt(q)
    mpz_class rem = 4 * p_a * p_a * q - s * s;
    mpz_class ceil_s = (rem == 0) ? s : s + 1;       // ceil of 2 p_a sqrt(q)
    r.floor_value = q + 1 - d - ceil_s;
    return r;
}

/// Least integer q >= 2 with a strictly positive Hasse-Weil lower bound.
inline mpz_class hw_threshold(const mpz_class& p_a, const mpz_class& d) {
    // bound grows monotonically beyond q = (2 p_a)^2; scan from 2
    for (mpz_class q = 2;; ++q)
        if (hasse_weil_positive(q, p_a, d)) return q;
}

/// 2^n - b1*2^(3n/4) - b2*2^(n/2) > 0, decided exactly:
/// with L = 2^(n/2) - b2 (requires 2^n > b2^2), square once more:
///   (2^n + b2^2)^2 > (2 b2 + b1^2)^2 * 2^n.
inline bool lefschetz_positive(unsigned n, const mpz_class& b1, const mpz_class& b2) {
    mpz_class q = mpz_class(1) << n;  // 2^n
    if (q <= b2 * b2) return false;   // 2^(n/2) <= b2
    mpz_class lhs = q + b2 * b2;
    mpz_class rhs = (2 * b2 + b1 * b1);
    return lhs * lhs > rhs * rhs * q;
}

inline BoundReport lefschetz_bound(unsigned n, const mpz_class& b1, const mpz_class& b2) {
    BoundReport r;
    r.name = "lefschetz";
    r.inputs = {{"n", n}, {"b1", b1}, {"b2", b2}};
    r.positive = lefschetz_positive(n, b1, b2);
    // floor(2^n - b1 2^(3n/4) - b2 2^(n/2)) via scaled integer sqrt:
    // sqrt(2^n) and 2^(3n/4) = sqrt(sqrt(2^(3n))) with 2^-S scaling
    const unsigned S = 64;  // fixed-point fractional bits
    mpz_class t34 = sqrt(sqrt(mpz_class(1) << (3 * n + 4 * S)));  // 2^(3n/4 + S) floor
    mpz_class t12 = sqrt(mpz_class(1) << (n + 2 * S));            // 2^(n/2 + S) floor
    mpz_class scaled = (mpz_class(1) << (n + S)) - b1 * t34 - b2 * t12;
    mpz_class fv = scaled >> S;
    r.floor_value = fv;
    return r;
}

/// Least odd n with a strictly positive Lefschetz bound (monotone beyond it).
inline unsigned lefschetz_threshold(const mpz_class& b1, const mpz_class& b2) {
    for (unsigned n = 1;; n += 2)
        if (lefschetz_positive(n, b1, b2)) return n;
}

/// 2^r * D_{N,r}(1, 1+d, ..., 1+d): D is the complete homogeneous sum of degree
/// N in r+1 arguments with unit coefficients.
inline mpz_class adolphson_sperber(unsigned N, unsigned r, unsigned d) {
    if (N < 1 || r < 1) throw std::invalid_argument("adolphson_sperber: N, r >= 1");
    // sum over w0 + w1 + ... + wr = N of (1+d)^(N - w0); the number of
    // compositions of s = N - w0 into r parts is C(s + r - 1, r - 1)
    mpz_class total = 0;
    mpz_class base = d + 1;
    for (unsigned s = 0; s <= N; ++s) {
        mpz_class ways;
        mpz_bin_uiui(ways.get_mpz_t(), s + r - 1, r - 1);
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), s);
        total += ways * pw;
    }
    return total << r;  // 2^r
}

/// Plane-curve genus from the singularity deltas: (d-1)(d-2)/2 - sum(delta).
inline long genus_from_singularities(long d, const std::vector<long>& deltas) {
    if (d < 1) throw std::invalid_argument("genus: degree >= 1");
    long g = (d - 1) * (d - 2) / 2;
    for (long dl : deltas) {
        if (dl < 0) throw std::invalid_argument("genus: delta >= 0");
        g -= dl;
    }
    if (g < 0) throw std::domain_error("genus: negative result (inconsistent delta data)");
    return g;
}

/// |A - (q+1)| <= 2*g*sqrt(q) + slack, decided exactly.
inline bool hasse_weil_window(const mpz_class& count, const mpz_class& q, const mpz_class& g,
                              const mpz_class& slack) {
    mpz_class dev = count - (q + 1);
    if (dev < 0) dev = -dev;
    if (dev <= slack) return true;
    mpz_class lhs = dev - slack;  // must be <= 2 g sqrt(q)
    return lhs * lhs <= 4 * g * g * q;
}

}  // namespace qengel::vty
