#pragma once

// The screening experiment: for every freely reduced initial word w up to a
// length bound, count nontrivial solutions of u_1 = u_2 in PSL(2,p) over a
// prime list by enumerating (t,b,c) triples, and flag the words that have
// solutions for every tested prime.

#include <cstdint>
#include <string>
#include <vector>

#include "qengel/parallel.hpp"
#include "qengel/words.hpp"

namespace qengel::screen {

struct ScreeningReport {
    words::FreeWord word;
    std::vector<std::uint64_t> primes;
    std::vector<std::uint64_t> counts;  // nontrivial solutions per prime
    bool flagged = false;               // nontrivial solutions for every tested prime
};

namespace detail {
// 2x2 matrices over F_p in plain machine words
struct M2 {
    std::int64_t a, b, c, d;
};
inline M2 mul(const M2& x, const M2& y, std::int64_t p) {
    return {(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p,
            (x.c * y.a + x.d * y.c) % p, (x.c * y.b + x.d * y.d) % p};
}
inline bool proj_eq(const M2& x, const M2& y, std::int64_t p) {
    // x = y or x = -y (SL(2) representatives)
    bool plus = (x.a - y.a) % p == 0 && (x.b - y.b) % p == 0 && (x.c - y.c) % p == 0 &&
                (x.d - y.d) % p == 0;
    if (plus) return true;
    return (x.a + y.a) % p == 0 && (x.b + y.b) % p == 0 && (x.c + y.c) % p == 0 &&
           (x.d + y.d) % p == 0;
}
inline bool proj_identity(const M2& x, std::int64_t p) {
    return proj_eq(x, {1, 0, 0, 1}, p);
}

/// Counts (t,b,c) with u_1(x,y) = u_2(x,y) projectively and u_1 != 1.
inline std::uint64_t count_word(const words::FreeWord& w, std::uint64_t p_in, unsigned jobs) {
    std::int64_t p = (std::int64_t)p_in;
    return par::sum_over_range<std::uint64_t>(p_in, jobs, 0, [&, p](std::uint64_t lo,
                                                                    std::uint64_t hi) {
        std::uint64_t n = 0;
        for (std::int64_t t = (std::int64_t)lo; t < (std::int64_t)hi; ++t) {
            M2 X = {t % p, p - 1, 1, 0};
            M2 Xi = {0, 1, p - 1, t % p};
            for (std::int64_t b = 0; b < p; ++b)
                for (std::int64_t c = 0; c < p; ++c) {
                    M2 Y = {1, b, c, (1 + b * c) % p};
                    M2 Yi = {(1 + b * c) % p, (p - b % p) % p, (p - c % p) % p, 1};
                    M2 u = {1, 0, 0, 1};
                    for (auto l : w.letters()) {
                        switch (l) {
                            case +1: u = mul(u, X, p); break;
                            case -1: u = mul(u, Xi, p); break;
                            case +2: u = mul(u, Y, p); break;
                            case -2: u = mul(u, Yi, p); break;
                        }
                    }
                    if (proj_identity(u, p)) continue;  // trivial solution
                    // u2 = [X u X^-1, Y u Y^-1]; inverses of conjugates via
                    // adjugate (entries of u have det 1)
                    M2 ui = {u.d, (p - u.b % p) % p, (p - u.c % p) % p, u.a};
                    M2 A = mul(mul(X, u, p), Xi, p);
                    M2 Ai = mul(mul(X, ui, p), Xi, p);
                    M2 B = mul(mul(Y, u, p), Yi, p);
                    M2 Bi = mul(mul(Y, ui, p), Yi, p);
                    M2 u2 = mul(mul(A, B, p), mul(Ai, Bi, p), p);
                    if (proj_eq(u, u2, p)) ++n;
                }
        }
        return n;
    });
}
}  // namespace detail

/// Screens all reduced words of length <= max_length over the prime list.
inline std::vector<ScreeningReport> screen_words(unsigned max_length,
                                                 const std::vector<std::uint64_t>& primes,
                                                 unsigned jobs = 1, bool flagged_only = false) {
    for (auto p : primes)
        if (p < 5) throw std::invalid_argument("screen_words: primes must be >= 5");
    std::vector<ScreeningReport> out;
    for (auto& w : words::enumerate_initial_words(max_length)) {
        ScreeningReport rep;
        rep.word = w;
        rep.primes = primes;
        rep.flagged = true;
        for (auto p : primes) {
            std::uint64_t n = detail::count_word(w, p, jobs);
            rep.counts.push_back(n);
            if (n == 0) rep.flagged = false;
        }
        if (!flagged_only || rep.flagged) out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace qengel::screen
