#pragma once

// The universal Suzuki variety V in 8-space over GF(2), its irreducible
// surface V' = V(J), the operator alpha, and all the point/fixpoint counts:
//   - #V_n(F_{2^n}) by brute matrix-equation enumeration (n <= 5) or the
//     theta-restricted ideal sweep (n = 7),
//   - fixpoint numbers N_n of alpha^n on V' (brute for small n, a J3-based
//     per-fiber solver at stretch scale),
//   - singular-locus fixpoint freeness, V = W, and fixpoint witness checks.
// All counts are exact integers; enumeration parallelizes over disjoint
// coordinate ranges with order-independent aggregation.

#include <array>
#include <chrono>
#include <memory>
#include <optional>

#include "qengel/assets.hpp"
#include "qengel/curvecount.hpp"
#include "qengel/gf.hpp"
#include "qengel/parallel.hpp"
#include "qengel/poly.hpp"

namespace qengel::vty {

using gf::Gf2Table;
using gf::u64;
using Pt8 = std::array<u64, 8>;

inline constexpr const char* kSlotNames[8] = {"a", "b", "c", "d", "v", "w", "x", "y"};

inline int slot_of(const std::string& name) {
    for (int i = 0; i < 8; ++i)
        if (name == kSlotNames[i]) return i;
    return -1;
}

/// GF(2)[a..y] polynomial compiled to slot-indexed exponent terms with field
/// coefficients (so partial specialization folds values into the coefficients).
struct GPoly {
    struct T {
        std::array<std::uint8_t, 8> e;
        u64 c;
    };
    std::vector<T> t;

    static GPoly compile(const poly::Polynomial<poly::Fp>& f) {
        const auto* ring = f.ring();
        std::array<int, 32> map{};
        GPoly g;
        std::vector<int> slot(ring->arity());
        for (size_t i = 0; i < ring->arity(); ++i) {
            slot[i] = slot_of(ring->vars[i]);
            if (slot[i] < 0) throw std::invalid_argument("GPoly: unknown variable " + ring->vars[i]);
        }
        for (auto& tm : f.terms()) {
            T t{};
            t.c = tm.c.v % 2;
            for (size_t i = 0; i < ring->arity(); ++i) t.e[slot[i]] += (std::uint8_t)tm.m.e[i];
            if (t.c) g.t.push_back(t);
        }
        (void)map;
        return g;
    }

    size_t size() const { return t.size(); }
    bool is_zero() const { return t.empty(); }
    unsigned deg_in(unsigned s) const {
        unsigned d = 0;
        for (auto& tm : t) d = std::max(d, (unsigned)tm.e[s]);
        return d;
    }
    bool uses(unsigned s) const { return deg_in(s) > 0; }

    u64 eval(const Gf2Table& F, const Pt8& p) const {
        u64 acc = 0;
        for (auto& tm : t) {
            u64 v = tm.c;
            for (unsigned s = 0; s < 8 && v; ++s) {
                unsigned e = tm.e[s];
                if (!e) continue;
                u64 b = p[s];
                u64 pw = 1;
                while (e) {
                    if (e & 1) pw = F.mul(pw, b);
                    e >>= 1;
                    if (e) b = F.sq(b);
                }
                v = F.mul(v, pw);
            }
            acc ^= v;
        }
        return acc;
    }

    GPoly specialize(const Gf2Table& F, unsigned s, u64 val) const {
        GPoly g;
        g.t.reserve(t.size());
        for (auto tm : t) {
            unsigned e = tm.e[s];
            if (e) {
                u64 b = val, pw = 1;
                while (e) {
                    if (e & 1) pw = F.mul(pw, b);
                    e >>= 1;
                    if (e) b = F.sq(b);
                }
                tm.c = F.mul(tm.c, pw);
                tm.e[s] = 0;
            }
            if (tm.c) g.t.push_back(tm);
        }
        g.merge();
        return g;
    }

    void merge() {
        std::sort(t.begin(), t.end(), [](const T& a, const T& b) { return a.e < b.e; });
        std::vector<T> out;
        for (auto& tm : t) {
            if (!out.empty() && out.back().e == tm.e) out.back().c ^= tm.c;
            else out.push_back(tm);
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const T& x) { return x.c == 0; }),
                  out.end());
        t = std::move(out);
    }
};

inline std::vector<GPoly> compile_system(const std::vector<poly::Polynomial<poly::Fp>>& polys) {
    std::vector<GPoly> out;
    for (auto& p : polys) out.push_back(GPoly::compile(p));
    return out;
}

/// Dense bivariate form for tight inner loops (degrees <= 9 per variable).
struct Dense2 {
    unsigned s1, s2;
    int d1 = 0, d2 = 0;
    std::array<std::array<u64, 10>, 10> c{};

    static Dense2 from(const GPoly& g, unsigned s1, unsigned s2) {
        Dense2 d{s1, s2};
        for (auto& tm : g.t) {
            for (unsigned s = 0; s < 8; ++s)
                if (s != s1 && s != s2 && tm.e[s])
                    throw std::invalid_argument("Dense2: residual variable");
            d.c[tm.e[s1]][tm.e[s2]] ^= tm.c;
            d.d1 = std::max(d.d1, (int)tm.e[s1]);
            d.d2 = std::max(d.d2, (int)tm.e[s2]);
        }
        return d;
    }
    u64 eval(const Gf2Table& F, u64 x1, u64 x2) const {
        u64 acc = 0;
        for (int i = d1; i >= 0; --i) {
            u64 row = 0;
            for (int j = d2; j >= 0; --j) row = F.mul(row, x2) ^ c[i][j];
            acc = F.mul(acc, x1) ^ row;
        }
        return acc;
    }
};

// --- alpha ---------------------------------------------------------------------

/// alpha: (a,b,c,d,v,w,x,y) -> (v,w,x,y,a^2,b^2,c^2,d^2); alpha^2 = Frobenius.
inline Pt8 alpha_apply(const Gf2Table& F, const Pt8& p) {
    return {p[4], p[5], p[6], p[7], F.sq(p[0]), F.sq(p[1]), F.sq(p[2]), F.sq(p[3])};
}

inline bool alpha_pow_fixes(const Gf2Table& F, const Pt8& p, unsigned n) {
    Pt8 q = p;
    for (unsigned i = 0; i < n; ++i) q = alpha_apply(F, q);
    return q == p;
}

// --- generic sweeps --------------------------------------------------------------

namespace detail_sweep {
/// Orders system generators cheapest-first for early exit; deterministic.
inline std::vector<GPoly> by_cost(std::vector<GPoly> sys) {
    std::stable_sort(sys.begin(), sys.end(),
                     [](const GPoly& a, const GPoly& b) { return a.size() < b.size(); });
    return sys;
}
}  // namespace detail_sweep

/// Counts (a,b,c,d) in F_{2^n}^4, n odd, with (v,w,x,y) = theta of them, on the
/// zero set of `system`; optionally collects the full 8-coordinate points.
inline std::vector<Pt8> theta_sweep_points(const std::vector<GPoly>& system_in, const Gf2Table& F,
                                           unsigned jobs) {
    auto system = detail_sweep::by_cost(system_in);
    u64 q = F.q();
    return par::collect_over_range<Pt8>(q, jobs, [&](u64 lo, u64 hi) {
        std::vector<Pt8> found;
        for (u64 a = lo; a < hi; ++a) {
            u64 v = F.theta(a);
            std::vector<GPoly> sa;
            sa.reserve(system.size());
            for (auto& g : system) sa.push_back(g.specialize(F, 0, a).specialize(F, 4, v));
            for (u64 c = 0; c < q; ++c) {
                u64 x = F.theta(c);
                std::vector<GPoly> sac;
                sac.reserve(sa.size());
                for (auto& g : sa) sac.push_back(g.specialize(F, 2, c).specialize(F, 6, x));
                bool dead = false;
                for (auto& g : sac)
                    if (!g.is_zero() && g.size() == 0) dead = true;
                if (dead) continue;
                for (u64 b = 0; b < q; ++b) {
                    u64 w = F.theta(b);
                    Dense2 first = Dense2::from(
                        sac[0].specialize(F, 1, b).specialize(F, 5, w), 3, 7);
                    for (u64 d = 0; d < q; ++d) {
                        u64 y = F.theta(d);
                        if (first.eval(F, d, y)) continue;
                        Pt8 pt = {a, b, c, d, v, w, x, y};
                        bool ok = true;
                        for (size_t gi = 1; gi < sac.size() && ok; ++gi)
                            ok = sac[gi].eval(F, pt) == 0;
                        if (ok) found.push_back(pt);
                    }
                }
            }
        }
        return found;
    });
}

/// Full 8-coordinate sweep over F_{2^k}^8 on the zero set of `system`.
inline std::vector<Pt8> sweep8_points(const std::vector<GPoly>& system_in, const Gf2Table& F,
                                      unsigned jobs) {
    auto system = detail_sweep::by_cost(system_in);
    u64 q = F.q();
    if (q > 16) throw std::invalid_argument("sweep8_points: brute 8-sweep capped at k <= 4");
    return par::collect_over_range<Pt8>(q, jobs, [&](u64 lo, u64 hi) {
        std::vector<Pt8> found;
        for (u64 a = lo; a < hi; ++a) {
            std::vector<GPoly> sa;
            for (auto& g : system) sa.push_back(g.specialize(F, 0, a));
            for (u64 c = 0; c < q; ++c) {
                std::vector<GPoly> sc;
                for (auto& g : sa) sc.push_back(g.specialize(F, 2, c));
                for (u64 v = 0; v < q; ++v) {
                    std::vector<GPoly> sv;
                    for (auto& g : sc) sv.push_back(g.specialize(F, 4, v));
                    for (u64 x = 0; x < q; ++x) {
                        std::vector<GPoly> sx;
                        for (auto& g : sv) sx.push_back(g.specialize(F, 6, x));
                        bool dead = false;
                        for (auto& g : sx)
                            if (!g.is_zero() && g.size() == 0) dead = true;
                        if (dead) continue;
                        for (u64 b = 0; b < q; ++b) {
                            for (u64 w = 0; w < q; ++w) {
                                Dense2 first = Dense2::from(
                                    sx[0].specialize(F, 1, b).specialize(F, 5, w), 3, 7);
                                for (u64 d = 0; d < q; ++d)
                                    for (u64 y = 0; y < q; ++y) {
                                        if (first.eval(F, d, y)) continue;
                                        Pt8 pt = {a, b, c, d, v, w, x, y};
                                        bool ok = true;
                                        for (size_t gi = 1; gi < sx.size() && ok; ++gi)
                                            ok = sx[gi].eval(F, pt) == 0;
                                        if (ok) found.push_back(pt);
                                    }
                            }
                        }
                    }
                }
            }
        }
        return found;
    });
}

// --- brute matrix-equation count of V_n -------------------------------------------

namespace detail_mat {
using M4 = std::array<u64, 16>;

inline M4 mul(const Gf2Table& F, const M4& A, const M4& B) {
    M4 R{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            u64 a = A[i * 4 + k];
            if (!a) continue;
            for (int j = 0; j < 4; ++j) R[i * 4 + j] ^= F.mul(a, B[k * 4 + j]);
        }
    return R;
}
inline M4 ident() {
    M4 I{};
    I[0] = I[5] = I[10] = I[15] = 1;
    return I;
}
/// Inverse of a unipotent lower-triangular matrix: I + N + N^2 + N^3.
inline M4 unipotent_inv(const Gf2Table& F, const M4& U) {
    M4 N = U;
    N[0] ^= 1; N[5] ^= 1; N[10] ^= 1; N[15] ^= 1;
    M4 N2 = mul(F, N, N), N3 = mul(F, N2, N);
    M4 R = ident();
    for (int i = 0; i < 16; ++i) R[i] ^= N[i] ^ N2[i] ^ N3[i];
    return R;
}
inline M4 suzuki_T() {
    M4 T{};
    T[3] = T[6] = T[9] = T[12] = 1;
    return T;
}
inline M4 suzuki_U(const Gf2Table& F, u64 a, u64 b) {
    u64 pa = F.theta(a), pb = F.theta(b);
    M4 U{};
    U[0] = U[5] = U[10] = U[15] = 1;
    U[4] = a;
    U[8] = F.mul(a, pa) ^ b;
    U[9] = pa;
    U[12] = F.mul(F.sq(a), pa) ^ F.mul(a, b) ^ pb;
    U[13] = b;
    U[14] = a;
    return U;
}
}  // namespace detail_mat

/// #V_n(F_{2^n}) by enumerating (a,b,c,d) and testing the 4x4 matrix equation
///   x^-1 y x^-1 y^-1 x^2 = y x^-2 y^-1 x y^-1  with x = T U(a,b), y = T U(c,d).
inline CountRecord suzuki_count_matrix_brute(const Gf2Table& F, unsigned jobs) {
    using namespace detail_mat;
    auto t0 = std::chrono::steady_clock::now();
    u64 q = F.q();
    if (q > 64) throw std::invalid_argument("matrix brute count capped at n <= 6");
    struct Pre {
        M4 X, iX, X2, iX2;
    };
    std::vector<Pre> pre(q * q);
    M4 T = suzuki_T();
    for (u64 a = 0; a < q; ++a)
        for (u64 b = 0; b < q; ++b) {
            M4 U = suzuki_U(F, a, b);
            M4 X = mul(F, T, U);
            M4 iX = mul(F, unipotent_inv(F, U), T);  // (TU)^-1 = U^-1 T
            pre[a * q + b] = {X, iX, mul(F, X, X), mul(F, iX, iX)};
        }
    u64 count = par::sum_over_range<u64>(q * q, jobs, 0, [&](u64 lo, u64 hi) {
        u64 n = 0;
        for (u64 ab = lo; ab < hi; ++ab) {
            const Pre& px = pre[ab];
            for (u64 cd = 0; cd < q * q; ++cd) {
                const Pre& py = pre[cd];
                // lhs = iX Y iX iY X2 ; rhs = Y iX2 iY X iY
                M4 lhs = mul(F, mul(F, mul(F, mul(F, px.iX, py.X), px.iX), py.iX), px.X2);
                M4 rhs = mul(F, mul(F, mul(F, mul(F, py.X, px.iX2), py.iX), px.X), py.iX);
                if (lhs == rhs) ++n;
            }
        }
        return n;
    });
    CountRecord rec;
    rec.variety = "V_n";
    rec.p = 2;
    rec.k = F.spec()->k;
    rec.count = count;
    rec.method = "matrix-brute";
    rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

// --- F2-linear fiber solver --------------------------------------------------------

namespace detail_fiber {

/// Solves an F2-affine system: unknowns are the bit-vectors of the field values
/// in `slots` (theta-coupled slots filled from them), equations must evaluate
/// F2-affinely in those bits.  Returns all solutions as full points, or nullopt
/// if the solution space exceeds `cap`.
struct AffineSolver {
    const Gf2Table& F;
    std::vector<unsigned> slots;          // free slots, e.g. {1,3} for (b,d)
    std::vector<std::pair<unsigned, unsigned>> theta_links;  // (src, dst): pt[dst] = theta(pt[src])

    std::optional<std::vector<Pt8>> solve(const std::vector<const GPoly*>& eqs, Pt8 base,
                                          size_t cap) const {
        unsigned n = (unsigned)F.n();
        unsigned M = (unsigned)slots.size() * n;       // unknown bits
        unsigned R = (unsigned)eqs.size() * n;         // equation bits
        auto fill = [&](const std::vector<u64>& vals, Pt8& p) {
            for (size_t i = 0; i < slots.size(); ++i) p[slots[i]] = vals[i];
            for (auto& [s, d] : theta_links) p[d] = F.theta(p[s]);
        };
        auto image = [&](const std::vector<u64>& vals) {
            Pt8 p = base;
            fill(vals, p);
            std::vector<u64> out;
            for (auto* e : eqs) out.push_back(e->eval(F, p));
            return out;
        };
        std::vector<u64> zero(slots.size(), 0);
        std::vector<u64> offset = image(zero);
        // columns of the linear part
        std::vector<std::vector<u64>> col(M);
        for (unsigned m = 0; m < M; ++m) {
            std::vector<u64> v = zero;
            v[m / n] = (u64)1 << (m % n);
            col[m] = image(v);
            for (size_t i = 0; i < col[m].size(); ++i) col[m][i] ^= offset[i];
        }
        // Gaussian elimination over F2: rows = equation bits, as bitmasks of unknowns
        std::vector<std::pair<std::vector<u64>, int>> rows;  // (mask over M bits via u64 words, rhs bit)
        unsigned words = (M + 63) / 64;
        std::vector<std::vector<u64>> A(R, std::vector<u64>(words, 0));
        std::vector<int> rhs(R, 0);
        for (unsigned r = 0; r < R; ++r) {
            unsigned ei = r / n, bit = r % n;
            for (unsigned m = 0; m < M; ++m)
                if ((col[m][ei] >> bit) & 1) A[r][m / 64] |= (u64)1 << (m % 64);
            rhs[r] = (int)((offset[ei] >> bit) & 1);
        }
        std::vector<int> pivot_col;
        unsigned rank = 0;
        for (unsigned c = 0; c < M && rank < R; ++c) {
            unsigned sel = rank;
            while (sel < R && !((A[sel][c / 64] >> (c % 64)) & 1)) ++sel;
            if (sel == R) continue;
            std::swap(A[sel], A[rank]);
            std::swap(rhs[sel], rhs[rank]);
            for (unsigned r2 = 0; r2 < R; ++r2) {
                if (r2 != rank && ((A[r2][c / 64] >> (c % 64)) & 1)) {
                    for (unsigned wd = 0; wd < words; ++wd) A[r2][wd] ^= A[rank][wd];
                    rhs[r2] ^= rhs[rank];
                }
            }
            pivot_col.push_back((int)c);
            ++rank;
        }
        for (unsigned r = rank; r < R; ++r) {
            bool zero_row = true;
            for (unsigned wd = 0; wd < words; ++wd)
                if (A[r][wd]) zero_row = false;
            if (zero_row && rhs[r]) return std::vector<Pt8>{};  // inconsistent
        }
        unsigned freedom = M - rank;
        if (((size_t)1 << std::min(freedom, 63u)) > cap) return std::nullopt;
        std::vector<int> is_pivot(M, -1);
        for (unsigned r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = (int)r;
        std::vector<unsigned> free_cols;
        for (unsigned c = 0; c < M; ++c)
            if (is_pivot[c] < 0) free_cols.push_back(c);
        std::vector<Pt8> sols;
        for (u64 assign = 0; assign < ((u64)1 << freedom); ++assign) {
            std::vector<u64> vals(slots.size(), 0);
            auto setbit = [&](unsigned m, int v) {
                if (v) vals[m / n] |= (u64)1 << (m % n);
            };
            for (unsigned fi = 0; fi < freedom; ++fi) setbit(free_cols[fi], (int)((assign >> fi) & 1));
            for (unsigned r = 0; r < rank; ++r) {
                int v = rhs[r];
                for (unsigned fi = 0; fi < freedom; ++fi) {
                    unsigned c = free_cols[fi];
                    if ((A[r][c / 64] >> (c % 64)) & 1) v ^= (int)((assign >> fi) & 1);
                }
                setbit((unsigned)pivot_col[r], v);
            }
            Pt8 p = base;
            fill(vals, p);
            sols.push_back(p);
        }
        return sols;
    }
};

}  // namespace detail_fiber

// --- loaded system bundle ------------------------------------------------------------

struct SuzukiData {
    std::unique_ptr<poly::PolyRing<poly::Fp>> ring_iv, ring_j, ring_j3, ring_f, ring_s;
    std::vector<poly::Polynomial<poly::Fp>> IV, J, J3;
    std::vector<std::vector<poly::Polynomial<poly::Fp>>> S;  // S1..S6
    poly::Polynomial<poly::Fp> f;

    std::vector<GPoly> iv_c, j_c, j3_c;
    std::vector<std::vector<GPoly>> s_c;
    GPoly f_c;

    static SuzukiData load(const std::string& dir) {
        SuzukiData d;
        auto iv = assets::load_system(dir + "/suzuki/IV.txt");
        d.ring_iv = assets::ring_fp(iv, 2);
        d.IV = assets::system_polys(iv, "I", d.ring_iv.get());
        auto j = assets::load_system(dir + "/suzuki/J.txt");
        d.ring_j = assets::ring_fp(j, 2);
        d.J = assets::system_polys(j, "J", d.ring_j.get());
        auto j3 = assets::load_system(dir + "/suzuki/J3.txt");
        d.ring_j3 = assets::ring_fp(j3, 2);
        d.J3 = assets::system_polys(j3, "J3", d.ring_j3.get());
        auto ff = assets::load_system(dir + "/suzuki/f.txt");
        d.ring_f = assets::ring_fp(ff, 2);
        d.f = assets::system_polys(ff, "f", d.ring_f.get()).at(0);
        auto ss = assets::load_system(dir + "/suzuki/S1-S6.txt");
        d.ring_s = assets::ring_fp(ss, 2);
        for (int i = 1; i <= 6; ++i)
            d.S.push_back(assets::system_polys(ss, "S" + std::to_string(i), d.ring_s.get()));
        d.iv_c = compile_system(d.IV);
        d.j_c = compile_system(d.J);
        d.j3_c = compile_system(d.J3);
        for (auto& s : d.S) d.s_c.push_back(compile_system(s));
        d.f_c = GPoly::compile(d.f);
        return d;
    }
};

// --- the headline counts ------------------------------------------------------------

/// Fixpoints of alpha^n on V' for odd n by the theta-restricted sweep over J.
inline CountRecord fixpoint_count_odd_brute(const SuzukiData& D, unsigned n, unsigned jobs) {
    if (n % 2 == 0 || n > 20) throw std::invalid_argument("odd n <= 19 required");
    auto t0 = std::chrono::steady_clock::now();
    Gf2Table F(gf::field_make(2, n));
    auto pts = theta_sweep_points(D.j_c, F, jobs);
    CountRecord rec{"Vprime-fix", 2, n, pts.size(), "theta-brute", 0, false};
    rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

/// Fixpoints of alpha^(2k) on V' = #V'(F_{2^k}) by the full 8-sweep (k <= 4).
inline CountRecord fixpoint_count_even_brute(const SuzukiData& D, unsigned k, unsigned jobs) {
    auto t0 = std::chrono::steady_clock::now();
    Gf2Table F(gf::field_make(2, k));
    auto pts = sweep8_points(D.j_c, F, jobs);
    CountRecord rec{"Vprime-points", 2, k, pts.size(), "brute8", 0, false};
    rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

/// All V'(F_{2^k}) points via the J3 per-fiber cascade (regular fibers) plus an
/// F2-affine solve on the exceptional locus f(a,c) = 0.  Exact for k <= ~6.
inline std::vector<Pt8> vprime_points_per_fiber(const SuzukiData& D, const Gf2Table& F,
                                                unsigned jobs, bool* partial,
                                                size_t fiber_cap = (1u << 14)) {
    u64 q = F.q();
    const GPoly& j31 = D.j3_c[0];
    const GPoly& j32 = D.j3_c[1];
    const GPoly& j33 = D.j3_c[2];
    const GPoly& j34 = D.j3_c[3];
    const GPoly& j35 = D.j3_c[4];
    const GPoly& j36 = D.j3_c[5];
    bool hit_cap = false;

    auto pts = par::collect_over_range<Pt8>(q, jobs, [&](u64 lo, u64 hi) {
        std::vector<Pt8> found;
        for (u64 a = lo; a < hi; ++a) {
            GPoly fa = D.f_c.specialize(F, 0, a);
            for (u64 c = 0; c < q; ++c) {
                Pt8 base{};
                base[0] = a;
                base[2] = c;
                u64 fv = fa.specialize(F, 2, c).eval(F, base);
                if (fv != 0) {
                    // regular fiber: J3 cascade
                    GPoly g1 = j31.specialize(F, 0, a).specialize(F, 2, c);
                    for (u64 v = 0; v < q; ++v) {
                        if (g1.specialize(F, 4, v).eval(F, base)) continue;
                        GPoly g2 = j32.specialize(F, 0, a).specialize(F, 2, c).specialize(F, 4, v);
                        // x appears linearly on D(f); solve k1*x + k0 = 0
                        u64 k1 = 0, k0 = 0;
                        bool linear = true;
                        for (auto& tm : g2.t) {
                            if (tm.e[6] == 1) k1 ^= tm.c;
                            else if (tm.e[6] == 0) k0 ^= tm.c;
                            else linear = false;
                        }
                        if (!linear) throw std::logic_error("J3[2] not linear in x");
                        if (k1 == 0) continue;
                        u64 x = F.mul(k0, F.inv(k1));
                        // d: quadratic; scan roots
                        GPoly g3 = j33.specialize(F, 0, a).specialize(F, 2, c)
                                       .specialize(F, 4, v).specialize(F, 6, x);
                        Dense2 dq = Dense2::from(g3, 3, 7);
                        for (u64 d = 0; d < q; ++d) {
                            if (dq.eval(F, d, 0)) continue;
                            // b linear from J3[4]
                            GPoly g4 = j34.specialize(F, 0, a).specialize(F, 2, c)
                                           .specialize(F, 4, v).specialize(F, 6, x)
                                           .specialize(F, 3, d);
                            u64 b1 = 0, b0 = 0;
                            bool bad = false;
                            for (auto& tm : g4.t) {
                                if (tm.e[1] == 1) b1 ^= tm.c;
                                else if (tm.e[1] == 0) b0 ^= tm.c;
                                else bad = true;
                            }
                            if (bad || b1 == 0) continue;
                            u64 b = F.mul(b0, F.inv(b1));
                            // y from J3[5], w from J3[6]
                            GPoly g5 = j35.specialize(F, 0, a).specialize(F, 2, c)
                                           .specialize(F, 4, v).specialize(F, 6, x)
                                           .specialize(F, 3, d).specialize(F, 1, b);
                            u64 y1 = 0, y0 = 0;
                            for (auto& tm : g5.t) {
                                if (tm.e[7] == 1) y1 ^= tm.c;
                                else y0 ^= tm.c;
                            }
                            if (y1 == 0) continue;
                            u64 y = F.mul(y0, F.inv(y1));
                            GPoly g6 = j36.specialize(F, 0, a).specialize(F, 2, c)
                                           .specialize(F, 4, v).specialize(F, 6, x)
                                           .specialize(F, 3, d).specialize(F, 1, b)
                                           .specialize(F, 7, y);
                            u64 w1 = 0, w0 = 0;
                            for (auto& tm : g6.t) {
                                if (tm.e[5] == 1) w1 ^= tm.c;
                                else w0 ^= tm.c;
                            }
                            if (w1 == 0) continue;
                            u64 w = F.mul(w0, F.inv(w1));
                            Pt8 pt{a, b, c, d, v, w, x, y};
                            bool ok = true;
                            for (auto& g : D.j_c)
                                if (g.eval(F, pt)) { ok = false; break; }
                            if (ok) found.push_back(pt);
                        }
                    }
                } else {
                    // exceptional fiber: loop (v,x), F2-affine solve for (b,d,w,y).
                    // J[1],J[2],J[4],J[7],J[8],J[9] are affine in those unknowns
                    for (u64 v = 0; v < q; ++v)
                        for (u64 x = 0; x < q; ++x) {
                            std::vector<GPoly> eq;
                            for (int gi : {0, 1, 3, 6, 7, 8})
                                eq.push_back(D.j_c[gi].specialize(F, 0, a).specialize(F, 2, c)
                                                 .specialize(F, 4, v).specialize(F, 6, x));
                            std::vector<const GPoly*> eqp;
                            for (auto& e : eq) eqp.push_back(&e);
                            detail_fiber::AffineSolver solver{F, {1, 3, 5, 7}, {}};
                            Pt8 base2{a, 0, c, 0, v, 0, x, 0};
                            auto sols = solver.solve(eqp, base2, fiber_cap);
                            if (!sols) { hit_cap = true; continue; }
                            for (auto& pt : *sols) {
                                bool ok = true;
                                for (auto& g : D.j_c)
                                    if (g.eval(F, pt)) { ok = false; break; }
                                if (ok) found.push_back(pt);
                            }
                        }
                }
            }
        }
        return found;
    });
    if (partial) *partial = hit_cap;
    return pts;
}

/// Fixpoints of alpha^n on V' for odd stretch n via the per-fiber cascade with
/// theta-forced (v,x,w,y).
inline CountRecord fixpoint_count_odd_per_fiber(const SuzukiData& D, unsigned n, unsigned jobs,
                                                size_t fiber_cap = (1u << 14)) {
    if (n % 2 == 0) throw std::invalid_argument("odd n required");
    auto t0 = std::chrono::steady_clock::now();
    Gf2Table F(gf::field_make(2, n));
    u64 q = F.q();
    bool hit_cap = false;
    const GPoly& j31 = D.j3_c[0];
    const GPoly& j32 = D.j3_c[1];
    const GPoly& j33 = D.j3_c[2];

    u64 count = par::sum_over_range<u64>(q, jobs, 0, [&](u64 lo, u64 hi) {
        u64 cnt = 0;
        for (u64 a = lo; a < hi; ++a) {
            u64 v = F.theta(a);
            GPoly fa = D.f_c.specialize(F, 0, a);
            GPoly j31a = j31.specialize(F, 0, a).specialize(F, 4, v);
            for (u64 c = 0; c < q; ++c) {
                u64 x = F.theta(c);
                Pt8 base{a, 0, c, 0, v, 0, x, 0};
                u64 fv = fa.specialize(F, 2, c).eval(F, base);
                if (fv != 0) {
                    if (j31a.specialize(F, 2, c).eval(F, base)) continue;
                    if (j32.specialize(F, 0, a).specialize(F, 2, c).specialize(F, 4, v)
                            .specialize(F, 6, x).eval(F, base))
                        continue;
                    // d-quadratic from J3[3]; scan roots, then b, then checks
                    GPoly g3 = j33.specialize(F, 0, a).specialize(F, 2, c)
                                   .specialize(F, 4, v).specialize(F, 6, x);
                    Dense2 dq = Dense2::from(g3, 3, 7);
                    for (u64 d = 0; d < q; ++d) {
                        if (dq.eval(F, d, 0)) continue;
                        u64 y = F.theta(d);
                        GPoly g4 = D.j3_c[3].specialize(F, 0, a).specialize(F, 2, c)
                                       .specialize(F, 4, v).specialize(F, 6, x)
                                       .specialize(F, 3, d);
                        u64 b1 = 0, b0 = 0;
                        for (auto& tm : g4.t) {
                            if (tm.e[1] == 1) b1 ^= tm.c;
                            else b0 ^= tm.c;
                        }
                        if (b1 == 0) continue;
                        u64 b = F.mul(b0, F.inv(b1));
                        u64 w = F.theta(b);
                        Pt8 pt{a, b, c, d, v, w, x, y};
                        bool ok = true;
                        for (auto& g : D.j_c)
                            if (g.eval(F, pt)) { ok = false; break; }
                        if (ok) ++cnt;
                    }
                } else {
                    // exceptional fiber: affine solve in (b,d) with theta links;
                    // all of J[1],J[2],J[4],J[7],J[8],J[9] are affine here
                    std::vector<GPoly> eq;
                    for (int gi : {0, 1, 3, 6, 7, 8})
                        eq.push_back(D.j_c[gi].specialize(F, 0, a).specialize(F, 2, c)
                                         .specialize(F, 4, v).specialize(F, 6, x));
                    std::vector<const GPoly*> eqp;
                    for (auto& e : eq) eqp.push_back(&e);
                    detail_fiber::AffineSolver solver{F, {1, 3}, {{1, 5}, {3, 7}}};
                    auto sols = solver.solve(eqp, base, fiber_cap);
                    if (!sols) { hit_cap = true; continue; }
                    for (auto& pt : *sols) {
                        bool ok = true;
                        for (auto& g : D.j_c)
                            if (g.eval(F, pt)) { ok = false; break; }
                        if (ok) ++cnt;
                    }
                }
            }
        }
        return cnt;
    });
    CountRecord rec{"Vprime-fix", 2, n, count, "per-fiber", 0, hit_cap};
    rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

/// N_n for 1 <= n: Table-3 semantics (odd n: fixpoints of alpha^n; even n = 2k:
/// #V'(F_{2^k})).  Chooses brute or per-fiber by scale.
inline CountRecord fixpoint_count(const SuzukiData& D, unsigned n, unsigned jobs,
                                  bool allow_stretch = false) {
    if (n == 0) throw std::invalid_argument("fixpoint_count: n >= 1");
    if (n % 2 == 1) {
        if (n <= 7) return fixpoint_count_odd_brute(D, n, jobs);
        if (!allow_stretch) throw std::invalid_argument("fixpoint_count: n > 7 needs stretch mode");
        return fixpoint_count_odd_per_fiber(D, n, jobs);
    }
    unsigned k = n / 2;
    if (k <= 3) return fixpoint_count_even_brute(D, k, jobs);
    if (!allow_stretch) throw std::invalid_argument("fixpoint_count: n > 7 needs stretch mode");
    auto t0 = std::chrono::steady_clock::now();
    Gf2Table F(gf::field_make(2, k));
    bool partial = false;
    auto pts = vprime_points_per_fiber(D, F, jobs, &partial);
    CountRecord rec{"Vprime-points", 2, k, pts.size(), "per-fiber", 0, partial};
    rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

/// #V_n(F_{2^n}): brute matrix equation for n <= 5, theta-sweep over the
/// 16-generator ideal for n = 7, V'-fixpoint lower bound beyond.
inline CountRecord suzuki_equation_count(const SuzukiData& D, unsigned n, unsigned jobs,
                                         bool allow_stretch = false) {
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("suzuki_equation_count: odd n >= 3");
    if (n <= 5) {
        Gf2Table F(gf::field_make(2, n));
        return suzuki_count_matrix_brute(F, jobs);
    }
    if (n == 7) {
        auto t0 = std::chrono::steady_clock::now();
        Gf2Table F(gf::field_make(2, n));
        auto pts = theta_sweep_points(D.iv_c, F, jobs);
        CountRecord rec{"V_n", 2, n, pts.size(), "ideal-brute", 0, false};
        rec.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rec;
    }
    if (!allow_stretch) throw std::invalid_argument("suzuki_equation_count: n > 7 needs stretch mode");
    CountRecord rec = fixpoint_count_odd_per_fiber(D, n, jobs);
    rec.variety = "V_n";
    rec.method = "per-fiber-lower-bound";  // V' fixpoints inject into V_n(F_q)
    rec.partial = true;
    return rec;
}

/// Pointwise V = W over F_{2^k}: every V point satisfies the twin generators.
struct VWReport {
    bool equal = false;
    u64 v_count = 0, w_count = 0;
};

inline VWReport v_equals_w_check(const std::vector<poly::Polynomial<poly::Fp>>& V_gens,
                                 const std::vector<poly::Polynomial<poly::Fp>>& V0_gens,
                                 unsigned k, unsigned jobs) {
    if (k > 3) throw std::invalid_argument("v_equals_w_check: brute scale is k <= 3");
    Gf2Table F(gf::field_make(2, k));
    auto vc = compile_system(V_gens);
    auto v0c = compile_system(V0_gens);
    auto pts = sweep8_points(vc, F, jobs);
    VWReport rep;
    rep.v_count = pts.size();
    rep.w_count = 0;
    for (auto& p : pts) {
        bool on_twin = true;
        for (auto& g : v0c)
            if (g.eval(F, p)) { on_twin = false; break; }
        if (on_twin) ++rep.w_count;
    }
    rep.equal = rep.v_count == rep.w_count;
    return rep;
}

/// Cor. "no alpha^n fixpoints on the singular locus": sweeps each of S1..S6
/// under the theta restriction and reports emptiness.
inline bool singular_locus_fixfree(const SuzukiData& D, unsigned n, unsigned jobs) {
    if (n % 2 == 0 || n > 9) throw std::invalid_argument("singular_locus_fixfree: odd n <= 9");
    Gf2Table F(gf::field_make(2, n));
    for (auto& sys : D.s_c) {
        auto pts = theta_sweep_points(sys, F, jobs);
        if (!pts.empty()) return false;
    }
    return true;
}

/// Evaluates a GF(2) polynomial at big-field elements (witness-scale check).
inline gf::FieldElement eval_gf2_poly(const poly::Polynomial<poly::Fp>& f,
                                      const std::vector<gf::FieldElement>& pt) {
    const auto* ring = f.ring();
    gf::FieldElement acc = gf::FieldElement::zero(pt.at(0).spec());
    for (auto& tm : f.terms()) {
        if (tm.c.v % 2 == 0) continue;
        gf::FieldElement v = gf::FieldElement::one(pt[0].spec());
        for (size_t i = 0; i < ring->arity(); ++i) {
            unsigned e = tm.m.e[i];
            if (!e) continue;
            int s = slot_of(ring->vars[i]);
            v = v * pt.at(s).pow(e);
        }
        acc = acc + v;
    }
    return acc;
}

struct FixpointCheck {
    bool valid = false;
    bool on_vprime = false;
    bool theta_consistent = false;
    std::string note;
};

/// Checks a claimed fixpoint of alpha^p on V' over GF(2^p) with the stated
/// modulus: all ten surface equations vanish and (v,w,x,y) = theta(a,b,c,d).
inline FixpointCheck verify_fixpoint(const SuzukiData& D, unsigned p,
                                     const std::vector<gf::u64>& modulus,
                                     const std::array<gf::FieldElement, 8>& coords) {
    FixpointCheck rep;
    if (coords[0].spec()->k != p) {
        rep.note = "wrong field degree";
        return rep;
    }
    (void)modulus;
    rep.theta_consistent = coords[4] == coords[0].theta() && coords[5] == coords[1].theta() &&
                           coords[6] == coords[2].theta() && coords[7] == coords[3].theta();
    rep.on_vprime = true;
    std::vector<gf::FieldElement> pt(coords.begin(), coords.end());
    for (auto& g : D.J)
        if (!eval_gf2_poly(g, pt).is_zero()) { rep.on_vprime = false; break; }
    rep.valid = rep.on_vprime && rep.theta_consistent;
    return rep;
}

}  // namespace qengel::vty
