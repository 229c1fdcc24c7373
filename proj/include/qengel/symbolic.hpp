#pragma once

// Symbolic generation of the matrix-equation ideals: square matrices over a
// polynomial ring, exact adjugate inverses (unit determinant), the PSL(2) and
// Suzuki setups for u_1 = u_2, and rational-substitution identity checks.

#include <stdexcept>
#include <vector>

#include "qengel/groebner.hpp"
#include "qengel/poly.hpp"
#include "qengel/words.hpp"

namespace qengel::poly {

template <class K>
class SymMatrix {
public:
    SymMatrix() = default;
    SymMatrix(unsigned dim, std::vector<Polynomial<K>> e) : dim_(dim), e_(std::move(e)) {
        if (e_.size() != dim_ * dim_) throw std::invalid_argument("symbolic matrix shape");
    }
    static SymMatrix identity(const PolyRing<K>* ring, unsigned dim) {
        std::vector<Polynomial<K>> e(dim * dim, Polynomial<K>(ring));
        for (unsigned i = 0; i < dim; ++i)
            e[i * dim + i] = Polynomial<K>::constant(ring, ring->constant(1));
        return SymMatrix(dim, std::move(e));
    }
    unsigned dim() const { return dim_; }
    const Polynomial<K>& at(unsigned i, unsigned j) const { return e_[i * dim_ + j]; }
    Polynomial<K>& at(unsigned i, unsigned j) { return e_[i * dim_ + j]; }
    const PolyRing<K>* ring() const { return e_.at(0).ring(); }

    friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
        unsigned n = a.dim_;
        SymMatrix r = identity(a.ring(), n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                Polynomial<K> s(a.ring());
                for (unsigned k = 0; k < n; ++k) s = s + a.at(i, k) * b.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }
    friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
        SymMatrix r = a;
        for (unsigned i = 0; i < a.dim_ * a.dim_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }

    Polynomial<K> det() const {
        if (dim_ == 1) return e_[0];
        Polynomial<K> s(ring());
        for (unsigned j = 0; j < dim_; ++j) {
            Polynomial<K> term = at(0, j) * minor_det(0, j);
            s = (j % 2 == 0) ? s + term : s - term;
        }
        return s;
    }

    /// Adjugate-based inverse; requires det = 1 so that entries stay polynomial.
    SymMatrix unimodular_inverse() const {
        Polynomial<K> d = det();
        if (!(d == Polynomial<K>::constant(ring(), ring()->constant(1))))
            throw std::domain_error("unimodular_inverse: determinant is not 1");
        SymMatrix r = identity(ring(), dim_);
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned j = 0; j < dim_; ++j) {
                Polynomial<K> c = minor_det(j, i);
                r.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
            }
        return r;
    }

    /// Row-major entry list (the transcript "flatten").
    std::vector<Polynomial<K>> flatten() const { return e_; }

private:
    unsigned dim_ = 0;
    std::vector<Polynomial<K>> e_;

    Polynomial<K> minor_det(unsigned di, unsigned dj) const {
        std::vector<Polynomial<K>> m;
        for (unsigned i = 0; i < dim_; ++i) {
            if (i == di) continue;
            for (unsigned j = 0; j < dim_; ++j) {
                if (j == dj) continue;
                m.push_back(at(i, j));
            }
        }
        return SymMatrix(dim_ - 1, std::move(m)).det();
    }
};

/// Evaluates a free word at symbolic matrices with precomputed inverses.
template <class K>
SymMatrix<K> symbolic_word_eval(const words::FreeWord& w, const SymMatrix<K>& x,
                                const SymMatrix<K>& y) {
    SymMatrix<K> xi = x.unimodular_inverse(), yi = y.unimodular_inverse();
    SymMatrix<K> r = SymMatrix<K>::identity(x.ring(), x.dim());
    for (auto c : w.letters()) {
        switch (c) {
            case +1: r = r * x; break;
            case -1: r = r * xi; break;
            case +2: r = r * y; break;
            case -2: r = r * yi; break;
        }
    }
    return r;
}

/// Entries of LHS - RHS for the cleared form of u_1 = u_2 with w = x^-2 y^-1 x:
///   x^-1 y x^-1 y^-1 x^2  =  y x^-2 y^-1 x y^-1.
template <class K>
std::vector<Polynomial<K>> equation_ideal_u1u2(const SymMatrix<K>& x, const SymMatrix<K>& y) {
    SymMatrix<K> xi = x.unimodular_inverse(), yi = y.unimodular_inverse();
    SymMatrix<K> lhs = xi * y * xi * yi * x * x;
    SymMatrix<K> rhs = y * xi * xi * yi * x * yi;
    return (lhs - rhs).flatten();
}

/// General matrix-equation ideal for u_i = u_j: entries of u_i(x,y) - u_j(x,y),
/// with inverses cleared through the adjugate (valid for det = 1).
template <class K>
std::vector<Polynomial<K>> matrix_equation_ideal(const SymMatrix<K>& x, const SymMatrix<K>& y,
                                                 unsigned i, unsigned j,
                                                 const words::SequenceSpec& spec) {
    if (i == j) throw std::invalid_argument("matrix_equation_ideal: i != j");
    if (i == 1 && j == 2 && spec.kind == words::SequenceKind::quasi_engel &&
        spec.initial == words::canonical_w())
        return equation_ideal_u1u2(x, y);
    SymMatrix<K> ui = symbolic_word_eval(words::build_sequence(spec, i), x, y);
    SymMatrix<K> uj = symbolic_word_eval(words::build_sequence(spec, j), x, y);
    return (ui - uj).flatten();
}

/// The Section 3 setup: x(t) = [[t,-1],[1,0]], y(b,c) = [[1,b],[c,1+bc]] over
/// a ring containing the variables c, b, t.
template <class K>
std::pair<SymMatrix<K>, SymMatrix<K>> psl2_symbolic(const PolyRing<K>* ring) {
    auto v = [&](const char* name) {
        int i = ring->var_index(name);
        if (i < 0) throw std::invalid_argument("psl2_symbolic: ring lacks variable");
        return Polynomial<K>::variable(ring, (unsigned)i);
    };
    auto cst = [&](long n) { return Polynomial<K>::constant(ring, ring->constant(n)); };
    Polynomial<K> t = v("t"), b = v("b"), c = v("c");
    SymMatrix<K> X(2, {t, -cst(1), cst(1), cst(0)});
    SymMatrix<K> Y(2, {cst(1), b, c, cst(1) + b * c});
    return {X, Y};
}

/// The Suzuki universal setup over GF(2)[a,b,c,d,v,w,x,y]:
///   x = T*S(a,b,v,w), y = T*S(c,d,x,y); the twin uses the theta-swapped S_0.
template <class K>
struct SuzukiSymbolic {
    SymMatrix<K> x, y;
};

template <class K>
SymMatrix<K> suzuki_S(const PolyRing<K>* ring, const Polynomial<K>& a, const Polynomial<K>& b,
                      const Polynomial<K>& a0, const Polynomial<K>& b0) {
    auto cst = [&](long n) { return Polynomial<K>::constant(ring, ring->constant(n)); };
    Polynomial<K> z = cst(0), o = cst(1);
    return SymMatrix<K>(4, {o, z, z, z,
                            a, o, z, z,
                            a * a0 + b, a0, o, z,
                            a * a * a0 + a * b + b0, b, a, o});
}

template <class K>
SymMatrix<K> suzuki_S0(const PolyRing<K>* ring, const Polynomial<K>& a, const Polynomial<K>& b,
                       const Polynomial<K>& a0, const Polynomial<K>& b0) {
    auto cst = [&](long n) { return Polynomial<K>::constant(ring, ring->constant(n)); };
    Polynomial<K> z = cst(0), o = cst(1);
    return SymMatrix<K>(4, {o, z, z, z,
                            a0, o, z, z,
                            a0 * a * a + b0, a * a, o, z,
                            a0 * a0 * a * a + a0 * b0 + b * b, b0, a0, o});
}

template <class K>
SymMatrix<K> suzuki_Tmat(const PolyRing<K>* ring) {
    auto cst = [&](long n) { return Polynomial<K>::constant(ring, ring->constant(n)); };
    Polynomial<K> z = cst(0), o = cst(1);
    return SymMatrix<K>(4, {z, z, z, o,
                            z, z, o, z,
                            z, o, z, z,
                            o, z, z, z});
}

/// twin = false: the variety V; twin = true: its image V_0 under alpha.
template <class K>
SuzukiSymbolic<K> suzuki_symbolic(const PolyRing<K>* ring, bool twin) {
    auto v = [&](const char* name) {
        int i = ring->var_index(name);
        if (i < 0) throw std::invalid_argument("suzuki_symbolic: ring lacks variable");
        return Polynomial<K>::variable(ring, (unsigned)i);
    };
    Polynomial<K> a = v("a"), b = v("b"), c = v("c"), d = v("d");
    Polynomial<K> vv = v("v"), w = v("w"), x = v("x"), y = v("y");
    SymMatrix<K> T = suzuki_Tmat<K>(ring);
    if (!twin) return {T * suzuki_S(ring, a, b, vv, w), T * suzuki_S(ring, c, d, x, y)};
    return {T * suzuki_S0(ring, a, b, vv, w), T * suzuki_S0(ring, c, d, x, y)};
}

// --- rational substitution identities ----------------------------------------

/// F(..., var = U/V, ...) with cleared denominators:
/// returns sum_i coef_i * U^i * V^(d-i) where F = sum_i coef_i * var^i, d = deg_var F.
template <class K>
Polynomial<K> substitute_rational_cleared(const Polynomial<K>& F, unsigned var,
                                          const Polynomial<K>& U, const Polynomial<K>& V) {
    unsigned d = F.deg_in(var);
    const PolyRing<K>* ring = F.ring();
    std::vector<Polynomial<K>> coef(d + 1, Polynomial<K>(ring));
    for (auto& t : F.terms()) {
        Monomial m = t.m;
        unsigned e = m.e[var];
        m.e[var] = 0;
        coef[e] = coef[e] + Polynomial<K>(ring, {{m, t.c}});
    }
    std::vector<Polynomial<K>> Upow(d + 1), Vpow(d + 1);
    Upow[0] = Vpow[0] = Polynomial<K>::constant(ring, ring->constant(1));
    for (unsigned i = 1; i <= d; ++i) {
        Upow[i] = Upow[i - 1] * U;
        Vpow[i] = Vpow[i - 1] * V;
    }
    Polynomial<K> s(ring);
    for (unsigned i = 0; i <= d; ++i) s = s + coef[i] * Upow[i] * Vpow[d - i];
    return s;
}

/// Verifies M * F(var = U/V) = T as an identity of rational functions, i.e.
/// M * cleared(F) = T * V^deg_var(F) exactly.
template <class K>
bool substitution_identity_check(const Polynomial<K>& M, const Polynomial<K>& F, unsigned var,
                                 const Polynomial<K>& U, const Polynomial<K>& V,
                                 const Polynomial<K>& T) {
    if (V.is_zero()) throw std::invalid_argument("substitution denominator is zero");
    unsigned d = F.deg_in(var);
    Polynomial<K> lhs = M * substitute_rational_cleared(F, var, U, V);
    Polynomial<K> rhs = T;
    for (unsigned i = 0; i < d; ++i) rhs = rhs * V;
    return lhs == rhs;
}

}  // namespace qengel::poly
