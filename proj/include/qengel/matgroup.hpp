#pragma once

// Concrete matrix models: PSL(2,q) via x(t), y(b,c); Suzuki groups via
// U(a,b), M(c), T; word evaluation by the substitution homomorphism.
// Inverses are exact (adjugate; all constructed elements have determinant 1).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qengel/gf.hpp"
#include "qengel/words.hpp"

namespace qengel::mats {

using gf::FieldElement;
using gf::FieldRef;

/// Square matrix over a finite field, dim 2..4, row-major entries.
class MatrixElement {
public:
    MatrixElement() = default;
    MatrixElement(unsigned dim, std::vector<FieldElement> entries)
        : dim_(dim), e_(std::move(entries)) {
        if (dim_ < 1 || dim_ > 4 || e_.size() != dim_ * dim_)
            throw std::invalid_argument("matrix: bad dimension or entry count");
    }
    static MatrixElement identity(unsigned dim, const FieldRef& f) {
        std::vector<FieldElement> e(dim * dim, FieldElement::zero(f));
        for (unsigned i = 0; i < dim; ++i) e[i * dim + i] = FieldElement::one(f);
        return MatrixElement(dim, std::move(e));
    }

    unsigned dim() const { return dim_; }
    const FieldElement& at(unsigned i, unsigned j) const { return e_[i * dim_ + j]; }
    FieldElement& at(unsigned i, unsigned j) { return e_[i * dim_ + j]; }
    const std::vector<FieldElement>& entries() const { return e_; }
    const FieldRef& spec() const { return e_.at(0).spec(); }

    friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MatrixElement& a, const MatrixElement& b) { return !(a == b); }

    friend MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dim mismatch");
        unsigned n = a.dim_;
        const FieldRef& f = a.spec();
        MatrixElement r = identity(n, f);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                FieldElement s = FieldElement::zero(f);
                for (unsigned k = 0; k < n; ++k) s = s + a.at(i, k) * b.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    FieldElement det() const {
        const FieldRef& f = spec();
        switch (dim_) {
            case 1: return at(0, 0);
            case 2: return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
            default: {
                // cofactor expansion along the first row
                FieldElement s = FieldElement::zero(f);
                for (unsigned j = 0; j < dim_; ++j) {
                    FieldElement m = minor_det(0, j);
                    FieldElement term = at(0, j) * m;
                    s = (j % 2 == 0) ? s + term : s - term;
                }
                return s;
            }
        }
    }

    /// Inverse via the adjugate; requires an invertible determinant.
    MatrixElement inverse() const {
        FieldElement d = det();
        if (d.is_zero()) throw std::domain_error("matrix not invertible");
        FieldElement di = d.inv();
        MatrixElement r = identity(dim_, spec());
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned j = 0; j < dim_; ++j) {
                FieldElement c = minor_det(j, i);  // transpose of cofactors
                if ((i + j) % 2 == 1) c = -c;
                r.at(i, j) = c * di;
            }
        return r;
    }

    bool is_identity() const {
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned j = 0; j < dim_; ++j) {
                if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
            }
        return true;
    }

    std::string str() const {
        std::string s = "[";
        for (unsigned i = 0; i < dim_; ++i) {
            s += "[";
            for (unsigned j = 0; j < dim_; ++j) {
                s += at(i, j).str();
                if (j + 1 < dim_) s += ",";
            }
            s += "]";
            if (i + 1 < dim_) s += ",";
        }
        return s + "]";
    }

private:
    unsigned dim_ = 0;
    std::vector<FieldElement> e_;

    FieldElement minor_det(unsigned di, unsigned dj) const {
        std::vector<FieldElement> m;
        for (unsigned i = 0; i < dim_; ++i) {
            if (i == di) continue;
            for (unsigned j = 0; j < dim_; ++j) {
                if (j == dj) continue;
                m.push_back(at(i, j));
            }
        }
        return MatrixElement(dim_ - 1, std::move(m)).det();
    }
};

/// True iff A = lambda * B for a nonzero scalar lambda.
inline bool projective_eq(const MatrixElement& a, const MatrixElement& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("projective_eq: dim mismatch");
    const FieldRef& f = a.spec();
    FieldElement lambda = FieldElement::zero(f);
    unsigned n = a.dim();
    for (unsigned i = 0; i < n * n; ++i) {
        const FieldElement &x = a.entries()[i], &y = b.entries()[i];
        if (x.is_zero() != y.is_zero()) return false;
        if (!x.is_zero()) { lambda = x * y.inv(); break; }
    }
    if (lambda.is_zero()) return true;  // both zero matrices
    for (unsigned i = 0; i < n * n; ++i)
        if (a.entries()[i] != lambda * b.entries()[i]) return false;
    return true;
}

inline bool projectively_identity(const MatrixElement& a) {
    return projective_eq(a, MatrixElement::identity(a.dim(), a.spec()));
}

/// x(t) = [[t,-1],[1,0]], y(b,c) = [[1,b],[c,1+bc]]; both of determinant 1.
inline std::pair<MatrixElement, MatrixElement> psl2_gens(const FieldElement& t,
                                                         const FieldElement& b,
                                                         const FieldElement& c) {
    const FieldRef& f = t.spec();
    FieldElement one = FieldElement::one(f), zero = FieldElement::zero(f);
    MatrixElement x(2, {t, -one, one, zero});
    MatrixElement y(2, {one, b, c, one + b * c});
    return {x, y};
}

/// Suzuki generators over GF(2^n), n = 2m+1 odd:
///   U(a,b) lower unipotent with theta-twisted entries, M(c) diagonal, T antidiagonal.
struct SuzukiGens {
    MatrixElement U, M, T;
};

inline MatrixElement suzuki_T(const FieldRef& f) {
    FieldElement o = FieldElement::one(f), z = FieldElement::zero(f);
    return MatrixElement(4, {z, z, z, o,
                             z, z, o, z,
                             z, o, z, z,
                             o, z, z, z});
}

inline MatrixElement suzuki_U(const FieldElement& a, const FieldElement& b) {
    const FieldRef& f = a.spec();
    FieldElement o = FieldElement::one(f), z = FieldElement::zero(f);
    FieldElement pa = a.theta(), pb = b.theta();
    return MatrixElement(4, {o, z, z, z,
                             a, o, z, z,
                             a * pa + b, pa, o, z,
                             a * a * pa + a * b + pb, b, a, o});
}

inline SuzukiGens suzuki_gens(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    const FieldRef& f = a.spec();
    if (f->p != 2 || f->k % 2 == 0)
        throw std::invalid_argument("suzuki_gens: need GF(2^n) with n odd");
    if (c.is_zero()) throw std::invalid_argument("suzuki_gens: c must be nonzero");
    unsigned m = (f->k - 1) / 2;
    gf::u64 e = (gf::u64)1 << m;  // 2^m
    FieldElement z = FieldElement::zero(f);
    FieldElement cm = c.pow(e);
    FieldElement cm1 = c * cm;  // c^(1+2^m)
    MatrixElement M(4, {cm1, z, z, z,
                        z, cm, z, z,
                        z, z, cm.inv(), z,
                        z, z, z, cm1.inv()});
    return {suzuki_U(a, b), M, suzuki_T(f)};
}

/// Substitution homomorphism F(x,y) -> GL(dim, q) applied to a reduced word.
inline MatrixElement word_eval(const words::FreeWord& w, const MatrixElement& x,
                               const MatrixElement& y) {
    if (x.dim() != y.dim() || !x.spec()->same(*y.spec()))
        throw std::invalid_argument("word_eval: generator mismatch");
    MatrixElement xi = x.inverse(), yi = y.inverse();
    MatrixElement r = MatrixElement::identity(x.dim(), x.spec());
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

/// Group-level quasi-Engel recursion: u_1 = w(x,y), u_{n+1} = [x u x^-1, y u y^-1].
/// Avoids materializing the exponentially long word.
inline MatrixElement quasi_engel_eval(const words::FreeWord& w, const MatrixElement& x,
                                      const MatrixElement& y, unsigned n) {
    if (n == 0) throw std::invalid_argument("quasi_engel_eval: n >= 1");
    MatrixElement u = word_eval(w, x, y);
    MatrixElement xi = x.inverse(), yi = y.inverse();
    for (unsigned i = 1; i < n; ++i) {
        MatrixElement a = x * u * xi, b = y * u * yi;
        u = a * b * a.inverse() * b.inverse();
    }
    return u;
}

/// The PSL(3,3) witness pair for u_1 = u_2.
inline std::pair<MatrixElement, MatrixElement> psl33_witness() {
    FieldRef f3 = gf::field_make(3, 1);
    auto el = [&](gf::u64 v) { return FieldElement(f3, v); };
    MatrixElement x(3, {el(0), el(0), el(1),
                        el(0), el(1), el(0),
                        el(1), el(0), el(1)});
    MatrixElement y(3, {el(2), el(0), el(2),
                        el(0), el(1), el(1),
                        el(2), el(1), el(1)});
    return {x, y};
}

}  // namespace qengel::mats
