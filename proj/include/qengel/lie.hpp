#pragma once

// Finite-dimensional Lie algebras by structure constants over an exact field,
// the solvability sequence v_1 = [x,y], v_{n+1} = [[v_n,x],[v_n,y]], derived
// series of subspaces, and identity-index sweeps (exhaustive at desk scale,
// sampled with explicit non-certification beyond it).

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "qengel/coeff.hpp"

namespace qengel::lie {

/// Lie algebra of dimension m: bracket [e_i, e_j] = sum_k c[i][j][k] e_k.
/// Antisymmetry ([x,x] = 0) and the Jacobi identity are validated on basis
/// triples at construction.
template <class K>
class LieAlgebra {
public:
    LieAlgebra(unsigned dim, std::vector<K> constants, K one)
        : dim_(dim), c_(std::move(constants)), one_(one) {
        if (c_.size() != (size_t)dim_ * dim_ * dim_)
            throw std::invalid_argument("lie_make: constants must have dim^3 entries");
        validate();
    }

    unsigned dim() const { return dim_; }
    const K& c(unsigned i, unsigned j, unsigned k) const {
        return c_[((size_t)i * dim_ + j) * dim_ + k];
    }

    using Vec = std::vector<K>;
    Vec zero() const { return Vec(dim_, one_.with_value(0)); }
    Vec basis(unsigned i) const {
        Vec v = zero();
        v[i] = one_.with_value(1);
        return v;
    }
    bool is_zero(const Vec& v) const {
        for (auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        Vec r = zero();
        for (unsigned i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (unsigned j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                K s = x[i] * y[j];
                for (unsigned k = 0; k < dim_; ++k) {
                    if (c(i, j, k).is_zero()) continue;
                    r[k] = r[k] + s * c(i, j, k);
                }
            }
        }
        return r;
    }

    /// v_1 = [x,y]; v_{n+1} = [[v_n,x],[v_n,y]].
    Vec v_sequence_eval(const Vec& x, const Vec& y, unsigned n) const {
        if (n == 0) throw std::invalid_argument("v_sequence_eval: n >= 1");
        Vec v = bracket(x, y);
        for (unsigned i = 1; i < n; ++i) v = bracket(bracket(v, x), bracket(v, y));
        return v;
    }

private:
    unsigned dim_;
    std::vector<K> c_;
    K one_;

    void validate() const {
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned k = 0; k < dim_; ++k)
                if (!c(i, i, k).is_zero())
                    throw std::invalid_argument("lie_make: [e_" + std::to_string(i) +
                                                ",e_" + std::to_string(i) + "] != 0");
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned j = 0; j < dim_; ++j)
                for (unsigned k = 0; k < dim_; ++k) {
                    K s = c(i, j, k) + c(j, i, k);
                    if (!s.is_zero())
                        throw std::invalid_argument("lie_make: antisymmetry fails at (" +
                                                    std::to_string(i) + "," + std::to_string(j) + ")");
                }
        // Jacobi: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
        for (unsigned i = 0; i < dim_; ++i)
            for (unsigned j = i + 1; j < dim_; ++j)
                for (unsigned k = j + 1; k < dim_; ++k) {
                    Vec s = zero();
                    auto acc = [&](unsigned a, unsigned b, unsigned cidx) {
                        Vec inner = bracket(basis(a), basis(b));
                        Vec outer = bracket(inner, basis(cidx));
                        for (unsigned t = 0; t < dim_; ++t) s[t] = s[t] + outer[t];
                    };
                    acc(i, j, k);
                    acc(j, k, i);
                    acc(k, i, j);
                    if (!is_zero(s))
                        throw std::invalid_argument("lie_make: Jacobi fails at basis triple (" +
                                                    std::to_string(i) + "," + std::to_string(j) +
                                                    "," + std::to_string(k) + ")");
                }
    }
};

template <class K>
LieAlgebra<K> lie_make(unsigned dim, std::vector<K> constants, K one) {
    return LieAlgebra<K>(dim, std::move(constants), one);
}

namespace detail {
/// Row-reduces a list of vectors; returns a basis of their span.
template <class K>
std::vector<std::vector<K>> span_basis(std::vector<std::vector<K>> rows) {
    if (rows.empty()) return rows;
    size_t m = rows[0].size();
    std::vector<std::vector<K>> basis;
    for (auto v : rows) {
        for (auto& b : basis) {
            // eliminate at b's pivot
            size_t p = 0;
            while (p < m && b[p].is_zero()) ++p;
            if (p == m || v[p].is_zero()) continue;
            K f = v[p] / b[p];
            for (size_t i = 0; i < m; ++i) v[i] = v[i] - f * b[i];
        }
        bool nonzero = false;
        for (auto& x : v)
            if (!x.is_zero()) nonzero = true;
        if (nonzero) basis.push_back(std::move(v));
    }
    return basis;
}
}  // namespace detail

/// Derived length via subspace dimensions: smallest d with L^(d) = 0, or nullopt.
template <class K>
std::optional<unsigned> lie_solvable(const LieAlgebra<K>& L) {
    std::vector<std::vector<K>> cur;
    for (unsigned i = 0; i < L.dim(); ++i) cur.push_back(L.basis(i));
    for (unsigned d = 1; d <= 2 * L.dim() + 2; ++d) {
        std::vector<std::vector<K>> brackets;
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                brackets.push_back(L.bracket(cur[i], cur[j]));
        auto next = detail::span_basis(std::move(brackets));
        if (next.empty()) return d;
        if (next.size() == cur.size()) return std::nullopt;
        cur = std::move(next);
    }
    return std::nullopt;
}

enum class SweepStatus { verified, refuted_cap, sampled_only };

struct VIndexReport {
    std::optional<unsigned> index;
    SweepStatus status = SweepStatus::verified;
    unsigned long pairs_tested = 0;
};

/// Smallest n <= n_max with v_n(x,y) = 0 for all tested pairs.  Exhaustive over
/// GF(p)^dim pairs when p^(2 dim) <= exhaustive_cap, else pseudorandom sampling
/// with an explicit "sampled_only" (non-certifying) status.
inline VIndexReport v_identity_index(const LieAlgebra<poly::Fp>& L, unsigned n_max,
                                     std::uint64_t p, std::uint64_t exhaustive_cap = 1u << 24,
                                     unsigned samples = 20000, std::uint64_t seed = 12345) {
    VIndexReport rep;
    unsigned m = L.dim();
    double full = 1;
    for (unsigned i = 0; i < 2 * m; ++i) full *= (double)p;
    auto vec_from_index = [&](std::uint64_t idx) {
        LieAlgebra<poly::Fp>::Vec v = L.zero();
        for (unsigned i = 0; i < m; ++i) {
            v[i] = poly::Fp(idx % p, p);
            idx /= p;
        }
        return v;
    };
    auto pair_fails_at = [&](const LieAlgebra<poly::Fp>::Vec& x,
                             const LieAlgebra<poly::Fp>::Vec& y, unsigned n) {
        return !L.is_zero(L.v_sequence_eval(x, y, n));
    };
    unsigned lo = 1;
    if (full <= (double)exhaustive_cap) {
        std::uint64_t pm = 1;
        for (unsigned i = 0; i < m; ++i) pm *= p;
        // find the smallest n that kills every pair
        for (unsigned n = lo; n <= n_max; ++n) {
            bool all_zero = true;
            for (std::uint64_t xi = 0; xi < pm && all_zero; ++xi)
                for (std::uint64_t yi = 0; yi < pm && all_zero; ++yi) {
                    ++rep.pairs_tested;
                    if (pair_fails_at(vec_from_index(xi), vec_from_index(yi), n)) all_zero = false;
                }
            if (all_zero) {
                rep.index = n;
                rep.status = SweepStatus::verified;
                return rep;
            }
        }
        rep.status = SweepStatus::refuted_cap;
        return rep;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    rep.status = SweepStatus::sampled_only;
    for (unsigned n = lo; n <= n_max; ++n) {
        bool all_zero = true;
        for (unsigned s = 0; s < samples && all_zero; ++s) {
            LieAlgebra<poly::Fp>::Vec x = L.zero(), y = L.zero();
            for (unsigned i = 0; i < m; ++i) {
                x[i] = poly::Fp(dist(rng), p);
                y[i] = poly::Fp(dist(rng), p);
            }
            ++rep.pairs_tested;
            if (pair_fails_at(x, y, n)) all_zero = false;
        }
        if (all_zero) {
            rep.index = n;
            return rep;
        }
    }
    return rep;
}

/// Theorem hypothesis guard: the finite-field equivalence sweeps are evidence
/// only; characteristics 2, 3, 5 run in report-only mode.
inline bool characteristic_admissible(std::uint64_t p) { return p != 2 && p != 3 && p != 5; }

}  // namespace qengel::lie
