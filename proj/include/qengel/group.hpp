#pragma once

// Finite groups as enumerated closures of generators (permutations or matrix
// elements, optionally projective), with multiplication tables, derived and
// lower-central series, quasi-Engel/Engel identity indices by group-level
// recursion, relation graphs, and the Zorn-variant comparison.

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "qengel/matgroup.hpp"
#include "qengel/words.hpp"

namespace qengel::grp {

struct Permutation {
    std::vector<std::uint16_t> img;  // 0-based images

    static Permutation identity(unsigned n) {
        Permutation p;
        p.img.resize(n);
        for (unsigned i = 0; i < n; ++i) p.img[i] = (std::uint16_t)i;
        return p;
    }
    /// Cycle notation helper: cycles are lists of 0-based points.
    static Permutation from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
        Permutation p = identity(n);
        for (auto& cyc : cycles)
            for (size_t i = 0; i < cyc.size(); ++i) p.img[cyc[i]] = (std::uint16_t)cyc[(i + 1) % cyc.size()];
        return p;
    }
    Permutation mul(const Permutation& o) const {  // (this*o)(i) = this(o(i))
        Permutation r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) r.img[i] = img[o.img[i]];
        return r;
    }
    Permutation inverse() const {
        Permutation r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = (std::uint16_t)i;
        return r;
    }
    bool is_identity() const {
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] != i) return false;
        return true;
    }
    std::string key() const {
        std::string s(img.size() * 2, '\0');
        for (size_t i = 0; i < img.size(); ++i) {
            s[2 * i] = (char)(img[i] & 0xff);
            s[2 * i + 1] = (char)(img[i] >> 8);
        }
        return s;
    }
};

/// Matrix group element; when projective, equality is up to any nonzero scalar
/// and the stored representative is the least scalar multiple in entry-index
/// lexicographic order.
struct GroupMat {
    mats::MatrixElement m;
    bool projective = false;

    GroupMat canonical() const {
        if (!projective) return *this;
        const gf::FieldRef& F = m.spec();
        auto idxseq = [](const mats::MatrixElement& a) {
            std::vector<gf::u64> v;
            for (auto& e : a.entries()) v.push_back(e.index());
            return v;
        };
        mats::MatrixElement best = m;
        auto best_seq = idxseq(best);
        for (gf::u64 i = 2; i < F->order_u64(); ++i) {
            gf::FieldElement lam = gf::FieldElement::from_index(F, i);
            mats::MatrixElement s = m;
            for (unsigned r = 0; r < m.dim(); ++r)
                for (unsigned c = 0; c < m.dim(); ++c) s.at(r, c) = s.at(r, c) * lam;
            auto seq = idxseq(s);
            if (seq < best_seq) {
                best = std::move(s);
                best_seq = std::move(seq);
            }
        }
        return GroupMat{best, projective};
    }
    GroupMat mul(const GroupMat& o) const { return GroupMat{m * o.m, projective}.canonical(); }
    GroupMat inverse() const { return GroupMat{m.inverse(), projective}.canonical(); }
    bool is_identity() const {
        return projective ? mats::projectively_identity(m) : m.is_identity();
    }
    std::string key() const {
        std::string s;
        for (auto& e : m.entries()) {
            gf::u64 v = e.index();
            for (int b = 0; b < 8; ++b) s += (char)((v >> (8 * b)) & 0xff);
        }
        return s;
    }
};

/// Closure size of <gens> without building a table; throws if it exceeds cap.
template <class T>
std::uint32_t closure_order(const std::vector<T>& gens, std::uint32_t cap, T identity) {
    std::map<std::string, std::uint32_t> index;
    std::vector<T> elems;
    T e0 = identity;
    index[e0.key()] = 0;
    elems.push_back(e0);
    for (std::uint32_t i = 0; i < elems.size(); ++i) {
        for (auto& g : gens) {
            T x = elems[i].mul(g);
            auto k = x.key();
            if (!index.count(k)) {
                index[k] = (std::uint32_t)elems.size();
                elems.push_back(std::move(x));
                if (elems.size() > cap) throw std::runtime_error("closure exceeds cap");
            }
        }
    }
    return (std::uint32_t)elems.size();
}

/// Finite group as a multiplication table; element 0 is the identity.
class FiniteGroup {
public:
    std::string name;

    template <class T>
    static FiniteGroup generate(const std::vector<T>& gens, std::uint32_t cap, T identity) {
        std::map<std::string, std::uint32_t> index;
        std::vector<T> elems;
        index[identity.key()] = 0;
        elems.push_back(identity);
        for (std::uint32_t i = 0; i < elems.size(); ++i) {
            for (auto& g : gens) {
                T x = elems[i].mul(g);
                auto k = x.key();
                if (!index.count(k)) {
                    index[k] = (std::uint32_t)elems.size();
                    elems.push_back(std::move(x));
                    if (elems.size() > cap) throw std::runtime_error("closure exceeds cap");
                }
            }
        }
        FiniteGroup G;
        G.n_ = (std::uint32_t)elems.size();
        if ((std::uint64_t)G.n_ * G.n_ > (1u << 26))
            throw std::runtime_error("group too large for a multiplication table");
        G.mult_.resize((size_t)G.n_ * G.n_);
        for (std::uint32_t i = 0; i < G.n_; ++i)
            for (std::uint32_t j = 0; j < G.n_; ++j)
                G.mult_[(size_t)i * G.n_ + j] = index.at(elems[i].mul(elems[j]).key());
        G.inv_.resize(G.n_);
        for (std::uint32_t i = 0; i < G.n_; ++i) G.inv_[i] = index.at(elems[i].inverse().key());
        return G;
    }

    std::uint32_t order() const { return n_; }
    std::uint32_t id() const { return 0; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mult_[(size_t)a * n_ + b]; }
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t conj(std::uint32_t g, std::uint32_t x) const { return mul(mul(g, x), inv(g)); }
    std::uint32_t comm(std::uint32_t a, std::uint32_t b) const {
        return mul(mul(a, b), mul(inv(a), inv(b)));
    }

    std::uint32_t word_eval(const words::FreeWord& w, std::uint32_t g, std::uint32_t h) const {
        std::uint32_t r = 0;
        for (auto c : w.letters()) {
            switch (c) {
                case +1: r = mul(r, g); break;
                case -1: r = mul(r, inv(g)); break;
                case +2: r = mul(r, h); break;
                case -2: r = mul(r, inv(h)); break;
            }
        }
        return r;
    }

    /// One recursion step at the group level.
    std::uint32_t sequence_step(const words::SequenceSpec& spec, std::uint32_t u, std::uint32_t g,
                                std::uint32_t h) const {
        if (spec.kind == words::SequenceKind::quasi_engel) return comm(conj(g, u), conj(h, u));
        return comm(u, spec.engel_variable == 1 ? g : h);
    }

    /// Smallest n <= n_max with the n-th word trivial at (g,h); nullopt otherwise.
    std::optional<unsigned> pointwise_index(const words::SequenceSpec& spec, std::uint32_t g,
                                            std::uint32_t h, unsigned n_max) const {
        std::uint32_t u = word_eval(spec.initial, g, h);
        for (unsigned n = 1; n <= n_max; ++n) {
            if (u == id()) return n;
            std::uint32_t next = sequence_step(spec, u, g, h);
            if (next == u) return std::nullopt;  // stabilized away from 1
            u = next;
        }
        return std::nullopt;
    }

    /// Smallest n <= n_max making the n-th sequence word an identity on G.
    std::optional<unsigned> identity_index(const words::SequenceSpec& spec, unsigned n_max) const {
        unsigned worst = 0;
        for (std::uint32_t g = 0; g < n_; ++g)
            for (std::uint32_t h = 0; h < n_; ++h) {
                auto r = pointwise_index(spec, g, h, n_max);
                if (!r) return std::nullopt;
                worst = std::max(worst, *r);
            }
        return worst;
    }

    /// Subgroup generated by a set of element indices (right-multiplication closure).
    std::vector<std::uint32_t> subgroup(const std::vector<std::uint32_t>& gens) const {
        std::vector<char> seen(n_, 0);
        std::vector<std::uint32_t> elems = {id()};
        seen[id()] = 1;
        for (size_t i = 0; i < elems.size(); ++i)
            for (auto g : gens) {
                std::uint32_t x = mul(elems[i], g);
                if (!seen[x]) {
                    seen[x] = 1;
                    elems.push_back(x);
                }
            }
        return elems;
    }

    std::vector<std::uint32_t> commutator_subgroup(const std::vector<std::uint32_t>& A,
                                                   const std::vector<std::uint32_t>& B) const {
        std::set<std::uint32_t> gens;
        for (auto a : A)
            for (auto b : B) gens.insert(comm(a, b));
        gens.erase(id());
        return subgroup(std::vector<std::uint32_t>(gens.begin(), gens.end()));
    }

    std::vector<std::uint32_t> all_elements() const {
        std::vector<std::uint32_t> v(n_);
        for (std::uint32_t i = 0; i < n_; ++i) v[i] = i;
        return v;
    }

    /// Derived length, or nullopt if the derived series stabilizes above 1.
    std::optional<unsigned> solvability_class() const {
        std::vector<std::uint32_t> H = all_elements();
        for (unsigned d = 1; d <= 64; ++d) {
            auto D = commutator_subgroup(H, H);
            if (D.size() == 1) return d;
            if (D.size() == H.size()) return std::nullopt;
            H = std::move(D);
        }
        return std::nullopt;
    }

    /// Nilpotency class via the lower central series, or nullopt.
    std::optional<unsigned> nilpotency_class() const {
        std::vector<std::uint32_t> G = all_elements(), H = all_elements();
        for (unsigned c = 0; c <= 64; ++c) {
            auto N = commutator_subgroup(H, G);
            if (H.size() == 1) return c;
            if (N.size() == H.size()) return std::nullopt;
            H = std::move(N);
        }
        return std::nullopt;
    }

private:
    std::uint32_t n_ = 1;
    std::vector<std::uint32_t> mult_, inv_;
};

enum class GraphKind { commuting, nilpotency, solvability };

struct RelationGraph {
    GraphKind kind;
    unsigned bound;  // n_max tried
    std::uint32_t order;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;       // symmetrized, g < h
    std::vector<std::pair<std::uint32_t, std::uint32_t>> asymmetric;  // detected one-way only

    bool complete() const {
        std::uint64_t m = order - 1;  // non-identity vertices
        return edges.size() == m * (m - 1) / 2;
    }
};

/// Edge (g,h) iff the relation holds for some n <= n_max; directed detections
/// are symmetrized and one-way pairs are reported, not hidden.
inline RelationGraph relation_graph(const FiniteGroup& G, GraphKind kind, unsigned n_max) {
    RelationGraph out{kind, n_max, G.order(), {}, {}};
    auto directed = [&](std::uint32_t g, std::uint32_t h) {
        switch (kind) {
            case GraphKind::commuting: return G.comm(g, h) == G.id();
            case GraphKind::nilpotency: {
                auto spec = words::SequenceSpec::engel(
                    words::FreeWord::parse("y*x*y^-1*x^-1"), 1);  // e_1 = [y,x], e_{n+1} = [e_n, x]
                return G.pointwise_index(spec, g, h, n_max).has_value();
            }
            case GraphKind::solvability: {
                auto spec = words::SequenceSpec::quasi_engel();
                return G.pointwise_index(spec, g, h, n_max).has_value();
            }
        }
        return false;
    };
    for (std::uint32_t g = 1; g < G.order(); ++g)
        for (std::uint32_t h = g + 1; h < G.order(); ++h) {
            bool gh = directed(g, h), hg = directed(h, g);
            if (gh || hg) out.edges.push_back({g, h});
            if (gh != hg) out.asymmetric.push_back({g, h});
        }
    return out;
}

struct ZornReport {
    bool nilpotent = false;
    std::optional<unsigned> nilpotency_class;
    std::optional<unsigned> engel_index;  // for e_1 = w, e_{n+1} = [e_n, x]
    bool equivalent = false;              // nilpotent <=> engel index present
};

/// Prop-style check: G nilpotent iff some identity [w(x,y),x,...,x] = 1 holds.
inline ZornReport zorn_variant_check(const FiniteGroup& G, const words::FreeWord& w,
                                     unsigned n_max) {
    ZornReport rep;
    rep.nilpotency_class = G.nilpotency_class();
    rep.nilpotent = rep.nilpotency_class.has_value();
    rep.engel_index = G.identity_index(words::SequenceSpec::engel(w, 1), n_max);
    rep.equivalent = rep.nilpotent == rep.engel_index.has_value();
    return rep;
}

// --- standard construction helpers ----------------------------------------------

inline FiniteGroup cyclic_group(unsigned n) {
    std::vector<unsigned> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = i;
    auto g = Permutation::from_cycles(n, {cyc});
    auto G = FiniteGroup::generate<Permutation>({g}, n + 1, Permutation::identity(n));
    G.name = "C" + std::to_string(n);
    return G;
}

inline FiniteGroup dihedral_group(unsigned n) {  // order 2n
    std::vector<unsigned> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = i;
    auto rot = Permutation::from_cycles(n, {cyc});
    Permutation refl = Permutation::identity(n);
    for (unsigned i = 0; i < n; ++i) refl.img[i] = (std::uint16_t)((n - i) % n);
    auto G = FiniteGroup::generate<Permutation>({rot, refl}, 2 * n + 1, Permutation::identity(n));
    G.name = "D" + std::to_string(n);
    return G;
}

inline FiniteGroup symmetric_group(unsigned n, std::uint32_t cap = 50000) {
    std::vector<unsigned> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = i;
    auto G = FiniteGroup::generate<Permutation>(
        {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})}, cap,
        Permutation::identity(n));
    G.name = "S" + std::to_string(n);
    return G;
}

inline FiniteGroup alternating_group(unsigned n, std::uint32_t cap = 50000) {
    std::vector<Permutation> gens = {Permutation::from_cycles(n, {{0, 1, 2}})};
    if (n % 2 == 1) {
        std::vector<unsigned> cyc(n);
        for (unsigned i = 0; i < n; ++i) cyc[i] = i;
        gens.push_back(Permutation::from_cycles(n, {cyc}));
    } else {
        std::vector<unsigned> cyc(n - 1);
        for (unsigned i = 0; i < n - 1; ++i) cyc[i] = i + 1;
        gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
    auto G = FiniteGroup::generate<Permutation>(gens, cap, Permutation::identity(n));
    G.name = "A" + std::to_string(n);
    return G;
}

}  // namespace qengel::grp
