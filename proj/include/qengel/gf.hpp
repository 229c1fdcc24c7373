#pragma once

// Exact arithmetic in GF(p), GF(p^k) and GF(2^n), with the Frobenius and the
// half-Frobenius theta of GF(2^(2m+1)).  Elements are immutable values and
// carry a pointer to their field descriptor; all operations are pure.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qengel::gf {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % d == 0) return n == d;
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [](u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); };
    auto powmod = [&](u64 a, u64 e, u64 m) {
        u64 r = 1;
        for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
            if (e & 1) r = mulmod(r, a, m);
        return r;
    };
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Trial-division factorization, complete for n < 2^48 (enough for q - 1 with q <= 2^47).
inline std::vector<u64> factor_u64(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n && d < (1u << 25); d == 2 ? d = 3 : d += 2)
        while (n % d == 0) { fs.push_back(d); n /= d; }
    if (n > 1) {
        if (!is_prime_u64(n)) throw std::runtime_error("factor_u64: cofactor too large");
        fs.push_back(n);
    }
    return fs;
}

namespace detail {
// dense univariate arithmetic over F_p, used only for field construction
using Poly = std::vector<u64>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline Poly pmul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (u128)a[i] * b[j]) % p;
    trim(r);
    return r;
}
inline Poly pmod(Poly a, const Poly& f, u64 p) {
    trim(a);
    u64 lead_inv = 1;
    {  // f monic in our uses, but invert the lead anyway
        u64 lf = f.back(), t = 1, e = p - 2;
        for (u64 b = lf; e; e >>= 1, b = (u64)((u128)b * b % p))
            if (e & 1) t = (u64)((u128)t * b % p);
        lead_inv = t;
    }
    while (a.size() >= f.size()) {
        u64 c = (u64)((u128)a.back() * lead_inv % p);
        size_t off = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) {
            u64 s = (u128)c * f[i] % p;
            a[off + i] = (a[off + i] + p - s) % p;
        }
        trim(a);
    }
    return a;
}
inline Poly pgcd(Poly a, Poly b, u64 p) {
    trim(a); trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}
inline Poly ppowmod_xq(u64 p, u64 e_log_p, const Poly& f) {
    // computes x^(p^e_log_p) mod f by iterating the p-th power map
    Poly x = {0, 1};
    Poly r = pmod(x, f, p);
    for (u64 i = 0; i < e_log_p; ++i) {
        // r^p mod f via square-and-multiply on exponent p
        Poly acc = {1};
        Poly base = r;
        u64 e = p;
        while (e) {
            if (e & 1) acc = pmod(pmul(acc, base, p), f, p);
            e >>= 1;
            if (e) base = pmod(pmul(base, base, p), f, p);
        }
        r = std::move(acc);
    }
    return r;
}

inline bool is_irreducible(const Poly& f, u64 p) {
    size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    // x^(p^k) == x mod f, and gcd(x^(p^(k/l)) - x, f) = 1 for prime l | k
    Poly xq = ppowmod_xq(p, k, f);
    Poly x = pmod({0, 1}, f, p);
    if (xq != x) return false;
    std::vector<u64> primes;
    u64 kk = k;
    for (u64 d = 2; d * d <= kk; ++d)
        while (kk % d == 0) { if (primes.empty() || primes.back() != d) primes.push_back(d); kk /= d; }
    if (kk > 1) primes.push_back(kk);
    for (u64 l : primes) {
        Poly g = ppowmod_xq(p, k / l, f);
        // g - x
        Poly diff = g;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        Poly gc = pgcd(diff, f, p);
        if (gc.size() != 1) return false;
    }
    return true;
}
}  // namespace detail

struct FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

/// Descriptor of GF(p^k): characteristic, degree, and a monic irreducible modulus.
struct FieldSpec {
    u64 p = 2;
    unsigned k = 1;
    std::vector<u64> modulus;  // length k+1, monic, reduced mod p
    u64 mod_bits = 0;          // bit-packed modulus, valid when gf2_fast
    bool gf2_fast = false;     // p == 2 && k <= 63

    bool same(const FieldSpec& o) const { return p == o.p && k == o.k && modulus == o.modulus; }
    u64 order_u64() const {
        // p^k, throws if it does not fit
        u128 q = 1;
        for (unsigned i = 0; i < k; ++i) {
            q *= p;
            if (q > (u128)UINT64_MAX) throw std::overflow_error("field order exceeds 2^64");
        }
        return (u64)q;
    }
};

/// Lexicographically least monic irreducible polynomial of degree k over F_p.
inline std::vector<u64> default_modulus(u64 p, unsigned k) {
    if (k == 1) return {0, 1};  // t
    // enumerate non-leading coefficient vectors by their base-p integer value
    u128 cap = 1;
    for (unsigned i = 0; i < k; ++i) cap *= p;
    for (u128 v = 1; v < cap; ++v) {
        detail::Poly f(k + 1, 0);
        u128 t = v;
        for (unsigned i = 0; i < k; ++i) { f[i] = (u64)(t % p); t /= p; }
        f[k] = 1;
        if (detail::is_irreducible(f, p)) return f;
    }
    throw std::runtime_error("no irreducible modulus found");  // unreachable
}

/// Builds a field descriptor; validates primality of p and irreducibility of the modulus.
inline FieldRef field_make(u64 p, unsigned k, std::vector<u64> modulus = {}) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field_make: characteristic is not prime");
    if (k == 0) throw std::invalid_argument("field_make: degree must be positive");
    if (modulus.empty()) {
        modulus = default_modulus(p, k);
    } else {
        for (auto& c : modulus) c %= p;
        detail::trim(modulus);
        if (modulus.size() != k + 1 || modulus[k] != 1)
            throw std::invalid_argument("field_make: modulus is not monic of stated degree");
        if (k >= 2 && !detail::is_irreducible(modulus, p))
            throw std::invalid_argument("field_make: modulus is reducible");
    }
    auto s = std::make_shared<FieldSpec>();
    s->p = p;
    s->k = k;
    s->modulus = modulus;
    if (p == 2 && k <= 63) {
        s->gf2_fast = true;
        for (unsigned i = 0; i <= k; ++i)
            if (modulus[i]) s->mod_bits |= (u64)1 << i;
    }
    return s;
}

/// Element of GF(p^k) in the residue-polynomial basis.  For p = 2, k <= 63 the
/// coefficients live in a single machine word (bit i = coefficient of t^i).
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldRef spec, u64 packed_or_scalar)
        : spec_(std::move(spec)) {
        if (spec_->gf2_fast) {
            bits_ = reduce_bits(packed_or_scalar, *spec_);
        } else {
            c_.assign(1, packed_or_scalar % spec_->p);
            trim();
        }
    }
    static FieldElement zero(FieldRef spec) { return FieldElement(std::move(spec), 0); }
    static FieldElement one(FieldRef spec) { return FieldElement(std::move(spec), 1); }
    /// Residue class of the generator t.
    static FieldElement gen(FieldRef spec) {
        FieldElement e;
        e.spec_ = std::move(spec);
        if (e.spec_->k == 1) throw std::invalid_argument("gen: prime field has no generator t");
        if (e.spec_->gf2_fast) e.bits_ = 2;
        else e.c_ = {0, 1};
        return e;
    }
    static FieldElement from_coeffs(FieldRef spec, const std::vector<u64>& coeffs) {
        FieldElement e;
        e.spec_ = std::move(spec);
        if (coeffs.size() > e.spec_->k) throw std::invalid_argument("element coefficients exceed degree");
        if (e.spec_->gf2_fast) {
            for (size_t i = 0; i < coeffs.size(); ++i)
                if (coeffs[i] & 1) e.bits_ |= (u64)1 << i;
        } else {
            e.c_ = coeffs;
            for (auto& c : e.c_) c %= e.spec_->p;
            e.trim();
        }
        return e;
    }
    /// Element with index i in [0, p^k): base-p digits are the coefficients.
    static FieldElement from_index(FieldRef spec, u64 idx) {
        FieldElement e;
        e.spec_ = std::move(spec);
        if (e.spec_->gf2_fast) {
            e.bits_ = idx;
        } else {
            u64 p = e.spec_->p;
            while (idx) { e.c_.push_back(idx % p); idx /= p; }
        }
        return e;
    }
    u64 index() const {
        if (spec_->gf2_fast) return bits_;
        u64 v = 0;
        for (size_t i = c_.size(); i-- > 0;) v = v * spec_->p + c_[i];
        return v;
    }

    const FieldRef& spec() const { return spec_; }
    u64 bits() const { return bits_; }
    bool is_zero() const { return spec_->gf2_fast ? bits_ == 0 : c_.empty(); }
    bool is_one() const {
        return spec_->gf2_fast ? bits_ == 1 : (c_.size() == 1 && c_[0] == 1);
    }
    u64 coeff(unsigned i) const {
        if (spec_->gf2_fast) return (bits_ >> i) & 1;
        return i < c_.size() ? c_[i] : 0;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.spec_->same(*b.spec_) && a.bits_ == b.bits_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        FieldElement r;
        r.spec_ = a.spec_;
        if (a.spec_->gf2_fast) {
            r.bits_ = a.bits_ ^ b.bits_;
        } else {
            r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
            u64 p = a.spec_->p;
            for (size_t i = 0; i < r.c_.size(); ++i)
                r.c_[i] = (a.coeff(i) + b.coeff(i)) % p;
            r.trim();
        }
        return r;
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }
    FieldElement operator-() const {
        if (spec_->gf2_fast) return *this;
        FieldElement r = *this;
        for (auto& c : r.c_) c = c ? spec_->p - c : 0;
        return r;
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        FieldElement r;
        r.spec_ = a.spec_;
        if (a.spec_->gf2_fast) {
            r.bits_ = gf2_mul(a.bits_, b.bits_, *a.spec_);
        } else {
            if (a.c_.empty() || b.c_.empty()) return r;
            auto prod = detail::pmul(a.c_, b.c_, a.spec_->p);
            r.c_ = detail::pmod(prod, a.spec_->modulus, a.spec_->p);
        }
        return r;
    }

    FieldElement pow(u64 e) const {
        FieldElement r = one(spec_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    FieldElement inv() const {
        if (is_zero()) throw std::domain_error("inversion of zero");
        // a^(q-2); q may not fit in u64 for large p^k but all our fields do
        return pow(spec_->order_u64() - 2);
    }

    /// a^(p^j)
    FieldElement frob_pow(u64 j) const {
        FieldElement r = *this;
        j %= spec_->k;  // Frobenius has order k
        for (u64 i = 0; i < j; ++i) r = r.pow(spec_->p);
        return r;
    }

    /// theta(a) = a^(2^(m+1)) on GF(2^(2m+1)); theta(theta(a)) = a^2.
    FieldElement theta() const {
        if (spec_->p != 2 || spec_->k % 2 == 0)
            throw std::domain_error("theta_map requires GF(2^n) with n odd");
        unsigned m = (spec_->k - 1) / 2;
        FieldElement r = *this;
        for (unsigned i = 0; i < m + 1; ++i) r = r * r;
        return r;
    }

    /// Multiplicative order; only valid for nonzero elements.
    u64 mult_order() const {
        if (is_zero()) throw std::domain_error("order of zero");
        u64 q1 = spec_->order_u64() - 1;
        u64 ord = q1;
        for (u64 f : factor_u64(q1))
            while (ord % f == 0 && pow(ord / f).is_one()) ord /= f;
        return ord;
    }
    bool is_primitive() const { return !is_zero() && mult_order() == spec_->order_u64() - 1; }

    /// Polynomial-in-t text, e.g. "t^4+t^2+1"; "0" for zero.
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (unsigned i = spec_->k; i-- > 0;) {
            u64 c = coeff(i);
            if (!c) continue;
            if (!s.empty()) s += "+";
            if (i == 0 || c != 1) s += std::to_string(c);
            if (i > 0) {
                if (c != 1) s += "*";
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
    /// Hexadecimal bit-vector form for GF(2^n).
    std::string hex() const {
        if (!spec_->gf2_fast) throw std::domain_error("hex form only for GF(2^n)");
        char buf[20];
        std::snprintf(buf, sizeof buf, "0x%llx", (unsigned long long)bits_);
        return buf;
    }

    static u64 gf2_mul(u64 a, u64 b, const FieldSpec& s) {
        u128 acc = 0;
        while (b) {
            int i = __builtin_ctzll(b);
            acc ^= (u128)a << i;
            b &= b - 1;
        }
        return reduce_bits128(acc, s);
    }

private:
    FieldRef spec_;
    u64 bits_ = 0;
    std::vector<u64> c_;

    void check(const FieldElement& o) const {
        if (!spec_ || !o.spec_ || !spec_->same(*o.spec_))
            throw std::invalid_argument("field spec mismatch");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static u64 reduce_bits(u64 v, const FieldSpec& s) {
        return reduce_bits128(v, s);
    }
    static u64 reduce_bits128(u128 acc, const FieldSpec& s) {
        for (int j = 126; j >= (int)s.k; --j)
            if ((acc >> j) & 1) acc ^= (u128)s.mod_bits << (j - s.k);
        return (u64)acc;
    }
};

/// Dispatch helper for the spec'd elem_arith entry point.
enum class ArithOp { add, mul, inv, neg };
inline FieldElement elem_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::mul: return a * b;
        case ArithOp::inv: return a.inv();
        case ArithOp::neg: return -a;
    }
    throw std::logic_error("bad op");
}

inline FieldElement frob_pow(const FieldElement& a, u64 j) { return a.frob_pow(j); }
inline FieldElement theta_map(const FieldElement& a) { return a.theta(); }

/// Parses "t^4+t^2+1" / "t4+t2+1" / "3*t^2+1" / "-1" / "0x1f" (GF(2^n) hex).
inline FieldElement parse_element(const FieldRef& spec, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    if (s.empty()) throw std::invalid_argument("empty element literal");
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        if (!spec->gf2_fast) throw std::invalid_argument("hex form only for GF(2^n)");
        return FieldElement::from_index(spec, std::stoull(s.substr(2), nullptr, 16));
    }
    FieldElement acc = FieldElement::zero(spec);
    size_t i = 0;
    while (i < s.size()) {
        long sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("dangling sign in element literal");
        u64 coef = 1;
        bool saw = false;
        if (isdigit((unsigned char)s[i])) {
            coef = 0;
            while (i < s.size() && isdigit((unsigned char)s[i])) coef = coef * 10 + (s[i++] - '0');
            saw = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        u64 expo = 0;
        if (i < s.size() && (s[i] == 't' || s[i] == 'a')) {
            ++i;
            expo = 1;
            if (i < s.size() && s[i] == '^') ++i;
            if (i < s.size() && isdigit((unsigned char)s[i])) {
                expo = 0;
                while (i < s.size() && isdigit((unsigned char)s[i])) expo = expo * 10 + (s[i++] - '0');
            }
            saw = true;
        }
        if (!saw) throw std::invalid_argument("malformed element literal: " + text);
        u64 c = coef % spec->p;
        if (sign < 0) c = c ? spec->p - c : 0;
        FieldElement term = FieldElement(spec, c);
        if (expo) term = term * FieldElement::gen(spec).pow(expo);
        acc = acc + term;
    }
    return acc;
}

/// Fast evaluation engine for GF(2^n), n <= 20: log/exp multiplication plus
/// squaring / theta / inverse lookup tables over raw bit-packed values.
class Gf2Table {
public:
    explicit Gf2Table(FieldRef spec) : spec_(std::move(spec)) {
        if (!spec_->gf2_fast || spec_->k > 20)
            throw std::invalid_argument("Gf2Table: need GF(2^n), n <= 20");
        n_ = spec_->k;
        q_ = (u64)1 << n_;
        // find a primitive element (t almost always works)
        u64 g = 2;
        for (;; ++g) {
            if (FieldElement::from_index(spec_, g).is_primitive()) break;
        }
        exp_.resize(2 * (q_ - 1));
        log_.assign(q_, 0);
        u64 v = 1;
        for (u64 i = 0; i < q_ - 1; ++i) {
            exp_[i] = (uint32_t)v;
            log_[v] = (uint32_t)i;
            v = FieldElement::gf2_mul(v, g, *spec_);
        }
        for (u64 i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];
        sq_.resize(q_);
        for (u64 a = 0; a < q_; ++a) sq_[a] = (uint32_t)FieldElement::gf2_mul(a, a, *spec_);
        if (n_ % 2 == 1) {
            th_.resize(q_);
            for (u64 a = 0; a < q_; ++a) {
                u64 r = a;
                for (unsigned i = 0; i < (n_ - 1) / 2 + 1; ++i) r = sq_[r];
                th_[a] = (uint32_t)r;
            }
        }
    }

    u64 n() const { return n_; }
    u64 q() const { return q_; }
    const FieldRef& spec() const { return spec_; }

    u64 mul(u64 a, u64 b) const {
        if (!a || !b) return 0;
        return exp_[log_[a] + log_[b]];
    }
    u64 sq(u64 a) const { return sq_[a]; }
    u64 theta(u64 a) const { return th_[a]; }
    u64 inv(u64 a) const {
        if (!a) throw std::domain_error("inversion of zero");
        return a == 1 ? 1 : exp_[q_ - 1 - log_[a]];
    }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = sq_[a];
        }
        return r;
    }
    u64 log(u64 a) const { return log_[a]; }
    u64 exp(u64 i) const { return exp_[i % (q_ - 1)]; }

private:
    FieldRef spec_;
    unsigned n_ = 0;
    u64 q_ = 0;
    std::vector<uint32_t> exp_, log_, sq_, th_;
};

}  // namespace qengel::gf
