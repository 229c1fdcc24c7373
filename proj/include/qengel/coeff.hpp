#pragma once

// Coefficient domains for the polynomial layer: exact rationals (GMP-backed)
// and prime fields GF(p) with runtime modulus.  No floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qengel::poly {

/// Exact rational coefficient.
struct Rat {
    mpq_class v;

    Rat() : v(0) {}
    Rat(long n) : v(n) {}
    Rat(mpq_class q) : v(std::move(q)) { v.canonicalize(); }

    Rat with_value(long n) const { return Rat(n); }
    bool is_zero() const { return sgn(v) == 0; }
    bool is_one() const { return v == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v + b.v)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v - b.v)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v * b.v)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rat(mpq_class(a.v / b.v));
    }
    Rat operator-() const { return Rat(mpq_class(-v)); }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }

    std::string str() const { return v.get_str(); }
};

/// Residue in GF(p) for a word-sized prime p.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

    Fp with_value(long n) const {
        std::uint64_t r = ((n % (long)p) + (long)p) % (long)p;
        return Fp(r, p);
    }
    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return (std::uint64_t)((unsigned __int128)a * b % m);
    }

    friend Fp operator+(const Fp& a, const Fp& b) { a.chk(b); return Fp((a.v + b.v) % a.p, a.p); }
    friend Fp operator-(const Fp& a, const Fp& b) { a.chk(b); return Fp((a.v + a.p - b.v) % a.p, a.p); }
    friend Fp operator*(const Fp& a, const Fp& b) { a.chk(b); return Fp(mulmod(a.v, b.v, a.p), a.p); }
    friend Fp operator/(const Fp& a, const Fp& b) {
        a.chk(b);
        if (b.v == 0) throw std::domain_error("GF(p) division by zero");
        // b^(p-2)
        std::uint64_t r = 1, base = b.v, e = a.p - 2;
        while (e) {
            if (e & 1) r = mulmod(r, base, a.p);
            e >>= 1;
            base = mulmod(base, base, a.p);
        }
        return Fp(mulmod(a.v, r, a.p), a.p);
    }
    Fp operator-() const { return Fp(v ? p - v : 0, p); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v); }

private:
    void chk(const Fp& o) const {
        if (p != o.p) throw std::invalid_argument("GF(p) modulus mismatch");
    }
};

}  // namespace qengel::poly
