#include <catch2/catch_amalgamated.hpp>

#include "qengel/gf.hpp"

using namespace qengel;
using gf::FieldElement;

TEST_CASE("field construction and validation") {
    auto f8 = gf::field_make(2, 3, {1, 1, 0, 1});  // t^3 + t + 1
    CHECK(f8->order_u64() == 8);
    CHECK(f8->gf2_fast);

    CHECK_NOTHROW(gf::field_make(2, 1));  // GF(2), modulus t
    CHECK(gf::field_make(2, 1)->modulus == std::vector<gf::u64>({0, 1}));

    // t^3 + 1 = (t+1)(t^2+t+1) is reducible
    CHECK_THROWS(gf::field_make(2, 3, {1, 0, 0, 1}));
    CHECK_THROWS(gf::field_make(4, 1));   // non-prime characteristic
    CHECK_THROWS(gf::field_make(2, 2, {1, 1, 1, 1}));  // degree mismatch
}

TEST_CASE("default moduli are the published small ones") {
    CHECK(gf::default_modulus(2, 3) == std::vector<gf::u64>({1, 1, 0, 1}));   // t^3+t+1
    CHECK(gf::default_modulus(2, 5) == std::vector<gf::u64>({1, 0, 1, 0, 0, 1}));  // t^5+t^2+1
    CHECK(gf::default_modulus(2, 7) == std::vector<gf::u64>({1, 1, 0, 0, 0, 0, 0, 1}));  // t^7+t+1
}

TEST_CASE("arithmetic in GF(2^3)") {
    auto f = gf::field_make(2, 3, {1, 1, 0, 1});
    FieldElement t = FieldElement::gen(f);
    CHECK(t * (t * t) == FieldElement::from_coeffs(f, {1, 1}));  // t^3 = t + 1
    // inv(t) = t^2 + 1, found by exhaustive search
    FieldElement found = FieldElement::zero(f);
    for (gf::u64 i = 1; i < 8; ++i) {
        FieldElement x = FieldElement::from_index(f, i);
        if ((x * t).is_one()) found = x;
    }
    CHECK(found == FieldElement::from_coeffs(f, {1, 0, 1}));
    CHECK(t.inv() == found);
}

TEST_CASE("arithmetic in GF(5)") {
    auto f = gf::field_make(5, 1);
    FieldElement two(f, 2);
    CHECK(two.inv() == FieldElement(f, 3));
    CHECK(gf::elem_arith(two, FieldElement(f, 4), gf::ArithOp::add) == FieldElement(f, 1));
    CHECK_THROWS(FieldElement::zero(f).inv());
}

TEST_CASE("frobenius powers") {
    auto f = gf::field_make(2, 5);
    for (gf::u64 i = 0; i < 32; ++i) {
        FieldElement a = FieldElement::from_index(f, i);
        CHECK(a.frob_pow(5) == a);
        CHECK(a.frob_pow(1) == a * a);
    }
    CHECK(gf::frob_pow(FieldElement::zero(f), 3).is_zero());
    auto f8 = gf::field_make(2, 3, {1, 1, 0, 1});
    FieldElement t = FieldElement::gen(f8);
    CHECK(t.frob_pow(1) == t * t);
    // homomorphism on a sampled pair set
    auto f9 = gf::field_make(3, 2);
    for (gf::u64 i = 0; i < 9; ++i)
        for (gf::u64 j = 0; j < 9; ++j) {
            FieldElement a = FieldElement::from_index(f9, i), b = FieldElement::from_index(f9, j);
            CHECK((a + b).frob_pow(1) == a.frob_pow(1) + b.frob_pow(1));
            CHECK((a * b).frob_pow(1) == a.frob_pow(1) * b.frob_pow(1));
        }
}

TEST_CASE("theta is the half Frobenius") {
    auto f8 = gf::field_make(2, 3, {1, 1, 0, 1});
    FieldElement t = FieldElement::gen(f8);
    CHECK(gf::theta_map(FieldElement::zero(f8)).is_zero());
    CHECK(gf::theta_map(FieldElement::one(f8)).is_one());
    // theta(t) = t^4 = t^2 + t
    CHECK(gf::theta_map(t) == FieldElement::from_coeffs(f8, {0, 1, 1}));

    for (unsigned n : {3u, 5u, 7u, 9u, 11u}) {
        auto f = gf::field_make(2, n);
        for (gf::u64 i = 0; i < f->order_u64(); ++i) {
            FieldElement a = FieldElement::from_index(f, i);
            REQUIRE(a.theta().theta() == a * a);
        }
    }
    CHECK_THROWS(gf::theta_map(FieldElement::one(gf::field_make(2, 4))));
}

TEST_CASE("inv is an involution on nonzero elements") {
    for (auto [p, k] : std::vector<std::pair<gf::u64, unsigned>>{{2, 11}, {3, 5}, {7, 3}}) {
        auto f = gf::field_make(p, k);
        gf::u64 q = f->order_u64();
        for (gf::u64 i = 1; i < q; ++i) {
            FieldElement a = FieldElement::from_index(f, i);
            REQUIRE(a.inv().inv() == a);
            REQUIRE((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("element text forms round-trip") {
    auto f = gf::field_make(2, 5);
    for (gf::u64 i = 0; i < 32; ++i) {
        FieldElement a = FieldElement::from_index(f, i);
        CHECK(gf::parse_element(f, a.str()) == a);
        CHECK(gf::parse_element(f, a.hex()) == a);
    }
    auto f49 = gf::field_make(7, 2);
    for (gf::u64 i = 0; i < 49; ++i) {
        FieldElement a = FieldElement::from_index(f49, i);
        CHECK(gf::parse_element(f49, a.str()) == a);
    }
    CHECK(gf::parse_element(f49, "-1") == -FieldElement::one(f49));
    CHECK(gf::parse_element(f, "t^4+t^2+1") ==
          FieldElement::from_coeffs(f, {1, 0, 1, 0, 1}));
}

TEST_CASE("witness-scale field arithmetic: GF(2^47)") {
    std::vector<gf::u64> mod(48, 0);
    mod[0] = mod[5] = mod[47] = 1;  // t^47 + t^5 + 1
    auto f = gf::field_make(2, 47, mod);
    FieldElement t = FieldElement::gen(f);
    FieldElement x = t.pow(12345);
    CHECK((x * x.inv()).is_one());
    CHECK(x.theta().theta() == x * x);
    CHECK(x.frob_pow(47) == x);
}

TEST_CASE("primitivity check") {
    auto f8 = gf::field_make(2, 3);
    CHECK(FieldElement::gen(f8).is_primitive());  // t generates F_8^* (order 7 prime)
    auto f9 = gf::field_make(3, 2);
    unsigned prim = 0;
    for (gf::u64 i = 1; i < 9; ++i)
        if (FieldElement::from_index(f9, i).is_primitive()) ++prim;
    CHECK(prim == 4);  // phi(8)
}

TEST_CASE("Gf2Table agrees with FieldElement arithmetic") {
    auto f = gf::field_make(2, 7);
    gf::Gf2Table T(f);
    for (gf::u64 a = 0; a < 128; a += 5)
        for (gf::u64 b = 0; b < 128; b += 3) {
            FieldElement A = FieldElement::from_index(f, a), B = FieldElement::from_index(f, b);
            REQUIRE(T.mul(a, b) == (A * B).index());
        }
    for (gf::u64 a = 0; a < 128; ++a) {
        FieldElement A = FieldElement::from_index(f, a);
        REQUIRE(T.sq(a) == (A * A).index());
        REQUIRE(T.theta(a) == A.theta().index());
        if (a) REQUIRE(T.inv(a) == A.inv().index());
    }
}
