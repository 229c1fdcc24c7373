#include <catch2/catch_amalgamated.hpp>

#include "qengel/lie.hpp"

using namespace qengel;
using namespace qengel::lie;
using poly::Fp;

namespace {
// structure constants helper: c[i][j][k]
std::vector<Fp> constants(unsigned dim, std::uint64_t p,
                          const std::vector<std::tuple<unsigned, unsigned, unsigned, long>>& nz) {
    std::vector<Fp> c((size_t)dim * dim * dim, Fp(0, p));
    auto at = [&](unsigned i, unsigned j, unsigned k) -> Fp& {
        return c[((size_t)i * dim + j) * dim + k];
    };
    for (auto& [i, j, k, v] : nz) {
        at(i, j, k) = Fp(0, p).with_value(v);
        at(j, i, k) = at(j, i, k) + Fp(0, p).with_value(-v);
    }
    return c;
}

LieAlgebra<Fp> sl2(std::uint64_t p) {
    // basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
    return lie_make<Fp>(3,
                        constants(3, p,
                                  {{0, 1, 2, 1},    // [e,f] = h
                                   {2, 0, 0, 2},    // [h,e] = 2e
                                   {2, 1, 1, -2}}), // [h,f] = -2f
                        Fp(1, p));
}
}  // namespace

TEST_CASE("lie_make validates structure") {
    // abelian algebra is fine
    CHECK_NOTHROW(lie_make<Fp>(3, std::vector<Fp>(27, Fp(0, 7)), Fp(1, 7)));
    // sl2 over GF(7) passes the Jacobi sweep
    CHECK_NOTHROW(sl2(7));
    // [e,e] != 0 is rejected
    auto bad = std::vector<Fp>(8, Fp(0, 7));
    bad[((0 * 2 + 0) * 2) + 1] = Fp(1, 7);  // c_{00}^1
    CHECK_THROWS(lie_make<Fp>(2, bad, Fp(1, 7)));
    // antisymmetry violation
    auto bad2 = std::vector<Fp>(27, Fp(0, 7));
    bad2[((0 * 3 + 1) * 3) + 2] = Fp(1, 7);  // c_{01}^2 set without c_{10}^2 = -1
    CHECK_THROWS(lie_make<Fp>(3, bad2, Fp(1, 7)));
    // a Jacobi violation: [e0,e1]=e1, [e0,e2]=e2, [e1,e2]=e0 gives
    // [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = 2 e0 != 0
    CHECK_THROWS(lie_make<Fp>(
        3, constants(3, 7, {{0, 1, 1, 1}, {0, 2, 2, 1}, {1, 2, 0, 1}}), Fp(1, 7)));
}

TEST_CASE("v-sequence on small algebras") {
    // abelian: v_1 = 0 for all pairs
    auto ab = lie_make<Fp>(2, std::vector<Fp>(8, Fp(0, 7)), Fp(1, 7));
    for (std::uint64_t xi = 0; xi < 49; ++xi)
        for (std::uint64_t yi = 0; yi < 49; ++yi) {
            LieAlgebra<Fp>::Vec x = {Fp(xi % 7, 7), Fp(xi / 7, 7)};
            LieAlgebra<Fp>::Vec y = {Fp(yi % 7, 7), Fp(yi / 7, 7)};
            REQUIRE(ab.is_zero(ab.v_sequence_eval(x, y, 1)));
        }

    // 2-dim nonabelian solvable: [e0,e1] = e0; v_2 = 0 everywhere, v_1 not
    auto aff = lie_make<Fp>(2, constants(2, 7, {{0, 1, 0, 1}}), Fp(1, 7));
    bool v1_all_zero = true;
    for (std::uint64_t xi = 0; xi < 49; ++xi)
        for (std::uint64_t yi = 0; yi < 49; ++yi) {
            LieAlgebra<Fp>::Vec x = {Fp(xi % 7, 7), Fp(xi / 7, 7)};
            LieAlgebra<Fp>::Vec y = {Fp(yi % 7, 7), Fp(yi / 7, 7)};
            if (!aff.is_zero(aff.v_sequence_eval(x, y, 1))) v1_all_zero = false;
            REQUIRE(aff.is_zero(aff.v_sequence_eval(x, y, 2)));
        }
    CHECK(!v1_all_zero);

    // sl2 over GF(7): some pair has v_3 != 0
    auto L = sl2(7);
    bool some_v3 = false;
    for (std::uint64_t xi = 0; xi < 343 && !some_v3; ++xi)
        for (std::uint64_t yi = 0; yi < 343 && !some_v3; ++yi) {
            LieAlgebra<Fp>::Vec x = {Fp(xi % 7, 7), Fp((xi / 7) % 7, 7), Fp(xi / 49, 7)};
            LieAlgebra<Fp>::Vec y = {Fp(yi % 7, 7), Fp((yi / 7) % 7, 7), Fp(yi / 49, 7)};
            if (!L.is_zero(L.v_sequence_eval(x, y, 3))) some_v3 = true;
        }
    CHECK(some_v3);
}

TEST_CASE("derived series of subspaces") {
    auto ab = lie_make<Fp>(2, std::vector<Fp>(8, Fp(0, 7)), Fp(1, 7));
    CHECK(lie_solvable(ab) == 1);
    auto aff = lie_make<Fp>(2, constants(2, 7, {{0, 1, 0, 1}}), Fp(1, 7));
    CHECK(lie_solvable(aff) == 2);
    CHECK(!lie_solvable(sl2(7)).has_value());

    // 3x3 upper triangular (Borel): basis h1, h2, e12, e23, e13 minus center...
    // use the full 6-dim algebra b3: h1,h2,h3 diagonal, e12,e23,e13
    // [h_i, e_jk] = (delta_ij - delta_ik) e_jk, [e12,e23] = e13
    std::vector<std::tuple<unsigned, unsigned, unsigned, long>> nz = {
        {0, 3, 3, 1},   // [h1, e12] = e12
        {1, 3, 3, -1},  // [h2, e12] = -e12
        {1, 4, 4, 1},   // [h2, e23] = e23
        {2, 4, 4, -1},  // [h3, e23] = -e23
        {0, 5, 5, 1},   // [h1, e13] = e13
        {2, 5, 5, -1},  // [h3, e13] = -e13
        {3, 4, 5, 1}};  // [e12, e23] = e13
    auto b3 = lie_make<Fp>(6, constants(6, 7, nz), Fp(1, 7));
    CHECK(lie_solvable(b3) == 3);  // b3' = n3, n3' = <e13>, then 0
}

TEST_CASE("v identity index") {
    auto ab = lie_make<Fp>(2, std::vector<Fp>(8, Fp(0, 7)), Fp(1, 7));
    auto r = v_identity_index(ab, 4, 7);
    CHECK(r.index == 1);
    CHECK(r.status == SweepStatus::verified);

    auto aff = lie_make<Fp>(2, constants(2, 7, {{0, 1, 0, 1}}), Fp(1, 7));
    auto r2 = v_identity_index(aff, 4, 7);
    CHECK(r2.index == 2);

    auto L = sl2(7);
    auto r3 = v_identity_index(L, 4, 7);
    CHECK(!r3.index.has_value());
    CHECK(r3.status == SweepStatus::refuted_cap);

    // identity detection is monotone on solvable examples: if v_n vanishes
    // everywhere then so does v_{n+1}
    for (unsigned n = 2; n <= 4; ++n) {
        bool all_n = true, all_next = true;
        for (std::uint64_t xi = 0; xi < 49; ++xi)
            for (std::uint64_t yi = 0; yi < 49; ++yi) {
                LieAlgebra<Fp>::Vec x = {Fp(xi % 7, 7), Fp(xi / 7, 7)};
                LieAlgebra<Fp>::Vec y = {Fp(yi % 7, 7), Fp(yi / 7, 7)};
                if (!aff.is_zero(aff.v_sequence_eval(x, y, n))) all_n = false;
                if (!aff.is_zero(aff.v_sequence_eval(x, y, n + 1))) all_next = false;
            }
        if (all_n) CHECK(all_next);
    }

    // above the exhaustive cap the sweep reports sampled-only status
    std::vector<Fp> zero6(6 * 6 * 6, Fp(0, 11));
    auto big = lie_make<Fp>(6, zero6, Fp(1, 11));
    auto r4 = v_identity_index(big, 2, 11, 1u << 20, 500);
    CHECK(r4.index == 1);
    CHECK(r4.status == SweepStatus::sampled_only);
}

TEST_CASE("characteristic guard") {
    CHECK(characteristic_admissible(7));
    CHECK(characteristic_admissible(11));
    CHECK(!characteristic_admissible(2));
    CHECK(!characteristic_admissible(3));
    CHECK(!characteristic_admissible(5));
}

TEST_CASE("v_n lands in the derived subalgebra chain") {
    // v_n values lie in the n-th derived subalgebra (span check over sl2 and b3)
    auto L = sl2(7);
    // derived series of sl2 is constant = sl2, so containment is trivial; use aff
    auto aff = lie_make<Fp>(2, constants(2, 7, {{0, 1, 0, 1}}), Fp(1, 7));
    // aff' = <e0>, aff'' = 0; v_1 in <e0>:
    for (std::uint64_t xi = 0; xi < 49; ++xi)
        for (std::uint64_t yi = 0; yi < 49; ++yi) {
            LieAlgebra<Fp>::Vec x = {Fp(xi % 7, 7), Fp(xi / 7, 7)};
            LieAlgebra<Fp>::Vec y = {Fp(yi % 7, 7), Fp(yi / 7, 7)};
            auto v1 = aff.v_sequence_eval(x, y, 1);
            REQUIRE(v1[1].is_zero());  // second coordinate vanishes in <e0>
        }
    (void)L;
}
