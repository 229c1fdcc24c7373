#include <catch2/catch_amalgamated.hpp>

#include "qengel/curvecount.hpp"
#include "qengel/bounds.hpp"
#include "qengel/zeta.hpp"

using namespace qengel;
using namespace qengel::poly;

static std::vector<Polynomial<Rat>> load_curve(std::unique_ptr<PolyRing<Rat>>& ring_out) {
    auto sys = assets::load_system(assets::data_dir() + "/psl2/appendixA.txt");
    ring_out = assets::ring_rat(sys);
    return assets::system_polys(sys, "P", ring_out.get());
}

TEST_CASE("appendix curve counts over the small binary and ternary fields") {
    std::unique_ptr<PolyRing<Rat>> ring;
    auto P = load_curve(ring).at(0);
    auto table = assets::load_csv(assets::data_dir() + "/tables/table5.csv");
    for (auto& row : table.rows) {
        gf::u64 p = std::stoull(row[0]);
        unsigned k = (unsigned)std::stoul(row[1]);
        gf::u64 expect = std::stoull(row[2]);
        if (p == 2 && k > 10) continue;  // acceptance scope; the rest run in the CLI
        if (p == 3 && k > 6) continue;
        auto F = gf::field_make(p, k);
        auto rec = vty::count_plane_curve(P, F, "fiber");
        INFO("q = " << p << "^" << k);
        CHECK(rec.count == expect);
    }
}

TEST_CASE("appendix curve counts over prime fields up to 251, plus 523") {
    std::unique_ptr<PolyRing<Rat>> ring;
    auto P = load_curve(ring).at(0);
    auto table = assets::load_csv(assets::data_dir() + "/tables/table6.csv");
    for (auto& row : table.rows) {
        gf::u64 p = std::stoull(row[0]);
        gf::u64 expect = std::stoull(row[1]);
        auto rec = vty::count_plane_curve(P, gf::field_make(p, 1), "fiber");
        INFO("p = " << p);
        CHECK(rec.count == expect);
    }
}

TEST_CASE("fiber method agrees with brute force") {
    std::unique_ptr<PolyRing<Rat>> ring;
    auto P = load_curve(ring).at(0);
    for (auto [p, k] : std::vector<std::pair<gf::u64, unsigned>>{
             {2, 1}, {2, 4}, {2, 9}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {13, 2}, {509, 1}}) {
        auto F = gf::field_make(p, k);
        auto fib = vty::count_plane_curve(P, F, "fiber");
        auto bru = vty::count_plane_curve(P, F, "brute");
        INFO("q = " << p << "^" << k);
        REQUIRE(fib.count == bru.count);
    }
}

TEST_CASE("univariate root counting basics") {
    auto F = gf::field_make(7, 1);
    // (X - 1)(X - 2)^2 has two distinct roots
    vty::UPoly f = {gf::FieldElement(F, 4), gf::FieldElement(F, 5) * -gf::FieldElement::one(F),
                    gf::FieldElement(F, 5), -gf::FieldElement::one(F)};
    // build as expansion of -(x-1)(x-2)^2 = ... simpler: evaluate count on constructed poly
    // p(X) = X^3 - 5X^2 + 8X - 4 over GF(7): roots {1, 2}
    vty::UPoly g = {gf::FieldElement(F, 3), gf::FieldElement(F, 1), gf::FieldElement(F, 2),
                    gf::FieldElement(F, 1)};
    (void)f;
    CHECK(vty::count_roots(g, F) ==
          [&] {
              unsigned n = 0;
              for (gf::u64 i = 0; i < 7; ++i) {
                  gf::FieldElement x(F, i);
                  auto acc = gf::FieldElement::zero(F);
                  for (size_t d = g.size(); d-- > 0;) acc = acc * x + g[d];
                  if (acc.is_zero()) ++n;
              }
              return n;
          }());
}

TEST_CASE("PSL(2) witness tables verify") {
    auto isys = assets::load_system(assets::data_dir() + "/psl2/I.txt");
    SECTION("prime rows (Table 1)") {
        auto t1 = assets::load_csv(assets::data_dir() + "/tables/table1.csv");
        for (auto& row : t1.rows) {
            gf::u64 p = std::stoull(row[0]);
            auto ring = assets::ring_fp(isys, p);
            auto I = assets::system_polys(isys, "I", ring.get());
            auto rep = vty::verify_psl2_witness(I, gf::field_make(p, 1), {row[1], row[2], row[3]});
            INFO("p = " << p);
            REQUIRE(rep.valid);
            // the tables list coordinates alphabetically; a few symmetric rows
            // also satisfy the ring-declaration order, which is tried first
            CHECK((rep.validated_order == "(b,c,t)" || rep.validated_order == "(c,b,t)"));
        }
    }
    SECTION("prime-power rows (Table 2)") {
        auto t2 = assets::load_csv(assets::data_dir() + "/tables/table2.csv");
        for (auto& row : t2.rows) {
            gf::u64 p = std::stoull(row[0]);
            unsigned k = (unsigned)std::stoul(row[1]);
            // witness verification in characteristic p of the curve ideal
            auto ring = assets::ring_fp(isys, p);
            auto I = assets::system_polys(isys, "I", ring.get());
            auto rep = vty::verify_psl2_witness(I, gf::field_make(p, k), {row[2], row[3], row[4]});
            INFO("q = " << p << "^" << k);
            REQUIRE(rep.valid);
        }
    }
    SECTION("a perturbed row fails to land on the curve") {
        auto ring = assets::ring_fp(isys, 5);
        auto I = assets::system_polys(isys, "I", ring.get());
        auto rep = vty::verify_psl2_witness(I, gf::field_make(5, 1), {"1", "2", "3"});
        CHECK(!rep.valid);
        CHECK(!rep.note.empty());
    }
}

TEST_CASE("zeta series from the fixpoint table") {
    auto t3 = assets::load_csv(assets::data_dir() + "/tables/table3.csv");
    std::vector<long> counts;
    for (auto& row : t3.rows) counts.push_back(std::stol(row[1]));
    auto z = vty::zeta_series(counts, 7);
    std::vector<long> expect = {1, 0, -4, -4, 4, 12, 4, -20};
    REQUIRE(z.size() == 8);
    for (size_t i = 0; i < expect.size(); ++i) CHECK(z[i] == mpq_class(expect[i]));

    // all-zero counts give the constant series 1
    auto z0 = vty::zeta_series(std::vector<long>(5, 0), 5);
    CHECK(z0[0] == 1);
    for (size_t i = 1; i < z0.size(); ++i) CHECK(z0[i] == 0);

    // hand expansion: coefficient of T^4 from N2=8, N3=12, N4=16 is -4 + 8 = 4
    auto z4 = vty::zeta_series({0, 8, 12, 16}, 4);
    CHECK(z4[4] == mpq_class(4));

    // deeper coefficients of the published expansion
    auto z23 = vty::zeta_series(counts, 23);
    CHECK(z23[8] == mpq_class(-22));
    CHECK(z23[16] == mpq_class(-179));
    CHECK(z23[23] == mpq_class(-112));
    CHECK(z23[12] == mpq_class(0));  // the T^12 term is absent in the display
}

TEST_CASE("projective boundary of the appendix curve") {
    auto sys = assets::load_system(assets::data_dir() + "/psl2/appendixA.txt");
    auto ring = assets::ring_rat(sys);
    auto P = assets::system_polys(sys, "P", ring.get()).at(0);
    auto Pbar = assets::system_polys(sys, "Pbar", ring.get()).at(0);
    auto rep = vty::projective_boundary_check(P, Pbar);
    CHECK(rep.homogenization_matches);
    CHECK(rep.z0_identity);
    CHECK(rep.three_points_every_p);
    CHECK(rep.char2_point);
}

TEST_CASE("hasse-weil window around the curve counts") {
    // smooth-model genus 8, singular/infinity slack 12, exceptional q excluded
    std::unique_ptr<PolyRing<Rat>> ring;
    auto P = load_curve(ring).at(0);
    auto t6 = assets::load_csv(assets::data_dir() + "/tables/table6.csv");
    for (auto& row : t6.rows) {
        gf::u64 p = std::stoull(row[0]);
        if (p == 2 || p == 23 || p == 37 || p == 523) continue;
        gf::u64 cnt = std::stoull(row[1]);
        INFO("p = " << p);
        CHECK(vty::hasse_weil_window(mpz_class((unsigned long)cnt), mpz_class((unsigned long)p),
                                     8, 12));
    }
}
