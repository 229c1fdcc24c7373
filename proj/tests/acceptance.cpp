// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit status is the number of
// failed criteria.  Known divergences from the published figures are printed
// with the computed values rather than silently adjusted.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qengel/bounds.hpp"
#include "qengel/corpus.hpp"
#include "qengel/curvecount.hpp"
#include "qengel/groebner.hpp"
#include "qengel/screen.hpp"
#include "qengel/suzuki.hpp"
#include "qengel/symbolic.hpp"
#include "qengel/zeta.hpp"

using namespace qengel;
using namespace qengel::poly;

namespace {

unsigned g_failures = 0;
std::vector<std::string> g_notes;
nlohmann::json g_report = nlohmann::json::array();

void criterion(int num, const std::string& name, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  (%.1fs)  %s%s\n", num, ok ? "PASS" : "FAIL", s, name.c_str(),
                err.empty() ? "" : ("  [exception: " + err + "]").c_str());
    std::fflush(stdout);
    g_report.push_back({{"criterion", num}, {"name", name}, {"pass", ok}, {"elapsed_s", s}});
    if (!ok) ++g_failures;
}

void note(const std::string& s) {
    g_notes.push_back(s);
}

bool same_set_up_to_sign(std::vector<Polynomial<Rat>> a, std::vector<Polynomial<Rat>> b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (auto& p : a) {
        bool hit = false;
        for (size_t i = 0; i < b.size(); ++i) {
            if (used[i]) continue;
            if (equal_up_to_sign(p, b[i])) {
                used[i] = true;
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

int main() {
    const std::string dir = assets::data_dir();
    const unsigned jobs = par::default_jobs();
    std::printf("acceptance suite (assets: %s, jobs: %u)\n", dir.c_str(), jobs);

    // ---- 1. ideal regeneration --------------------------------------------------
    criterion(1, "ideal regeneration: published generators of the curve and universal ideals", [&] {
        auto isys = assets::load_system(dir + "/psl2/I.txt");
        auto ring = assets::ring_rat(isys);
        auto published = assets::system_polys(isys, "I", ring.get());
        auto [X, Y] = psl2_symbolic(ring.get());
        if (!same_set_up_to_sign(equation_ideal_u1u2(X, Y), published)) return false;

        auto vsys = assets::load_system(dir + "/suzuki/IV.txt");
        auto vring = assets::ring_fp(vsys, 2);
        auto vpub = assets::system_polys(vsys, "I", vring.get());
        auto [SX, SY] = suzuki_symbolic(vring.get(), false);
        auto mine = equation_ideal_u1u2(SX, SY);
        std::set<std::string> ps, ms;
        for (auto& p : vpub) ps.insert(p.str());
        for (auto& p : mine) ms.insert(p.str());
        return ps == ms && mine.size() == 16;
    });

    // ---- 2. Groebner certificates ------------------------------------------------
    criterion(2, "Groebner certificates: basis property, lifts, and I : h = I", [&] {
        auto isys = assets::load_system(dir + "/psl2/I.txt");
        auto jsys = assets::load_system(dir + "/psl2/J.txt");
        {
            auto ring = assets::ring_rat(isys);
            auto J = assets::system_polys(jsys, "J", ring.get());
            if (!is_groebner(J)) return false;
            auto I = assets::system_polys(isys, "I", ring.get());
            auto M = assets::system_matrix(assets::load_system(dir + "/psl2/lift_IJ.txt"), "M",
                                           ring.get());
            if (!lift_verify(I, J, M)) return false;
            auto N = assets::system_matrix(assets::load_system(dir + "/psl2/lift_JI.txt"), "N",
                                           ring.get());
            if (!lift_verify(J, I, N)) return false;
            auto h = assets::system_polys(assets::load_system(dir + "/psl2/h.txt"), "h",
                                          ring.get()).at(0);
            auto M2 = assets::system_matrix(assets::load_system(dir + "/psl2/lift_h2I.txt"), "M",
                                            ring.get());
            std::vector<Polynomial<Rat>> h2I;
            for (auto& f : I) h2I.push_back(h * h * f);
            if (!lift_verify({J[0], J[1]}, h2I, M2)) return false;
        }
        for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
            auto ring = assets::ring_fp(isys, p);
            auto J = assets::system_polys(jsys, "J", ring.get());
            if (!is_groebner(J)) return false;
        }
        for (std::uint64_t p : {7ull, 11ull}) {
            auto ring = assets::ring_fp(isys, p);
            auto I = assets::system_polys(isys, "I", ring.get());
            auto h = assets::system_polys(assets::load_system(dir + "/psl2/h.txt"), "h",
                                          ring.get()).at(0);
            if (!ideal_equal(ideal_quotient(I, h), I)) return false;
        }
        return true;
    });

    // ---- 3. Hilbert data ----------------------------------------------------------
    criterion(3, "Hilbert polynomial 10t-11 in characteristics 0,2,3,5; threshold 594", [&] {
        auto ksys = assets::load_system(dir + "/psl2/K.txt");
        {
            auto ring = assets::ring_rat(ksys);
            auto K = assets::system_polys(ksys, "K", ring.get());
            auto h = homogenize_hilbert(K, (unsigned)ring->var_index("w"));
            if (h.degree != 10 || h.arith_genus != 12) return false;
        }
        for (std::uint64_t p : {2ull, 3ull, 5ull}) {
            auto ring = assets::ring_fp(ksys, p);
            auto K = assets::system_polys(ksys, "K", ring.get());
            auto h = homogenize_hilbert(K, (unsigned)ring->var_index("w"));
            if (h.degree != 10 || h.arith_genus != 12) return false;
        }
        return vty::hw_threshold(12, 10) == 594;
    });

    // ---- 4. PSL(2) witnesses --------------------------------------------------------
    criterion(4, "PSL(2) witnesses: every row of the prime and prime-power tables", [&] {
        auto isys = assets::load_system(dir + "/psl2/I.txt");
        auto t1 = assets::load_csv(dir + "/tables/table1.csv");
        for (auto& row : t1.rows) {
            std::uint64_t p = std::stoull(row[0]);
            auto ring = assets::ring_fp(isys, p);
            auto I = assets::system_polys(isys, "I", ring.get());
            auto rep = vty::verify_psl2_witness(I, gf::field_make(p, 1), {row[1], row[2], row[3]});
            if (!rep.valid) {
                note("witness row p=" + row[0] + " failed");
                return false;
            }
        }
        auto t2 = assets::load_csv(dir + "/tables/table2.csv");
        for (auto& row : t2.rows) {
            std::uint64_t p = std::stoull(row[0]);
            unsigned k = (unsigned)std::stoul(row[1]);
            auto ring = assets::ring_fp(isys, p);
            auto I = assets::system_polys(isys, "I", ring.get());
            auto rep = vty::verify_psl2_witness(I, gf::field_make(p, k), {row[2], row[3], row[4]});
            if (!rep.valid) {
                note("witness row q=" + row[0] + "^" + row[1] + " failed");
                return false;
            }
        }
        return true;
    });

    // ---- 5. PSL(3,3) -------------------------------------------------------------------
    criterion(5, "PSL(3,3): witness pair solves u1 = u2 nontrivially; closure order 5616", [&] {
        auto [x, y] = mats::psl33_witness();
        auto u1 = mats::quasi_engel_eval(words::canonical_w(), x, y, 1);
        auto u2 = mats::quasi_engel_eval(words::canonical_w(), x, y, 2);
        if (!mats::projective_eq(u1, u2) || mats::projectively_identity(u1)) return false;
        grp::GroupMat gx{x, true}, gy{y, true};
        auto id = grp::GroupMat{mats::MatrixElement::identity(3, x.spec()), true}.canonical();
        return grp::closure_order<grp::GroupMat>({gx.canonical(), gy.canonical()}, 6000, id) == 5616;
    });

    // ---- 6. Suzuki counts ----------------------------------------------------------------
    {
        auto D = vty::SuzukiData::load(dir);
        criterion(6, "Suzuki counts: #V_3 = 13, #V_5 = 40, N_1..N_7 = Table-3 values", [&] {
            bool ok = true;
            auto r3 = vty::suzuki_equation_count(D, 3, jobs);
            if (r3.count != 13) {
                note("#V_3(F_8) computed " + std::to_string(r3.count) + ", expected 13");
                ok = false;
            }
            auto r5 = vty::suzuki_equation_count(D, 5, jobs);
            if (r5.count != 40) {
                note("#V_5(F_32) computed " + std::to_string(r5.count) +
                     " by exhaustive enumeration (three independent methods agree); the published "
                     "figure 40 is irreproducible as a rational point count and is consistent "
                     "only with a multiplicity/closure count -- the fixpoint table value N_5 = 20 "
                     "plus the zero tuple gives exactly 21");
                ok = false;
            }
            const long expect[7] = {0, 8, 12, 16, 20, 56, 140};
            for (unsigned n = 1; n <= 7; ++n) {
                auto rec = vty::fixpoint_count(D, n, jobs);
                if (rec.count != (gf::u64)expect[n - 1] || rec.partial) {
                    note("N_" + std::to_string(n) + " computed " + std::to_string(rec.count) +
                         ", expected " + std::to_string(expect[n - 1]));
                    ok = false;
                }
            }
            return ok;
        });

        // stretch items are reported but non-gating
        {
            const long expect[6] = {240, 516, 1088, 2332, 3904, 8372};
            bool stretch_ok = true;
            auto t0 = std::chrono::steady_clock::now();
            for (unsigned n = 8; n <= 13; ++n) {
                auto rec = vty::fixpoint_count(D, n, jobs, true);
                if (rec.count != (gf::u64)expect[n - 8] || rec.partial) stretch_ok = false;
            }
            double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::printf("stretch    : %s  (%.1fs)  N_8..N_13 per-fiber match the published table "
                        "(non-gating)\n",
                        stretch_ok ? "PASS" : "FAIL", s);
        }

        // ---- 7. Suzuki fixpoint witnesses ---------------------------------------------------
        criterion(7, "Suzuki fixpoint witnesses for p = 3..47 with the stated minimal polynomials",
                  [&] {
                      auto fxs = assets::load_fixpoints(dir + "/suzuki/fixpoints.txt");
                      if (fxs.size() != 14) return false;
                      for (auto& w : fxs) {
                          std::vector<gf::u64> mod(w.p + 1, 0);
                          std::string s = w.minimal_poly;
                          size_t pos = 0;
                          while (pos < s.size()) {
                              size_t plus = s.find('+', pos);
                              std::string term =
                                  s.substr(pos, plus == std::string::npos ? plus : plus - pos);
                              if (term == "1") mod[0] ^= 1;
                              else if (term == "t") mod[1] ^= 1;
                              else mod[std::stoul(term.substr(2))] ^= 1;
                              if (plus == std::string::npos) break;
                              pos = plus + 1;
                          }
                          auto F = gf::field_make(2, w.p, mod);
                          std::array<gf::FieldElement, 8> pt = {
                              gf::parse_element(F, w.coords.at('a')),
                              gf::parse_element(F, w.coords.at('b')),
                              gf::parse_element(F, w.coords.at('c')),
                              gf::parse_element(F, w.coords.at('d')),
                              gf::parse_element(F, w.coords.at('v')),
                              gf::parse_element(F, w.coords.at('w')),
                              gf::parse_element(F, w.coords.at('x')),
                              gf::parse_element(F, w.coords.at('y'))};
                          auto rep = vty::verify_fixpoint(D, w.p, mod, pt);
                          if (!rep.valid) {
                              note("fixpoint witness p=" + std::to_string(w.p) + " failed (theta " +
                                   (rep.theta_consistent ? "ok" : "bad") + ", surface " +
                                   (rep.on_vprime ? "ok" : "bad") + ")");
                              return false;
                          }
                      }
                      return true;
                  });

        // ---- 8. structure checks -----------------------------------------------------------
        criterion(8, "V = W for k = 1,2,3 and alpha^n-fixpoint-free singular locus for odd n <= 7",
                  [&] {
                      auto vsys = assets::load_system(dir + "/suzuki/IV.txt");
                      auto vring = assets::ring_fp(vsys, 2);
                      auto [X0, Y0] = suzuki_symbolic(vring.get(), true);
                      auto V0 = equation_ideal_u1u2(X0, Y0);
                      for (unsigned k : {1u, 2u, 3u}) {
                          auto rep = vty::v_equals_w_check(D.IV, V0, k, jobs);
                          if (!rep.equal) return false;
                      }
                      for (unsigned n : {3u, 5u, 7u})
                          if (!vty::singular_locus_fixfree(D, n, jobs)) return false;
                      return true;
                  });
    }

    // ---- 9. bounds ---------------------------------------------------------------------------
    criterion(9, "bounds: Adolphson-Sperber values, Lefschetz positivity beyond n = 48", [&] {
        if (vty::adolphson_sperber(3, 3, 7) != 44232) return false;
        if (vty::adolphson_sperber(3, 3, 3) != 5992) return false;
        if (vty::adolphson_sperber(3, 3, 5) != 19160) return false;
        mpz_class b1 = 675, b2 = mpz_class(1) << 22;
        for (unsigned n = 49; n <= 301; n += 2)
            if (!vty::lefschetz_positive(n, b1, b2)) return false;
        unsigned t = vty::lefschetz_threshold(b1, b2);
        if (t > 48) return false;
        note("Lefschetz threshold: least odd n with positive bound is " + std::to_string(t) +
             " (the published 48 is sufficient, not minimal)");
        note("Euler-characteristic input check: direct 2^2 * D_{4,2}(1,15,15) = " +
             vty::adolphson_sperber(4, 2, 14).get_str() +
             ", the published intermediate is 1128908; the discrepancy is recorded without "
             "asserting either value");
        return true;
    });

    // ---- 10. zeta -----------------------------------------------------------------------------
    criterion(10, "zeta series of alpha matches the published expansion to order 7", [&] {
        auto t3 = assets::load_csv(dir + "/tables/table3.csv");
        std::vector<long> counts;
        for (auto& row : t3.rows) counts.push_back(std::stol(row[1]));
        auto z = vty::zeta_series(counts, 7);
        const long expect[8] = {1, 0, -4, -4, 4, 12, 4, -20};
        for (int i = 0; i <= 7; ++i)
            if (z[i] != expect[i]) return false;
        return true;
    });

    // ---- 11. appendix plane curve ---------------------------------------------------------------
    criterion(11, "plane-curve counts (binary/ternary/prime tables), substitution identities, "
                  "boundary, genus", [&] {
        auto psys = assets::load_system(dir + "/psl2/appendixA.txt");
        auto ring = assets::ring_rat(psys);
        auto P = assets::system_polys(psys, "P", ring.get()).at(0);
        auto Pbar = assets::system_polys(psys, "Pbar", ring.get()).at(0);

        auto t5 = assets::load_csv(dir + "/tables/table5.csv");
        for (auto& row : t5.rows) {
            std::uint64_t p = std::stoull(row[0]);
            unsigned k = (unsigned)std::stoul(row[1]);
            if (p == 2 && k > 10) continue;
            if (p == 3 && k > 6) continue;
            auto rec = vty::count_plane_curve(P, gf::field_make(p, k), "fiber", jobs);
            if (rec.count != std::stoull(row[2])) {
                note("A(F_" + row[0] + "^" + row[1] + ") computed " + std::to_string(rec.count) +
                     ", table says " + row[2]);
                return false;
            }
        }
        auto t6 = assets::load_csv(dir + "/tables/table6.csv");
        for (auto& row : t6.rows) {
            auto rec = vty::count_plane_curve(P, gf::field_make(std::stoull(row[0]), 1), "fiber",
                                              jobs);
            if (rec.count != std::stoull(row[1])) {
                note("A(F_" + row[0] + ") computed " + std::to_string(rec.count) +
                     ", table says " + row[1]);
                return false;
            }
        }

        // Lemma-level substitution identities on the lex basis
        auto jsys = assets::load_system(dir + "/psl2/J.txt");
        auto jring = assets::ring_rat(jsys);
        auto J = assets::system_polys(jsys, "J", jring.get());
        unsigned cv = (unsigned)jring->var_index("c");
        auto U = parse_poly(jring.get(), "t2-2t-1");
        auto V = parse_poly(jring.get(), "tb");
        auto one = Polynomial<Rat>::constant(jring.get(), Rat(1));
        auto b = parse_poly(jring.get(), "b");
        auto tb = parse_poly(jring.get(), "tb");
        auto tb2 = parse_poly(jring.get(), "tb2");
        if (!substitution_identity_check(b, J[1], cv, U, V, J[0])) return false;
        if (!substitution_identity_check(one, J[2], cv, U, V, Polynomial<Rat>(jring.get())))
            return false;
        if (!substitution_identity_check(tb, J[3], cv, U, V, -J[0])) return false;
        if (!substitution_identity_check(tb2, J[4], cv, U, V, (one - tb) * J[0])) return false;

        auto brep = vty::projective_boundary_check(P, Pbar);
        if (!brep.homogenization_matches || !brep.z0_identity || !brep.three_points_every_p ||
            !brep.char2_point)
            return false;

        return vty::genus_from_singularities(7, {1, 1, 1, 4}) == 8 &&
               vty::genus_from_singularities(7, {2, 1, 1, 5}) == 6;
    });

    // ---- 12. group-theory property suite ---------------------------------------------------------
    criterion(12, "group corpus: quasi-Engel index iff solvable, monotone identity, Zorn variant",
              [&] {
                  auto corpus = grp::load_corpus(dir + "/groups/corpus.json");
                  auto spec = words::SequenceSpec::quasi_engel();
                  for (auto& e : corpus) {
                      auto solv = e.group.solvability_class();
                      auto idx = e.group.identity_index(spec, e.solvable ? 8u : 4u);
                      if (solv.has_value() != e.solvable || idx.has_value() != e.solvable) {
                          note("corpus " + e.name + ": solvable/index mismatch");
                          return false;
                      }
                      // monotone identity, exhaustively over pairs
                      auto& G = e.group;
                      for (std::uint32_t g = 0; g < G.order(); ++g)
                          for (std::uint32_t h = 0; h < G.order(); ++h) {
                              std::uint32_t u = G.word_eval(spec.initial, g, h);
                              for (unsigned n = 1; n <= 6; ++n) {
                                  std::uint32_t next = G.sequence_step(spec, u, g, h);
                                  if (u == G.id() && next != G.id()) {
                                      note("monotonicity failed in " + e.name);
                                      return false;
                                  }
                                  u = next;
                              }
                          }
                      auto zorn = grp::zorn_variant_check(e.group, words::canonical_w(), 6);
                      if (!zorn.equivalent || zorn.nilpotent != e.nilpotent) {
                          note("Zorn variant failed in " + e.name);
                          return false;
                      }
                  }
                  // screening regression: the three short flagged words
                  auto reps = screen::screen_words(5, {5, 7, 11, 13}, jobs, true);
                  std::set<std::string> flagged;
                  for (auto& r : reps) flagged.insert(r.word.str());
                  return flagged.count("x^-1*y*x*y^-1*x") && flagged.count("x^-2*y^-1*x") &&
                         flagged.count("y^-2*x^-1*y");
              });

    if (!g_notes.empty()) {
        std::printf("\nnotes:\n");
        for (auto& n : g_notes) std::printf("  - %s\n", n.c_str());
    }
    nlohmann::json doc = {{"criteria", g_report}, {"notes", g_notes}, {"failures", g_failures}};
    std::ofstream("acceptance_report.json") << doc.dump(2) << "\n";
    std::printf("\n%u of 12 criteria failed (machine-readable: acceptance_report.json)\n",
                g_failures);
    return (int)g_failures;
}
