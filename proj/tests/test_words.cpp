#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "qengel/words.hpp"

using namespace qengel::words;

// independent reduction oracle: repeatedly delete the first cancelling pair
static std::vector<Letter> slow_reduce(std::vector<Letter> v) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] == -v[i + 1]) {
                v.erase(v.begin() + i, v.begin() + i + 2);
                changed = true;
                break;
            }
    }
    return v;
}

TEST_CASE("free reduction") {
    CHECK(free_reduce({+1, -1}).is_identity());
    CHECK(FreeWord::parse("x*x^-1").is_identity());
    CHECK(FreeWord::parse("x^-2*y^-1*x") == canonical_w());
    CHECK(canonical_w().length() == 4);
    CHECK(FreeWord::parse("x*y*y^-1*x^-1*x") == FreeWord::x());

    // idempotent and length-nonincreasing, cross-checked against the slow oracle
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> raw;
        for (int i = 0; i < 30; ++i) {
            static const Letter abc[4] = {1, -1, 2, -2};
            raw.push_back(abc[rng() % 4]);
        }
        FreeWord w(raw);
        CHECK(w.letters() == slow_reduce(raw));
        CHECK(FreeWord(w.letters()) == w);
        CHECK(w.length() <= raw.size());
    }
}

TEST_CASE("quasi-Engel sequence terms") {
    auto spec = SequenceSpec::quasi_engel();
    CHECK(build_sequence(spec, 1) == canonical_w());
    // u_2 computed by the independent oracle below and frozen:
    // A = x u x^-1 = x^-1 y^-1, B = y u y^-1; u_2 = A B A^-1 B^-1
    FreeWord u2 = build_sequence(spec, 2);
    CHECK(u2 == FreeWord::parse("x^-3*y^-1*x^2*y*x^-1*y*x^2*y^-1"));
    CHECK(u2.length() == 12);

    // oracle re-derivation with raw letter juggling
    auto conj = [](const FreeWord& g, const FreeWord& u) {
        std::vector<Letter> v = g.letters();
        for (auto c : u.letters()) v.push_back(c);
        for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it)
            v.push_back((Letter)-*it);
        return FreeWord(slow_reduce(v));
    };
    FreeWord A = conj(FreeWord::x(), canonical_w());
    FreeWord B = conj(FreeWord::y(), canonical_w());
    std::vector<Letter> comm = A.letters();
    for (auto c : B.letters()) comm.push_back(c);
    for (auto it = A.letters().rbegin(); it != A.letters().rend(); ++it) comm.push_back((Letter)-*it);
    for (auto it = B.letters().rbegin(); it != B.letters().rend(); ++it) comm.push_back((Letter)-*it);
    CHECK(FreeWord(slow_reduce(comm)) == u2);

    CHECK_THROWS(build_sequence(spec, 0));

    // growth sanity: |u_{n+1}| <= 4 |u_n| + 8
    FreeWord u = canonical_w();
    for (unsigned n = 2; n <= 7; ++n) {
        FreeWord nxt = build_sequence(spec, n);
        CHECK(nxt.length() <= 4 * u.length() + 8);
        u = nxt;
    }
}

TEST_CASE("engel sequence") {
    auto spec = SequenceSpec::engel(FreeWord::parse("y*x*y^-1*x^-1"), 1);
    CHECK(build_sequence(spec, 1) == FreeWord::parse("y*x*y^-1*x^-1"));
    // e_2 = [e_1, x]
    CHECK(build_sequence(spec, 2) ==
          FreeWord::parse("y*x*y^-1*x^-1") * FreeWord::x() *
              FreeWord::parse("y*x*y^-1*x^-1").inverse() * FreeWord::x().inverse());
}

TEST_CASE("equation_normalize") {
    auto spec = SequenceSpec::quasi_engel();
    FreeWord e = equation_normalize(1, 2, spec);
    CHECK(e == build_sequence(spec, 1) * build_sequence(spec, 2).inverse());
    CHECK_THROWS(equation_normalize(1, 1, spec));
}

TEST_CASE("initial word enumeration") {
    auto l1 = enumerate_initial_words(1);
    CHECK(l1.size() == 4);
    auto l2 = enumerate_initial_words(2);
    CHECK(l2.size() == 16);  // 4 + 12
    unsigned len2 = 0;
    for (auto& w : l2)
        if (w.length() == 2) ++len2;
    CHECK(len2 == 12);

    auto l5 = enumerate_initial_words(5);
    std::set<FreeWord> s(l5.begin(), l5.end());
    CHECK(s.size() == l5.size());  // deduplicated
    CHECK(s.count(FreeWord::parse("x^-1*y*x*y^-1*x")));
    CHECK(s.count(FreeWord::parse("x^-2*y^-1*x")));
    size_t expect = 0, pw = 4;
    for (int l = 1; l <= 5; ++l) {
        expect += pw;
        pw *= 3;
    }
    CHECK(l5.size() == expect);
}

TEST_CASE("word text round-trip") {
    for (auto& w : enumerate_initial_words(4)) CHECK(FreeWord::parse(w.str()) == w);
    CHECK(FreeWord::parse("1").is_identity());
    CHECK(FreeWord().str() == "1");
}
