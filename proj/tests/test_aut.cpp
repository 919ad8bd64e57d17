#include <doctest.h>

#include <set>

#include "enriques/aut.hpp"
#include "helpers.hpp"

using namespace enriques;

namespace {

LatticeVector vec(std::initializer_list<Coord> xs) {
    LatticeVector v;
    int i = 0;
    for (Coord x : xs) v[i++] = x;
    return v;
}

// coordinates of R8 * gamma^k for the bundled case 145
LatticeVector r8_orbit_closed_form(long long k) {
    long long s = (k % 2 == 0) ? 1 : -1;
    long long kk = k * k;
    auto half = [](long long x) {
        REQUIRE(x % 2 == 0);
        return x / 2;
    };
    return vec({half(8 * kk + 8 * k + 2 - 2 * s), half(4 * kk + 2 * k + 1 - s),
                half(8 * kk + 8 * k + 4 - 2 * s), half(14 * kk + 14 * k + 4 - 4 * s),
                half(12 * kk + 12 * k + 3 - 3 * s), half(10 * kk + 10 * k + 2 - 2 * s),
                half(8 * kk + 8 * k + 1 - s), 3 * (kk + k), 2 * (kk + k), kk + k});
}

}  // namespace

TEST_CASE("word application") {
    const auto& d = case145();
    LatticeVector r8 = d.system.curve(8);
    CHECK(apply_word(r8, {{"gamma", 1}}, d.gens) == vec({10, 4, 11, 18, 15, 12, 9, 6, 4, 2}));
    CHECK(apply_word(r8, {}, d.gens) == r8);
    CHECK(apply_word(r8, {{"gamma", -1}}, d.gens) == d.system.curve(1));
    CHECK_THROWS_AS(apply_word(r8, {{"delta", 1}}, d.gens), UnknownGeneratorError);
}

TEST_CASE("group relations") {
    const auto& gens = case145().gens;
    RelationReport rep = check_relations(
        gens, {{{{"eps", 2}}, {}},
               {{{"eps", 1}, {"gamma", 1}}, {{"gamma", -1}, {"eps", 1}}},
               {{{"gamma", 1}}, {}}});
    CHECK(rep.items[0].equal);
    CHECK(rep.items[1].equal);
    CHECK(!rep.items[2].equal);  // gamma has infinite order
    CHECK(!rep.all_equal);
}

TEST_CASE("orbit of R8 follows the closed form on [-20,20]") {
    const auto& d = case145();
    for (long long k = -20; k <= 20; ++k) {
        Word w{{"gamma", static_cast<int>(k)}};
        CHECK(apply_word(d.system.curve(8), w, d.gens) == r8_orbit_closed_form(k));
    }
}

TEST_CASE("orbit curves are pairwise distinct") {
    std::set<LatticeVector> seen;
    for (long long k = -20; k <= 20; ++k) CHECK(seen.insert(r8_orbit_closed_form(k)).second);
}

TEST_CASE("expand_orbit") {
    const auto& d = case145();
    SUBCASE("radius 0 is the identity") {
        CurveSystem s = expand_orbit(d.system, d.gens, 0);
        CHECK(s.curves == d.system.curves);
        CHECK(s.labels == d.system.labels);
    }
    SUBCASE("radius 1 adds the printed product") {
        CurveSystem s = expand_orbit(d.system, d.gens, 1);
        CHECK(s.find(vec({10, 4, 11, 18, 15, 12, 9, 6, 4, 2})) >= 0);
        // originals keep their positions
        for (int i = 0; i < d.system.size(); ++i) CHECK(s.curve(i) == d.system.curve(i));
    }
    SUBCASE("radius k reaches exactly the expected R8 translates") {
        CurveSystem s = expand_orbit(d.system, d.gens, 3);
        for (long long k = -3; k <= 3; ++k) CHECK(s.find(r8_orbit_closed_form(k)) >= 0);
        CHECK(spans_full_rank(s));
    }
    SUBCASE("deterministic labels and order") {
        CurveSystem a = expand_orbit(d.system, d.gens, 2);
        CurveSystem b = expand_orbit(d.system, d.gens, 2);
        CHECK(a.curves == b.curves);
        CHECK(a.labels == b.labels);
    }
}

TEST_CASE("quasipolynomial fitting") {
    const auto& d = case145();
    const CurveSystem& s = d.system;
    LatticeVector da = halve(s.curve(0) + s.curve(1) + s.curve(3) + s.curve(8) +
                             2 * (s.curve(4) + s.curve(5) + s.curve(6) + s.curve(7) + s.curve(9)));
    LatticeVector db = halve(s.curve(1) + s.curve(5) + s.curve(7) + s.curve(8) +
                             2 * (s.curve(4) + s.curve(3) + s.curve(2) + s.curve(0) + s.curve(9)));

    std::vector<std::pair<long long, Rational>> samples;
    for (long long k = -6; k <= 6; ++k) {
        Word w{{"gamma", static_cast<int>(k)}};
        samples.emplace_back(k, Rational(dot(da, apply_word(db, w, d.gens))));
    }
    QuasiPolynomial q = fit_quasipolynomial(samples);
    CHECK(q == QuasiPolynomial{1, 0, Rational(1, 2), Rational(1, 2)});

    SUBCASE("fitted polynomial extrapolates beyond the window") {
        for (long long k : {9, 10, 11, 17, -9, -10, -11, -14, 20, -20}) {
            Word w{{"gamma", static_cast<int>(k)}};
            CHECK(q.eval(k) == Rational(dot(da, apply_word(db, w, d.gens))));
        }
    }
    SUBCASE("constant samples fit the zero polynomial") {
        std::vector<std::pair<long long, Rational>> zeros;
        for (long long k = 0; k < 6; ++k) zeros.emplace_back(k, Rational(0));
        CHECK(fit_quasipolynomial(zeros) == QuasiPolynomial{0, 0, 0, 0});
    }
    SUBCASE("cubic data is refused") {
        std::vector<std::pair<long long, Rational>> cubic;
        for (long long k = -3; k <= 3; ++k) cubic.emplace_back(k, Rational(k * k * k));
        CHECK_THROWS_AS(fit_quasipolynomial(cubic), NoFitError);
    }
    SUBCASE("one-parity data is rejected") {
        std::vector<std::pair<long long, Rational>> evens;
        for (long long k = 0; k < 12; k += 2) evens.emplace_back(k, Rational(k));
        CHECK_THROWS_AS(fit_quasipolynomial(evens), Error);
    }
}

TEST_CASE("integer solution sets") {
    // 4k^2 + 2(-1)^k - 4k + 3 == 1 iff k == 1
    QuasiPolynomial p1{4, -4, 3, 2};
    SolutionSet s1 = integer_solutions_equal(p1, 1);
    CHECK(!s1.unbounded);
    CHECK(s1.ks == std::vector<long long>{1});

    // k^2 + (-1)^k/2 + 1/2 == 1 iff k in {-1, 0, 1}
    QuasiPolynomial p2{1, 0, Rational(1, 2), Rational(1, 2)};
    CHECK(integer_solutions_equal(p2, 1).ks == std::vector<long long>{-1, 0, 1});

    // 4k^2 + 3 never equals 1
    QuasiPolynomial p3{4, 0, 3, 0};
    CHECK(integer_solutions_equal(p3, 1).ks.empty());

    // linear per-parity case: even k gives 2k+2, odd k gives 2k
    QuasiPolynomial p4{0, 2, 1, 1};
    CHECK(integer_solutions_equal(p4, 6).ks == std::vector<long long>{2, 3});
    CHECK(integer_solutions_equal(p4, 5).ks.empty());

    // constant equal to the target on one parity is unbounded
    QuasiPolynomial p5{0, 0, 1, 1};  // even: 2, odd: 0
    CHECK(integer_solutions_equal(p5, 2).unbounded);
    CHECK(integer_solutions_equal(p5, 5).ks.empty());
}

TEST_CASE("case 145 exclusion proof replays") {
    const auto& d = case145();
    ExclusionProof proof = case145_exclusion_proof(d.system, d.gens);
    CHECK(proof.cnd == 4);
    CHECK(proof.steps.size() > 20);
    bool saw_multiset = false;
    for (const auto& st : proof.steps) saw_multiset |= st.name == "no-length-5-multiset";
    CHECK(saw_multiset);
}

TEST_CASE("perturbed data trips the proof") {
    const auto& d = case145();
    // swapping two curves keeps the system valid but breaks the identities
    std::vector<LatticeVector> vs = d.system.curves;
    std::swap(vs[1], vs[3]);
    CurveSystem shuffled = build_system(vs, d.system.labels);
    CHECK_THROWS_AS(case145_exclusion_proof(shuffled, d.gens), ProofStepFailedError);
}
