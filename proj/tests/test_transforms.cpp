#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dcl/error.hpp"
#include "dcl/evolution.hpp"
#include "dcl/transform.hpp"
#include "oracles.hpp"

using namespace dcl;

TEST_CASE("apply") {
    CHECK(apply(TransformSpec::power(2), Int(13)) == 169);
    CHECK(apply(TransformSpec::prime_index(), Int(5)) == 11);
    CHECK(apply(TransformSpec::affine(Int(2)), Int(3)) == 7);
    CHECK(apply(TransformSpec::additive_shift(Int(4)), Int(3)) == 7);
    CHECK(apply(TransformSpec::modular_power(2, Int(561)), Int(560)) == 1); // (-1)^2
    CHECK_THROWS_AS(apply(TransformSpec::power(2), Int(0)), error);
    // 3^2 = 9 = 0 mod 9: a zero residue is a unit-domain violation.
    CHECK_THROWS_AS(apply(TransformSpec::modular_power(2, Int(9)), Int(3)), error);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(TransformSpec::power(0), error);
    CHECK_THROWS_AS(TransformSpec::affine(Int(4)), error); // 4 is not prime
    CHECK_THROWS_AS(TransformSpec::additive_shift(Int(0)), error);
    CHECK_THROWS_AS(TransformSpec::modular_power(2, Int(1)), error);
}

TEST_CASE("declared preservation") {
    CHECK(TransformSpec::power(3).declared_coprime_preserving());
    CHECK(TransformSpec::prime_index().declared_coprime_preserving());
    CHECK(TransformSpec::modular_power(2, Int(7)).declared_preservation() ==
          Preservation::units_only);
    CHECK_FALSE(TransformSpec::affine(Int(2)).declared_coprime_preserving());
    CHECK_FALSE(TransformSpec::additive_shift(Int(1)).declared_coprime_preserving());
}

TEST_CASE("iterate_closed_form examples") {
    CHECK(iterate_closed_form(TransformSpec::power(2), Int(3), 2) == 81);
    CHECK(iterate_closed_form(TransformSpec::affine(Int(2)), Int(3), 2) == 15);
    CHECK(iterate_closed_form(TransformSpec::power(5), Int(17), 0) == 17);
    CHECK(iterate_closed_form(TransformSpec::additive_shift(Int(3)), Int(4), 10) == 34);
}

TEST_CASE("power closed form equals t-fold apply") {
    for (std::uint64_t x = 1; x <= 20; ++x)
        for (std::uint32_t k = 1; k <= 3; ++k)
            for (std::uint64_t t = 0; t <= 3; ++t) {
                TransformSpec spec = TransformSpec::power(k);
                Int iterated = from_u64(x);
                for (std::uint64_t i = 0; i < t; ++i) iterated = apply(spec, iterated);
                CHECK(iterate_closed_form(spec, from_u64(x), t) == iterated);
            }
}

TEST_CASE("affine closed form equals t-fold apply") {
    for (Int p : {Int(2), Int(3), Int(5)})
        for (std::uint64_t x = 1; x <= 100; ++x)
            for (std::uint64_t t = 0; t <= 10; ++t) {
                TransformSpec spec = TransformSpec::affine(p);
                Int iterated = from_u64(x);
                for (std::uint64_t i = 0; i < t; ++i) iterated = apply(spec, iterated);
                CHECK(iterate_closed_form(spec, from_u64(x), t) == iterated);
            }
}

TEST_CASE("affine c_t is never divisible by p") {
    for (Int p : {Int(2), Int(3), Int(5), Int(7)})
        for (std::uint64_t t = 1; t <= 30; ++t) {
            Int pt = pow_ui(p, static_cast<unsigned long>(t));
            Int ct = (pt - 1) / (p - 1);
            CHECK(ct % p != 0);
        }
}

TEST_CASE("modular closed form matches the step loop") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Int m = from_u64(2 + rng() % 5000);
        std::uint64_t x = 1 + rng() % 10000;
        if (gcd(from_u64(x), m) != 1) continue;
        std::uint32_t k = 1 + rng() % 4;
        std::uint64_t t = rng() % 200;
        TransformSpec spec = TransformSpec::modular_power(k, m);
        Int stepped = from_u64(x) % m;
        for (std::uint64_t i = 0; i < t; ++i) stepped = powm(stepped, from_u64(k), m);
        CHECK(iterate_closed_form(spec, from_u64(x), t) == stepped);
    }
}

TEST_CASE("exact-size cap raises the overflow policy error") {
    try {
        iterate_closed_form(TransformSpec::power(2), Int(3), 64);
        FAIL("expected overflow");
    } catch (const error &e) {
        CHECK(e.code() == errc::overflow_policy);
        CHECK(std::string(e.what()).find("power-form") != std::string::npos);
    }
}

TEST_CASE("prime_index has no closed form") {
    CHECK_THROWS_AS(iterate_closed_form(TransformSpec::prime_index(), Int(3), 2), error);
}

TEST_CASE("preservation box verdicts") {
    CHECK(sample_coprime_preservation(TransformSpec::power(3), 50).preserved);
    CHECK(sample_coprime_preservation(TransformSpec::prime_index(), 30).preserved);
    for (std::uint32_t k = 1; k <= 5; ++k)
        CHECK(sample_coprime_preservation(TransformSpec::power(k), 200).preserved);

    MapVerdict shift = sample_coprime_preservation(TransformSpec::additive_shift(Int(1)), 10);
    REQUIRE_FALSE(shift.preserved);
    REQUIRE(shift.counterexample.has_value());
    CHECK(shift.counterexample->a == 3);
    CHECK(shift.counterexample->b == 5);
    CHECK(shift.counterexample->ga == 4);
    CHECK(shift.counterexample->gb == 6);
    CHECK(shift.counterexample->witness == 2);
}

TEST_CASE("counterexamples re-verify") {
    std::vector<TransformSpec> specs;
    for (std::uint64_t c = 1; c <= 5; ++c) specs.push_back(TransformSpec::additive_shift(from_u64(c)));
    for (Int p : {Int(2), Int(3), Int(5)}) specs.push_back(TransformSpec::affine(p));
    for (const TransformSpec &spec : specs) {
        MapVerdict verdict = sample_coprime_preservation(spec, 60);
        if (verdict.preserved) continue;
        REQUIRE(verdict.counterexample.has_value());
        const auto &ce = *verdict.counterexample;
        CHECK(gcd(ce.a, ce.b) == 1);
        CHECK(apply(spec, ce.a) == ce.ga);
        CHECK(apply(spec, ce.b) == ce.gb);
        CHECK(gcd(ce.ga, ce.gb) > 1);
        CHECK(ce.witness == gcd(ce.ga, ce.gb));
    }
}

TEST_CASE("affine edge hypothesis: vacuous, failing, indeterminate") {
    // d = 1: no prime divisors, vacuously true.
    Graph p2 = build_family(Family::path, 2);
    Labeling f12{{Int(1), Int(2)}};
    AffineHypothesisReport vacuous = affine_edge_hypothesis(p2, f12, Int(2));
    CHECK(vacuous.overall);
    CHECK(vacuous.fallback.empty());
    CHECK(vacuous.edges[0].divisors.empty());

    // Labels (3, 8): d = 5, (p-1)*3+1 = 4 = 2^2 lies in <2> mod 5.
    Labeling f38{{Int(3), Int(8)}};
    AffineHypothesisReport failing = affine_edge_hypothesis(p2, f38, Int(2));
    CHECK_FALSE(failing.overall);
    REQUIRE(failing.edges[0].divisors.size() == 1);
    CHECK(failing.edges[0].divisors[0].q == 5);
    CHECK(failing.edges[0].divisors[0].residue == 4);
    CHECK(failing.edges[0].divisors[0].member);

    // P_3 with labels 1,2,3: both gaps are 1.
    Graph p3 = build_family(Family::path, 3);
    Labeling f123{{Int(1), Int(2), Int(3)}};
    CHECK(affine_edge_hypothesis(p3, f123, Int(2)).overall);

    // q = p: labels (1,3), p = 2, d = 2 -> indeterminate, needs fallback.
    Labeling f13{{Int(1), Int(3)}};
    AffineHypothesisReport qp = affine_edge_hypothesis(p2, f13, Int(2));
    CHECK(qp.overall); // nothing was a member, but the edge is flagged
    REQUIRE(qp.fallback.size() == 1);
    CHECK(qp.edges[0].divisors[0].status == DivisorStatus::skipped_q_equals_p);

    // q | p-1: labels (1,3), p = 3, d = 2, q = 2 divides p-1 = 2.
    AffineHypothesisReport qdiv = affine_edge_hypothesis(p2, f13, Int(3));
    REQUIRE(qdiv.fallback.size() == 1);
    CHECK(qdiv.edges[0].divisors[0].status == DivisorStatus::skipped_q_divides_p_minus_1);
    // And the fallback is warranted: this labeling actually fails at t = 1
    // (4 and 10 share 2).
    DclRun run = verify_run(p2, f13, TransformSpec::affine(Int(3)), 4);
    CHECK(run.status == RunStatus::gcd_violation);
    CHECK(run.violation_t == 1);
}

TEST_CASE("clean hypothesis certifies horizon evolution") {
    std::mt19937_64 rng(4242);
    int certified_cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t n = 2 + rng() % 5;
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b)
                if (rng() % 100 < 40) edges.emplace_back(a, b);
        Graph g = Graph::from_edge_list(n, edges);
        Labeling f;
        std::set<std::uint64_t> used;
        bool ok = true;
        for (VertexId v = 0; v < n; ++v) {
            std::uint64_t x = 1 + rng() % 40;
            while (used.count(x)) ++x;
            used.insert(x);
            f.values.push_back(from_u64(x));
        }
        if (!verify_coprime(g, f).ok) ok = false;
        if (!ok) continue;
        Int p = std::vector<Int>{Int(2), Int(3), Int(5)}[rng() % 3];
        AffineHypothesisReport report = affine_edge_hypothesis(g, f, p);
        if (report.overall && report.fallback.empty()) {
            ++certified_cases;
            DclRun run = verify_run(g, f, TransformSpec::affine(p), 64);
            CHECK(run.status == RunStatus::verified);
        }
    }
    CHECK(certified_cases > 5); // the property must actually get exercised
}
