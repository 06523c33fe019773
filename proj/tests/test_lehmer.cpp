#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csq/lehmer.hpp"
#include "support/lehmer_oracle.hpp"

using namespace csq;
using csq_test::oracle_lehmer_term;

namespace {

const LehmerPair kFixture{6, 19};  // gamma = 3 + sqrt(-105)

std::vector<LehmerPair> seeded_valid_pairs(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-60, 60);
    std::vector<LehmerPair> pairs;
    while (pairs.size() < count) {
        const LehmerPair pair{coeff(rng), coeff(rng)};
        if (is_valid_lehmer_pair(pair)) pairs.push_back(pair);
    }
    return pairs;
}

}  // namespace

TEST_CASE("gamma to pair") {
    LehmerPair p = gamma_to_pair({3, 1});
    CHECK(p.R == 6);
    CHECK(p.Q == 19);
    p = gamma_to_pair({9, -1});
    CHECK(p.R == 54);
    CHECK(p.Q == 31);
    p = gamma_to_pair({-3, 1});  // -3 = 3 (mod 6)
    CHECK(p.R == 6);
    CHECK(p.Q == 19);
    CHECK_THROWS_AS(gamma_to_pair({4, 1}), std::domain_error);
    CHECK_THROWS_AS(gamma_to_pair({9, 2}), std::domain_error);
    CHECK_THROWS_AS(gamma_to_pair({6, 1}), std::domain_error);  // 3 | u but u even
}

TEST_CASE("pair parameters are the exact quotients") {
    for (long w = -333; w <= 333; w += 2) {  // u = 3w with w odd
        const Integer u = 3 * w;
        if (mod_floor_ui(u, 6) != 3) continue;
        const LehmerPair p = gamma_to_pair({u, 1});
        CHECK(3 * p.R == 2 * u * u);
        CHECK(6 * p.Q == u * u + 105);
    }
}

TEST_CASE("quadratic integer arithmetic in Z[sqrt(-105)]") {
    const QuadIntM105 g{3, 1};
    CHECK(g.norm() == 114);
    CHECK(g.conjugate() == QuadIntM105{3, -1});
    CHECK(g * g.conjugate() == QuadIntM105{114, 0});
    CHECK((g * g) == QuadIntM105{-96, 6});
    CHECK(QuadIntM105{0, 0}.norm() == 0);
}

TEST_CASE("lehmer terms of the fixture pair") {
    CHECK(lehmer_term(kFixture, 0) == 0);
    CHECK(lehmer_term(kFixture, 1) == 1);
    CHECK(lehmer_term(kFixture, 2) == 1);
    CHECK(lehmer_term(kFixture, 3) == -13);  // R - Q
    CHECK(lehmer_term(kFixture, 4) == -32);  // u~_3 - Q*u~_2
    CHECK(lehmer_term(kFixture, 5) == 55);
}

TEST_CASE("pair validity") {
    CHECK(is_valid_lehmer_pair(kFixture));
    CHECK(!is_valid_lehmer_pair({6, 3}));   // gcd 3
    CHECK(!is_valid_lehmer_pair({4, 1}));   // R = 4Q makes alpha = beta
    CHECK(!is_valid_lehmer_pair({0, 5}));
    CHECK(!is_valid_lehmer_pair({5, 0}));
    CHECK(!is_valid_lehmer_pair({1, 1}));   // alpha/beta a cube root of unity: u~_3 = 0
    CHECK(!is_valid_lehmer_pair({2, 1}));   // fourth root: u~_4 = 0
    CHECK(!is_valid_lehmer_pair({3, 1}));   // sixth root: u~_6 = 0
}

TEST_CASE("recurrence agrees with the sqrt(R)-component oracle") {
    const auto pairs = seeded_valid_pairs(100, 0x1e43);
    for (const auto& pair : pairs) {
        for (unsigned m = 0; m <= 30; ++m) {
            const auto o = oracle_lehmer_term(pair, m);
            CHECK(o.off == 0);
            CHECK(lehmer_term(pair, m) == o.value);
        }
    }
}

TEST_CASE("term divisibility along divisor chains") {
    const auto pairs = seeded_valid_pairs(40, 0xd117);
    for (const auto& pair : pairs) {
        for (unsigned m = 1; m <= 30; ++m) {
            const Integer um = lehmer_term(pair, m);
            REQUIRE(um != 0);
            for (unsigned n = m; n <= 30; n += m) {
                CHECK(lehmer_term(pair, n) % um == 0);
            }
        }
    }
}

TEST_CASE("defectivity is exactly u~_p = +-1") {
    // Eq-level statement: the pair from gamma = u +- sqrt(-105) satisfies
    // (alpha^p - beta^p)/(alpha - beta) = +-1 iff the term is +-1.
    for (unsigned p : {3u, 5u, 7u, 13u}) {
        for (long u = -99; u <= 99; u += 6) {
            if (mod_floor_ui(u, 6) != 3) continue;
            const LehmerPair pair = gamma_to_pair({u, 1});
            const auto via_oracle = oracle_lehmer_term(pair, p);
            CHECK(via_oracle.off == 0);
            const bool eq9 = via_oracle.value == 1 || via_oracle.value == -1;
            const Integer term = lehmer_term(pair, p);
            CHECK(eq9 == (term == 1 || term == -1));
        }
    }
}

TEST_CASE("rhs identity behind the polynomial check") {
    // sqrt(6)*sqrt(-70) = 2*sqrt(-105): both sides square to -420
    CHECK(Integer(6) * -70 == Integer(4) * -105);
}

TEST_CASE("primitive divisors of the fixture") {
    auto r = primitive_divisors(kFixture, 3);
    CHECK(r.complete);
    CHECK(r.primes == std::vector<Integer>{13});

    CHECK(primitive_divisors(kFixture, 1).primes.empty());
    CHECK(primitive_divisors(kFixture, 2).primes.empty());

    CHECK(is_defective(kFixture, 1));
    CHECK(is_defective(kFixture, 2));
    CHECK(!is_defective(kFixture, 3));

    CHECK_THROWS_AS(primitive_divisors({6, 3}, 3), std::domain_error);
}

TEST_CASE("fixture terms 30..33 keep their primitive divisors") {
    for (unsigned m = 30; m <= 33; ++m) {
        CHECK(!primitive_divisors(kFixture, m).primes.empty());
        CHECK(!is_defective(kFixture, m));
    }
}

TEST_CASE("exhausted budget is reported, not guessed") {
    FactorBudget tiny;
    tiny.trial_bound = 4;  // u~_5 = 55 = 5*11 stays untouched
    tiny.rho_rounds = 0;
    const auto r = primitive_divisors(kFixture, 5, tiny);
    CHECK(!r.complete);
    CHECK(r.primes.empty());
    CHECK_THROWS_AS(is_defective(kFixture, 5, tiny), IndeterminateFactorization);
    // with the default budget the same question is determinate
    CHECK(!is_defective(kFixture, 5));
}

TEST_CASE("defect scans stay clean") {
    const auto r3 = defect_scan(3, 100);
    CHECK(r3.p == 3);
    CHECK(r3.scanned == 34);  // 17 admissible |u| values, both signs
    CHECK(r3.violations.empty());

    const auto r7 = defect_scan(7, 1500);
    CHECK(r7.violations.empty());
    const auto r13 = defect_scan(13, 1500);
    CHECK(r13.violations.empty());

    CHECK_THROWS_AS(defect_scan(11, 100), std::domain_error);
    CHECK_THROWS_AS(defect_scan(4, 100), std::domain_error);
}

TEST_CASE("small-prime polynomial eliminations") {
    const auto p3 = small_prime_poly_check(3);
    CHECK(p3.coefficients == std::vector<Integer>{3, 0, -105});
    CHECK(p3.targets == std::vector<Integer>{6, -6});
    CHECK(p3.square_candidates == std::vector<Integer>{33, 37});
    CHECK(p3.integer_roots.empty());

    const auto p5 = small_prime_poly_check(5);
    CHECK(p5.coefficients == std::vector<Integer>{5, 0, -1050, 0, 11025});
    CHECK(p5.targets == std::vector<Integer>{36, -36});
    CHECK(p5.square_candidates == std::vector<Integer>{881280, 882720});
    CHECK(p5.integer_roots.empty());

    CHECK_THROWS_AS(small_prime_poly_check(7), std::domain_error);
}

TEST_CASE("poly coefficients match the quadratic-integer expansion") {
    // gamma^p - conj(gamma)^p = 2 * T_p(u) * sqrt(-105) for gamma = u + sqrt(-105),
    // so the v-component of gamma^p must equal the polynomial at u.
    for (unsigned p : {3u, 5u}) {
        const auto report = small_prime_poly_check(p);
        for (long u = -30; u <= 30; ++u) {
            QuadIntM105 power{1, 0};
            for (unsigned i = 0; i < p; ++i) power = power * QuadIntM105{u, 1};
            Integer at_u = 0;
            for (const Integer& c : report.coefficients) at_u = at_u * u + c;
            CHECK(at_u == power.v);
        }
    }
}

TEST_CASE("polynomial scan corroborates the exact solving") {
    for (unsigned p : {3u, 5u}) {
        const auto report = small_prime_poly_check(p);
        for (long u = -1000; u <= 1000; ++u) {
            Integer value = 0;
            for (const Integer& c : report.coefficients) value = value * u + c;
            for (const Integer& t : report.targets) CHECK(value != t);
        }
    }
}
