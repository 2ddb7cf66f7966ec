#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "planesys/cremona.hpp"
#include "planesys/linear_system.hpp"
#include "planesys/oracle.hpp"

using namespace planesys;

TEST_CASE("interpolation dimensions of standard systems") {
    CHECK(oracle_dim(parse_literal("1;")) == 2);
    CHECK(oracle_dim(parse_literal("1;0^5")) == 2);
    CHECK(oracle_dim(parse_literal("2;1^5")) == 0);
    CHECK(oracle_dim(parse_literal("2;1^6")) == -1);
    CHECK(oracle_dim(parse_literal("3;1^10")) == -1);
    CHECK(oracle_dim(parse_literal("3;2,2")) == 3);
    CHECK(oracle_dim(parse_literal("4;4,2,2")) == 0);
    CHECK(oracle_dim(parse_literal("6;2^8,1^2")) == 1);
    CHECK(oracle_dim(parse_literal("9;3^8,2^2")) == 0);
    CHECK(oracle_dim(parse_literal("0;")) == 0);
}

TEST_CASE("negative multiplicities impose no conditions") {
    CHECK(oracle_dim(parse_literal("2;1,1,-3")) ==
          oracle_dim(parse_literal("2;1,1")));
    CHECK(oracle_dim(parse_literal("4;2,-1,1")) ==
          oracle_dim(parse_literal("4;2,0,1")));
}

TEST_CASE("bad inputs are rejected") {
    CHECK_THROWS_AS(oracle_dim(parse_literal("-1;")), std::domain_error);
    CHECK_THROWS_AS(oracle_dim(parse_literal("200;1^3")), std::domain_error);
    OracleConfig bad_trials;
    bad_trials.trials = 0;
    CHECK_THROWS_AS(oracle_dim(parse_literal("2;1^5"), bad_trials),
                    std::invalid_argument);
    OracleConfig bad_prime;
    bad_prime.prime = 4;
    CHECK_THROWS_AS(oracle_dim(parse_literal("2;1^5"), bad_prime),
                    std::invalid_argument);
}

TEST_CASE("results are deterministic for a fixed configuration") {
    LinearSystem L = parse_literal("7;3,2^9");
    OracleConfig c;
    long long a = oracle_dim(L, c);
    long long b = oracle_dim(L, c);
    CHECK(a == b);
    CHECK(a == shgh_dim(L));

    OracleConfig other;
    other.seed = 20260822;
    other.trials = 2;
    CHECK(oracle_dim(L, other) == a);

    OracleConfig small_prime;
    small_prime.prime = 1000003;
    CHECK(oracle_dim(L, small_prime) == a);
}

TEST_CASE("random corpus matches the reduction-based dimension") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 120) {
        int n = 1 + (int)(rng() % 10);
        LinearSystem L;
        L.d = 1 + (long long)(rng() % 9);
        for (int i = 0; i < n; ++i) L.m.push_back((long long)(rng() % 5));
        ++done;
        long long expect = shgh_dim(L);
        long long got = oracle_dim(L);
        REQUIRE_MESSAGE(got == expect, to_literal_raw(L));
    }
}
