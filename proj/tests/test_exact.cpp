#include <doctest.h>

#include <random>

#include "mzvq/exact.hpp"

using namespace mzvq;

TEST_SUITE("exact") {

TEST_CASE("bernoulli base values") {
    CHECK(bernoulli(0) == BigRational(1));
    CHECK(bernoulli(1) == BigRational(-1, 2));
    CHECK(bernoulli(3) == BigRational(0));
    CHECK(bernoulli(4) == BigRational(-1, 30));
    CHECK(bernoulli(60) ==
          BigRational(BigInt("-1215233140483755572040304994079820246041491"),
                      BigInt("56786730")));
}

TEST_CASE("bernoulli defining recurrence") {
    // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
    for (unsigned m = 1; m <= 60; ++m) {
        BigRational acc = 0;
        for (unsigned k = 0; k <= m; ++k)
            acc += BigRational(binomial_int(m + 1, k)) * bernoulli(k);
        CHECK(acc == 0);
    }
    for (unsigned m = 5; m <= 59; m += 2) CHECK(bernoulli(m) == 0);
}

TEST_CASE("zeta_even values") {
    CHECK(zeta_even(0) == PiRational(BigRational(-1, 2), 0));
    CHECK(zeta_even(2) == PiRational(BigRational(1, 6), 2));
    CHECK(zeta_even(4) == PiRational(BigRational(1, 90), 4));
    CHECK(zeta_even(8) == PiRational(BigRational(1, 9450), 8));
    CHECK(zeta_even(12) == PiRational(BigRational(691, 638512875), 12));
    CHECK(zeta_even(16) == PiRational(BigRational(3617, BigInt("325641566250")), 16));
    CHECK_THROWS_AS(zeta_even(3), std::domain_error);
    CHECK_THROWS_AS(zeta_even(1), std::domain_error);
}

TEST_CASE("zeta_even positivity and homogeneity for m in 2..40") {
    for (unsigned m = 2; m <= 40; m += 2) {
        const PiRational z = zeta_even(m);
        CHECK(z.coeff > 0);
        CHECK(z.pi_power == static_cast<int>(m));
    }
}

TEST_CASE("gen_binomial examples") {
    CHECK(gen_binomial(BigRational(0), 3) == 0);
    CHECK(gen_binomial(BigRational(1, 2), 2) == BigRational(-1, 8));
    CHECK(gen_binomial(BigRational(5), 2) == 10);
    CHECK(gen_binomial(BigRational(7, 3), 0) == 1);
}

TEST_CASE("gen_binomial Pascal recurrence for random rational upper argument") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 24), depth(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const BigRational a(num(rng), den(rng));
        const unsigned d = static_cast<unsigned>(depth(rng));
        CHECK(gen_binomial(a, d) == gen_binomial(a - 1, d) + gen_binomial(a - 1, d - 1));
    }
}

TEST_CASE("PiRational rejects mixed pi powers") {
    const PiRational a(BigRational(1, 2), 2), b(BigRational(1, 3), 4);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a - b, std::invalid_argument);
    CHECK((a * b).pi_power == 6);
    CHECK_NOTHROW(a + PiRational(BigRational(1), 2));
    // strict even when one side is zero
    CHECK_THROWS_AS(PiRational(BigRational(0), 0) + b, std::invalid_argument);
}

}  // TEST_SUITE
