#include <doctest.h>

#include "mzvq/identities.hpp"
#include "mzvq/series.hpp"

using namespace mzvq;

namespace {
const PrecisionConfig kStd = PrecisionConfig::standard();
}

TEST_SUITE("identities") {

TEST_CASE("q_depth2 values") {
    CHECK(q_depth2(1) == PiRational(BigRational(0), 4));
    CHECK(q_depth2(2) == PiRational(BigRational(1, 113400), 8));
    CHECK(q_depth2(3) == PiRational(BigRational(239, BigInt("2554051500")), 12));
    CHECK_THROWS_AS(q_depth2(0), std::domain_error);
}

TEST_CASE("q_depth2 matches the series table") {
    const BivariateSeries t = q_rational_table(10, 10);
    for (int n = 2; n <= 10; ++n)
        CHECK(q_depth2(n) == PiRational(t.at(n, 2), 4 * n));
}

TEST_CASE("q_theorem domain") {
    CHECK_THROWS_AS(q_theorem(5, 2), std::domain_error);
    CHECK_THROWS_AS(q_theorem(2, 3), std::domain_error);
}

TEST_CASE("q_theorem frozen values") {
    CHECK(q_theorem(3, 3) == PiRational(BigRational(1, BigInt("681080400")), 12));
    CHECK(q_theorem(4, 3) == PiRational(BigRational(1, BigInt("62523180720")), 16));
    CHECK(q_theorem(5, 4) == PiRational(BigRational(181, BigInt("205810680135060000")), 20));
}

TEST_CASE("q_theorem equals the series oracle for all 3 <= d <= n <= 10") {
    const BivariateSeries t = q_rational_table(10, 10);
    for (int d = 3; d <= 10; ++d)
        for (int n = d; n <= 10; ++n) {
            const PiRational thm = q_theorem(n, d);
            CHECK(thm.pi_power == 4 * n);
            CHECK(thm == PiRational(t.at(n, d), 4 * n));
        }
}

TEST_CASE("q_theorem diagonal equals zeta(4,...,4)") {
    for (int d = 3; d <= 10; ++d)
        CHECK(q_theorem(d, d) == zeta_four_power(static_cast<unsigned>(d)));
}

TEST_CASE("euler product identity, exact") {
    for (int n = 2; n <= 20; ++n) {
        const VerificationReport r = euler_product(n);
        CHECK(r.passed);
        CHECK(r.residual == "0");
        CHECK(r.mode == "exact");
    }
}

TEST_CASE("alternating even-zeta reduction, exact") {
    for (int w = 2; w <= 10; ++w) CHECK(alternating_even_sum(w).passed);
}

TEST_CASE("alternating even-zeta negative control") {
    const VerificationReport bad =
        alternating_even_sum_with_zeta0(2, PiRational(BigRational(1, 2), 0));
    CHECK_FALSE(bad.passed);
}

TEST_CASE("numeric double-zeta identities, small range") {
    for (int n = 2; n <= 4; ++n) {
        CHECK(euler_alternating(n, kStd).passed);
        CHECK(euler_full(n, kStd).passed);
        CHECK(gkz_even(n, kStd).passed);
    }
}

TEST_CASE("gkz n=2 closed form: zeta(2,2) = pi^4/120") {
    // the report residual must be tiny, not merely below tolerance
    const VerificationReport r = gkz_even(2, kStd);
    CHECK(r.passed);
    CHECK(abs(Real(r.residual)) < Real("1e-20"));
}

}  // TEST_SUITE
