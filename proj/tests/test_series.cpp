#include <doctest.h>

#include "mzvq/series.hpp"

using namespace mzvq;

TEST_SUITE("series") {

TEST_CASE("g_series low-order coefficients") {
    const TruncatedSeries g = g_series(2);
    CHECK(g[0] == BigRational(1, 2));
    CHECK(g[1] == BigRational(-1, 180));
    CHECK(g[2] == BigRational(1, 226800));
}

TEST_CASE("f product against g") {
    CHECK(verify_f_product(0));
    CHECK(verify_f_product(5));
    CHECK(verify_f_product(20));
}

TEST_CASE("derivative shifts and scales coefficients") {
    const TruncatedSeries g = g_series(6);
    const TruncatedSeries dg = g.derivative();
    CHECK(dg.order() == 5);
    for (int k = 0; k <= 5; ++k) CHECK(dg[k] == g[k + 1] * (k + 1));
}

TEST_CASE("series arithmetic truncates to the minimum order") {
    const TruncatedSeries a = g_series(5), b = g_series(3);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
    CHECK((a / b).order() == 3);
}

TEST_CASE("division round trip") {
    const TruncatedSeries a = g_series(8);
    TruncatedSeries b(8);
    b.set(0, BigRational(1, 2));
    b.set(3, BigRational(-7, 5));
    b.set(8, BigRational(1, 3));
    CHECK((a / b) * b == a);
    CHECK_THROWS_AS(a / TruncatedSeries(4), std::domain_error);
}

TEST_CASE("q_rational_table frozen values") {
    const BivariateSeries t = q_rational_table(5, 5);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 1) == BigRational(1, 90));
    CHECK(t.at(2, 1) == BigRational(1, 9450));
    CHECK(t.at(2, 2) == BigRational(1, 113400));
    CHECK(t.at(3, 2) == BigRational(239, BigInt("2554051500")));
    CHECK(t.at(3, 3) == BigRational(1, BigInt("681080400")));
    CHECK(t.at(4, 3) == BigRational(1, BigInt("62523180720")));
    CHECK(t.at(5, 4) == BigRational(181, BigInt("205810680135060000")));
}

TEST_CASE("q_rational_table structural zeros") {
    const BivariateSeries t = q_rational_table(6, 6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(t.at(n, 0) == 0);  // t = 0 gives the constant series 1
        for (int d = n + 1; d <= 6; ++d) CHECK(t.at(n, d) == 0);
    }
}

TEST_CASE("diagonal of table matches zeta(4,...,4) closed form") {
    const BivariateSeries t = q_rational_table(12, 12);
    for (unsigned d = 0; d <= 12; ++d) {
        const PiRational z = zeta_four_power(d);
        CHECK(t.at(static_cast<int>(d), static_cast<int>(d)) == z.coeff);
        CHECK(z.pi_power == static_cast<int>(4 * d));
    }
}

TEST_CASE("depth-1 column of table matches even zeta values") {
    const BivariateSeries t = q_rational_table(12, 12);
    for (int n = 1; n <= 12; ++n)
        CHECK(t.at(n, 1) == zeta_even(static_cast<unsigned>(4 * n)).coeff);
}

TEST_CASE("bivariate division round trip against the direct expansion") {
    // (g(s(1-t))/g(s)) * g(s) must reproduce g_n C(n,j) (-1)^j exactly.
    const int order = 9;
    const BivariateSeries q = q_rational_table(order, order);
    const TruncatedSeries g = g_series(order);
    for (int n = 0; n <= order; ++n)
        for (int j = 0; j <= order; ++j) {
            BigRational conv = 0;
            for (int i = 0; i <= n; ++i) conv += g[i] * q.at(n - i, j);
            BigRational expect = 0;
            if (j <= n) {
                expect = g[n] * binomial_int(static_cast<unsigned>(n), static_cast<unsigned>(j));
                if (j % 2 == 1) expect = -expect;
            }
            CHECK(conv == expect);
        }
}

TEST_CASE("zeta_four_power values") {
    CHECK(zeta_four_power(0) == PiRational(BigRational(1), 0));
    CHECK(zeta_four_power(1) == zeta_even(4));
    CHECK(zeta_four_power(2) == PiRational(BigRational(1, 113400), 8));
    // depth-2 stuffle cross-check: zeta(4,4) = zeta(4)^2/2 - zeta(8)/2
    const PiRational lhs = zeta_four_power(2);
    const PiRational rhs = BigRational(1, 2) * (zeta_even(4) * zeta_even(4)) -
                           BigRational(1, 2) * zeta_even(8);
    CHECK(lhs == rhs);
}

TEST_CASE("table size validation") {
    CHECK_THROWS_AS(q_rational_table(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(q_rational_table(3, 0), std::invalid_argument);
}

}  // TEST_SUITE
