#include <doctest.h>

#include "mzvq/ode_verify.hpp"

using namespace mzvq;

namespace {

QuarterPowerPoly make_poly(BaseVar base, std::initializer_list<std::pair<int, BigRational>> t) {
    QuarterPowerPoly p(base);
    for (const auto& [e, c] : t) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_SUITE("ode") {

TEST_CASE("quarter power derivative examples") {
    CHECK(ddv(make_poly(BaseVar::OneMinusV, {{0, 1}})).is_zero());
    CHECK(ddv(make_poly(BaseVar::OneMinusV, {{4, 1}})) ==
          make_poly(BaseVar::OneMinusV, {{0, -1}}));
    CHECK(ddv(make_poly(BaseVar::OneMinusV, {{-2, 1}})) ==
          make_poly(BaseVar::OneMinusV, {{-6, BigRational(1, 2)}}));
    CHECK(ddu(make_poly(BaseVar::U, {{8, BigRational(1, 3)}})) ==
          make_poly(BaseVar::U, {{4, BigRational(2, 3)}}));
    CHECK_THROWS_AS(ddv(QuarterPowerPoly(BaseVar::U)), std::invalid_argument);
    CHECK_THROWS_AS(ddu(QuarterPowerPoly(BaseVar::S)), std::invalid_argument);
    CHECK_THROWS_AS(ddu(make_poly(BaseVar::U, {{1, 1}})), std::invalid_argument);
}

TEST_CASE("tilde closed forms, small indices") {
    CHECK(tilde_closed_form(0, Family::W) == make_poly(BaseVar::OneMinusV, {{-2, 1}}));
    CHECK(tilde_closed_form(0, Family::Z).is_zero());
    CHECK(tilde_closed_form(1, Family::X) ==
          make_poly(BaseVar::OneMinusV, {{-2, BigRational(-1, 3)},
                                         {-1, 1},
                                         {0, -1},
                                         {1, BigRational(1, 3)}}));
}

TEST_CASE("parity prefactors kill alternating tilde families") {
    for (unsigned n = 0; n <= 10; ++n) {
        if (n % 2 == 0 && n > 0) CHECK(tilde_closed_form(n, Family::Z).is_zero());
        if (n % 2 == 1) CHECK(tilde_closed_form(n, Family::W).is_zero());
    }
}

TEST_CASE("tilde system verifies exactly") {
    auto reports = verify_tilde_system(1);
    CHECK(reports.size() == 4);
    CHECK(all_passed(reports));

    reports = verify_tilde_system(8);
    CHECK(reports.size() == 32);
    CHECK(all_passed(reports));

    CHECK(all_passed(verify_tilde_system(10)));
}

TEST_CASE("tilde system negative control") {
    const FamilyProvider perturbed = [](unsigned n, Family f) {
        QuarterPowerPoly p = tilde_closed_form(n, f);
        if (n == 1 && f == Family::X) p.add_term(0, BigRational(1, 7));
        return p;
    };
    CHECK_FALSE(all_passed(verify_tilde_system(2, perturbed)));
}

TEST_CASE("u closed forms, small indices") {
    CHECK(closed_form_xyzw(0, Family::W) == make_poly(BaseVar::U, {{0, 1}}));
    CHECK(closed_form_xyzw(0, Family::X).is_zero());
    CHECK(closed_form_xyzw(0, Family::Z).is_zero());
    CHECK(closed_form_xyzw(1, Family::X) == make_poly(BaseVar::U, {{0, BigRational(-1, 4)}}));
    CHECK(closed_form_xyzw(1, Family::Y) == make_poly(BaseVar::U, {{0, BigRational(-1, 4)}}));
    CHECK(closed_form_xyzw(2, Family::X) == make_poly(BaseVar::U, {{0, BigRational(-7, 32)}}));
    CHECK(closed_form_xyzw(3, Family::Z) == make_poly(BaseVar::U, {{4, BigRational(5, 64)}}));
    CHECK(closed_form_xyzw(4, Family::W) ==
          make_poly(BaseVar::U, {{0, BigRational(35, 128)}, {8, BigRational(-1, 1536)}}));
}

TEST_CASE("u system verifies exactly") {
    auto reports = verify_u_system(1);
    CHECK(reports.size() == 4);
    CHECK(all_passed(reports));

    reports = verify_u_system(8);
    CHECK(reports.size() == 32);
    CHECK(all_passed(reports));

    CHECK(all_passed(verify_u_system(10)));
}

TEST_CASE("u system negative control: w_0 = 2") {
    const FamilyProvider perturbed = [](unsigned d, Family f) {
        if (d == 0 && f == Family::W) {
            QuarterPowerPoly p(BaseVar::U);
            p.add_term(0, BigRational(2));
            return p;
        }
        return closed_form_xyzw(d, f);
    };
    CHECK_FALSE(all_passed(verify_u_system(1, perturbed)));
}

TEST_CASE("u family degree bounds") {
    auto deg = [](const QuarterPowerPoly& p) { return p.is_zero() ? -1 : p.max_exponent() / 4; };
    for (int d = 0; d <= 10; ++d) {
        const unsigned du = static_cast<unsigned>(d);
        CHECK(deg(closed_form_xyzw(du, Family::X)) <= (d - 1) / 2);
        CHECK(deg(closed_form_xyzw(du, Family::Y)) <= (d - 1) / 2);
        const int zd = deg(closed_form_xyzw(du, Family::Z));
        if (zd >= 0) CHECK(zd <= 2 * ((d - 2) / 4) + 1);
        CHECK(deg(closed_form_xyzw(du, Family::W)) <= 2 * (d / 4));
    }
}

TEST_CASE("w~0 binomial expansion reproduces w_d(0)") {
    CHECK(tilde_closed_form(0, Family::W) == make_poly(BaseVar::OneMinusV, {{-2, 1}}));
    for (unsigned d = 0; d <= 30; ++d) {
        const BigRational coeff =
            gen_binomial(BigRational(-1, 2), d) * ((d % 2 == 0) ? 1 : -1);
        CHECK(coeff == BigRational(binomial_int(2 * d, d), BigInt(1) << (2 * d)));
    }
}

TEST_CASE("G_d decomposition residuals") {
    CHECK(verify_gd_decomposition(0, BigRational(1), 40) < Real("1e-30"));
    CHECK(verify_gd_decomposition(1, BigRational(1, 2), 40) < Real("1e-30"));
    CHECK(verify_gd_decomposition(4, BigRational(2), 40) < Real("1e-25"));
    CHECK_THROWS_AS(verify_gd_decomposition(1, BigRational(-1), 40), std::domain_error);
    CHECK_THROWS_AS(verify_gd_decomposition(1, BigRational(98), 40), std::domain_error);
}

}  // TEST_SUITE
