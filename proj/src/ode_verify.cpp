#include "mzvq/ode_verify.hpp"

#include <boost/math/constants/constants.hpp>

#include "mzvq/series.hpp"

namespace mzvq {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int sign_pow(int e) {
    // (-1)^e for possibly negative e
    return (e % 2 == 0) ? 1 : -1;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::X: return "x";
        case Family::Y: return "y";
        case Family::Z: return "z";
        case Family::W: return "w";
    }
    return "?";
}

std::string residual_text(const QuarterPowerPoly& r) {
    if (r.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : r.terms()) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*base^(" + std::to_string(e) + "/4)";
    }
    return s;
}

}  // namespace

QuarterPowerPoly tilde_closed_form(unsigned n, Family which) {
    QuarterPowerPoly p(BaseVar::OneMinusV);
    const int ni = static_cast<int>(n);
    switch (which) {
        case Family::X:
        case Family::Y: {
            const int shift = (which == Family::X) ? 2 : 3;
            const BigRational two_n = pow2_rational(ni);
            for (int j = 0; j <= 2 * ni + 1; ++j) {
                const int sgn = sign_pow((ni + shift) / 2 + j);
                BigRational c = two_n * sgn;
                c /= factorial_int(static_cast<unsigned>(j)) *
                     factorial_int(static_cast<unsigned>(2 * ni + 1 - j));
                p.add_term(j - 2, c);
            }
            break;
        }
        case Family::Z: {
            if (n % 2 == 0) break;  // (1 - (-1)^n) = 0
            const BigRational two_n = pow2_rational(ni);  // 2 * 2^{n-1}
            for (int j = 0; j <= 2 * ni; ++j) {
                const int sgn = sign_pow((ni - 1) / 2 + j);
                BigRational c = two_n * sgn;
                c /= factorial_int(static_cast<unsigned>(j)) *
                     factorial_int(static_cast<unsigned>(2 * ni - j));
                p.add_term(j - 2, c);
            }
            break;
        }
        case Family::W: {
            if (n % 2 == 1) break;  // (1 + (-1)^n) = 0
            const BigRational two_n = pow2_rational(ni);  // 2 * 2^{n-1}
            for (int j = 0; j <= 2 * ni; ++j) {
                const int sgn = sign_pow(ni / 2 + j);
                BigRational c = two_n * sgn;
                c /= factorial_int(static_cast<unsigned>(j)) *
                     factorial_int(static_cast<unsigned>(2 * ni - j));
                p.add_term(j - 2, c);
            }
            break;
        }
    }
    return p;
}

QuarterPowerPoly closed_form_xyzw(unsigned d, Family which) {
    QuarterPowerPoly p(BaseVar::U);
    const int di = static_cast<int>(d);
    switch (which) {
        case Family::X:
        case Family::Y: {
            const int shift = (which == Family::X) ? 2 : 3;
            for (int n = 0; n <= floor_div(di - 1, 2); ++n) {
                const BigRational base = pow2_rational(n) /
                                         factorial_int(static_cast<unsigned>(2 * n + 1));
                for (int j = 0; j <= 2 * n + 1; ++j) {
                    const int sgn = sign_pow((n + shift) / 2 + j + di);
                    BigRational c = base * sgn;
                    c *= binomial_int(static_cast<unsigned>(2 * n + 1), static_cast<unsigned>(j));
                    c *= gen_binomial(BigRational(j - 2, 4), d);
                    p.add_term(4 * n, c);
                }
            }
            break;
        }
        case Family::Z: {
            for (int n = 1; n <= 2 * floor_div(di - 2, 4) + 1; n += 2) {
                const BigRational base = pow2_rational(n) /  // 2 * 2^{n-1}
                                         factorial_int(static_cast<unsigned>(2 * n));
                for (int j = 0; j <= 2 * n; ++j) {
                    const int sgn = sign_pow((n - 1) / 2 + j + di);
                    BigRational c = base * sgn;
                    c *= binomial_int(static_cast<unsigned>(2 * n), static_cast<unsigned>(j));
                    c *= gen_binomial(BigRational(j - 2, 4), d);
                    p.add_term(4 * n, c);
                }
            }
            break;
        }
        case Family::W: {
            for (int n = 0; n <= 2 * (di / 4); n += 2) {
                const BigRational base = pow2_rational(n) /  // 2 * 2^{n-1}
                                         factorial_int(static_cast<unsigned>(2 * n));
                for (int j = 0; j <= 2 * n; ++j) {
                    const int sgn = sign_pow(n / 2 + j + di);
                    BigRational c = base * sgn;
                    c *= binomial_int(static_cast<unsigned>(2 * n), static_cast<unsigned>(j));
                    c *= gen_binomial(BigRational(j - 2, 4), d);
                    p.add_term(4 * n, c);
                }
            }
            break;
        }
    }
    return p;
}

QuarterPowerPoly closed_form_s(unsigned d, Family which) {
    const QuarterPowerPoly u = closed_form_xyzw(d, which);
    QuarterPowerPoly p(BaseVar::S);
    for (const auto& [e, c] : u.terms()) p.add_term(e / 2, c);
    return p;
}

std::vector<VerificationReport> verify_tilde_system(unsigned n_max,
                                                    const FamilyProvider& provider) {
    const FamilyProvider get = provider ? provider : FamilyProvider(tilde_closed_form);
    std::vector<VerificationReport> reports;
    for (unsigned n = 1; n <= n_max; ++n) {
        const QuarterPowerPoly x = get(n, Family::X), y = get(n, Family::Y),
                               z = get(n, Family::Z), w = get(n, Family::W);
        const QuarterPowerPoly xp = get(n - 1, Family::X), yp = get(n - 1, Family::Y);
        const BigRational half_n_quarter = BigRational(n, 2) - BigRational(1, 4);
        const BigRational half_n_half = BigRational(n, 2) - BigRational(1, 2);
        const BigRational quarter(1, 4);

        const QuarterPowerPoly rx = ddv(x).exponent_shifted(4) + x.scaled(half_n_quarter) +
                                    z.scaled(quarter) + w.scaled(quarter);
        const QuarterPowerPoly ry = ddv(y).exponent_shifted(4) + y.scaled(half_n_quarter) -
                                    z.scaled(quarter) + w.scaled(quarter);
        const QuarterPowerPoly rz = ddv(z).exponent_shifted(4) + z.scaled(half_n_half) +
                                    xp.scaled(quarter) + yp.scaled(quarter);
        const QuarterPowerPoly rw = ddv(w).exponent_shifted(4) + w.scaled(half_n_half) -
                                    xp.scaled(quarter) + yp.scaled(quarter);

        const QuarterPowerPoly* residuals[4] = {&rx, &ry, &rz, &rw};
        const QuarterPowerPoly* fams[4] = {&x, &y, &z, &w};
        const Family ids[4] = {Family::X, Family::Y, Family::Z, Family::W};
        for (int i = 0; i < 4; ++i) {
            const bool ode_ok = residuals[i]->is_zero();
            const bool ic_ok = fams[i]->value_at_base_one() == 0;
            reports.push_back(VerificationReport::exact(
                std::string("ode-tilde-") + family_name(ids[i]), "n=" + std::to_string(n),
                ode_ok && ic_ok,
                ode_ok ? (ic_ok ? "0" : "initial condition violated")
                       : residual_text(*residuals[i])));
        }
    }
    return reports;
}

std::vector<VerificationReport> verify_u_system(unsigned d_max, const FamilyProvider& provider) {
    const FamilyProvider get = provider ? provider : FamilyProvider(closed_form_xyzw);
    std::vector<VerificationReport> reports;
    for (unsigned d = 0; d < d_max; ++d) {
        const QuarterPowerPoly x = get(d, Family::X), y = get(d, Family::Y),
                               z = get(d, Family::Z), w = get(d, Family::W);
        const QuarterPowerPoly x1 = get(d + 1, Family::X), y1 = get(d + 1, Family::Y),
                               z1 = get(d + 1, Family::Z), w1 = get(d + 1, Family::W);
        const BigRational dp1(d + 1);
        const BigRational d_quarter = BigRational(d) + BigRational(1, 4);
        const BigRational d_half = BigRational(d) + BigRational(1, 2);
        const BigRational quarter(1, 4), half(1, 2);

        // residual = (d+1) f_{d+1} - RHS, one per family
        const QuarterPowerPoly rx = x1.scaled(dp1) +
                                    ddu(x).scaled(half).exponent_shifted(4) -
                                    x.scaled(d_quarter) + z.scaled(quarter) + w.scaled(quarter);
        const QuarterPowerPoly ry = y1.scaled(dp1) +
                                    ddu(y).scaled(half).exponent_shifted(4) -
                                    y.scaled(d_quarter) - z.scaled(quarter) + w.scaled(quarter);
        const QuarterPowerPoly rz = z1.scaled(dp1) + x.scaled(quarter).exponent_shifted(4) +
                                    y.scaled(quarter).exponent_shifted(4) +
                                    ddu(z).scaled(half).exponent_shifted(4) - z.scaled(d_half);
        const QuarterPowerPoly rw = w1.scaled(dp1) - x.scaled(quarter).exponent_shifted(4) +
                                    y.scaled(quarter).exponent_shifted(4) +
                                    ddu(w).scaled(half).exponent_shifted(4) - w.scaled(d_half);

        const QuarterPowerPoly* residuals[4] = {&rx, &ry, &rz, &rw};
        const Family ids[4] = {Family::X, Family::Y, Family::Z, Family::W};
        for (int i = 0; i < 4; ++i) {
            const bool ok = residuals[i]->is_zero();
            reports.push_back(VerificationReport::exact(
                std::string("ode-u-") + family_name(ids[i]), "d=" + std::to_string(d), ok,
                ok ? "0" : residual_text(*residuals[i])));
        }
    }
    return reports;
}

namespace {

// g is entire with coefficients shrinking like 1/(4k+2)!, so an order-60
// truncation evaluates any derivative of interest far below the working
// precision for |s| < pi^4.
constexpr int kGSeriesOrder = 60;

Real eval_series(const TruncatedSeries& f, const Real& s) {
    Real acc = 0;
    for (int k = f.order(); k >= 0; --k) acc = acc * s + to_real(f[k]);
    return acc;
}

Real g_derivative_at(const Real& s, unsigned d) {
    TruncatedSeries f = g_series(kGSeriesOrder);
    for (unsigned i = 0; i < d; ++i) f = f.derivative();
    return eval_series(f, s);
}

Real eval_quarter_poly(const QuarterPowerPoly& p, const Real& quarter_root) {
    Real acc = 0;
    for (const auto& [e, c] : p.terms()) acc += to_real(c) * pow(quarter_root, e);
    return acc;
}

}  // namespace

Real verify_gd_decomposition(unsigned d, const BigRational& s_sample, int precision_digits) {
    if (precision_digits < 1 || precision_digits > kMaxWorkingDigits)
        throw PrecisionUnreachable("gd decomposition: requested digits out of range");
    const Real s = to_real(s_sample);
    const Real pi = boost::math::constants::pi<Real>();
    if (!(s > 0) || !(s < pi * pi * pi * pi))
        throw std::domain_error("gd decomposition: sample must satisfy 0 < s < pi^4");

    const Real q = sqrt(sqrt(s));
    const Real g_val = g_derivative_at(s, 0);
    Real lhs = g_derivative_at(s, d) / (g_val * to_real(factorial_int(d)));
    lhs *= pow(s, static_cast<int>(d));
    if (d % 2 == 1) lhs = -lhs;

    const Real cot = cos(q) / sin(q);
    const Real coth = cosh(q) / sinh(q);
    const Real rhs = eval_quarter_poly(closed_form_s(d, Family::X), q) * q * cot +
                     eval_quarter_poly(closed_form_s(d, Family::Y), q) * q * coth +
                     eval_quarter_poly(closed_form_s(d, Family::Z), q) * cot * coth +
                     eval_quarter_poly(closed_form_s(d, Family::W), q);
    return abs(lhs - rhs);
}

}  // namespace mzvq
