#include "mzvq/identities.hpp"

namespace mzvq {

namespace {

std::string rational_text(const PiRational& q) {
    if (q.coeff == 0) return "0";
    return q.coeff.str() + " * pi^" + std::to_string(q.pi_power);
}

VerificationReport numeric_report(std::string name, std::string instance,
                                  const ApproxReal& residual, const Real& tolerance) {
    const bool passed = abs(residual.value) <= residual.err + tolerance;
    VerificationReport r;
    r.name = std::move(name);
    r.instance = std::move(instance);
    r.mode = "numeric";
    r.passed = passed;
    r.residual = residual.value.str(6);
    r.err_bound = residual.err.str(6);
    return r;
}

VerificationReport exact_report(std::string name, std::string instance,
                                const PiRational& residual) {
    return VerificationReport::exact(std::move(name), std::move(instance), residual.is_zero(),
                                     rational_text(residual));
}

}  // namespace

PiRational q_depth2(int n) {
    if (n < 1) throw std::domain_error("q_depth2: n must be >= 1");
    PiRational acc{BigRational(0), 4 * n};
    if (n == 1) return acc;  // no composition of 1 into two positive parts
    for (int k = 1; k <= n - 1; ++k)
        acc = acc + zeta_even(static_cast<unsigned>(4 * k)) *
                        zeta_even(static_cast<unsigned>(4 * n - 4 * k));
    acc = BigRational(1, 2) * acc;
    return acc - (BigRational(n - 1, 2) * zeta_even(static_cast<unsigned>(4 * n)));
}

PiRational q_theorem(int n, int d) {
    if (!(n >= d && d >= 3))
        throw std::domain_error("theorem requires n >= d >= 3");
    PiRational total{BigRational(0), 4 * n};
    for (int k = 0; k <= (d - 1) / 2; ++k) {
        const PiRational zeta_factor = zeta_even(static_cast<unsigned>(4 * n - 2 * k));
        const PiRational pi_shift{BigRational(1), 2 * k};
        for (int j = 0; j <= 2 * k + 1; ++j) {
            BigRational c = pow2_rational(k + 2);
            if ((k / 2 + j + d) % 2 != 0) c = -c;
            c /= factorial_int(static_cast<unsigned>(2 * k + 1));
            c *= binomial_int(static_cast<unsigned>(2 * k + 1), static_cast<unsigned>(j));
            c *= gen_binomial(BigRational(j - 2, 4), static_cast<unsigned>(d));
            total = total + c * (zeta_factor * pi_shift);
        }
    }
    for (int k = 0; k <= (d - 2) / 4; ++k) {
        const PiRational q2_part =
            q_depth2(n - k) -
            BigRational(7, 8) * zeta_even(static_cast<unsigned>(4 * n - 4 * k));
        const PiRational pi_shift{BigRational(1), 4 * k};
        for (int j = 0; j <= 4 * k + 2; ++j) {
            BigRational c = pow2_rational(2 * k + 5);
            if ((k + j + d) % 2 != 0) c = -c;
            c /= factorial_int(static_cast<unsigned>(4 * k + 2));
            c *= binomial_int(static_cast<unsigned>(4 * k + 2), static_cast<unsigned>(j));
            c *= gen_binomial(BigRational(j - 2, 4), static_cast<unsigned>(d));
            total = total + c * (q2_part * pi_shift);
        }
    }
    return total;
}

namespace {

ApproxReal exact_times_pi(const PiRational& q, const PrecisionConfig& cfg) {
    return to_approx(q, pi_value(cfg));
}

}  // namespace

VerificationReport euler_alternating(int n, const PrecisionConfig& cfg, const Real& tolerance) {
    if (n < 2) throw std::domain_error("euler_alternating: n must be >= 2");
    ApproxReal lhs{Real(0), Real(0)};
    for (int k = 2; k <= 2 * n - 1; ++k) {
        const ApproxReal term = mzv_eval(MzvIndex({k, 2 * n - k}), cfg);
        lhs = (k % 2 == 0) ? approx_add(lhs, term) : approx_sub(lhs, term);
    }
    const ApproxReal rhs =
        exact_times_pi(BigRational(1, 2) * zeta_even(static_cast<unsigned>(2 * n)), cfg);
    return numeric_report("euler-alternating", "n=" + std::to_string(n),
                          approx_sub(lhs, rhs), tolerance);
}

VerificationReport euler_full(int n, const PrecisionConfig& cfg, const Real& tolerance) {
    if (n < 2) throw std::domain_error("euler_full: n must be >= 2");
    ApproxReal lhs{Real(0), Real(0)};
    for (int k = 2; k <= 2 * n - 1; ++k)
        lhs = approx_add(lhs, mzv_eval(MzvIndex({k, 2 * n - k}), cfg));
    const ApproxReal rhs = exact_times_pi(zeta_even(static_cast<unsigned>(2 * n)), cfg);
    return numeric_report("euler-full", "n=" + std::to_string(n), approx_sub(lhs, rhs),
                          tolerance);
}

VerificationReport gkz_even(int n, const PrecisionConfig& cfg, const Real& tolerance) {
    if (n < 2) throw std::domain_error("gkz_even: n must be >= 2");
    ApproxReal lhs{Real(0), Real(0)};
    for (int k = 1; k <= n - 1; ++k)
        lhs = approx_add(lhs, mzv_eval(MzvIndex({2 * k, 2 * n - 2 * k}), cfg));
    const ApproxReal rhs =
        exact_times_pi(BigRational(3, 4) * zeta_even(static_cast<unsigned>(2 * n)), cfg);
    return numeric_report("gkz-even", "n=" + std::to_string(n), approx_sub(lhs, rhs),
                          tolerance);
}

VerificationReport euler_product(int n) {
    if (n < 2) throw std::domain_error("euler_product: n must be >= 2");
    PiRational lhs{BigRational(0), 2 * n};
    for (int k = 1; k <= n - 1; ++k)
        lhs = lhs + zeta_even(static_cast<unsigned>(2 * k)) *
                        zeta_even(static_cast<unsigned>(2 * n - 2 * k));
    const PiRational rhs =
        BigRational(2 * n + 1, 2) * zeta_even(static_cast<unsigned>(2 * n));
    return exact_report("euler-product", "n=" + std::to_string(n), lhs - rhs);
}

VerificationReport alternating_even_sum_with_zeta0(int w, const PiRational& zeta0) {
    if (w < 2) throw std::domain_error("alternating_even_sum: w must be >= 2");
    auto zeta_or_given = [&](int m) {
        return m == 0 ? zeta0 : zeta_even(static_cast<unsigned>(m));
    };
    PiRational lhs{BigRational(0), 4 * w};
    for (int m = 0; m <= 2 * w; ++m) {
        const int l = 2 * w - m;
        const PiRational term = zeta_or_given(2 * m) * zeta_or_given(2 * l);
        lhs = (m % 2 == 0) ? lhs + term : lhs - term;
    }
    const PiRational rhs = BigRational(4) * q_depth2(w) -
                           BigRational(7, 2) * zeta_even(static_cast<unsigned>(4 * w));
    return exact_report("alternating-even", "w=" + std::to_string(w), lhs - rhs);
}

VerificationReport alternating_even_sum(int w) {
    return alternating_even_sum_with_zeta0(w, zeta_even(0));
}

}  // namespace mzvq
