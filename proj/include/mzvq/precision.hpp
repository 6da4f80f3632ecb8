#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

#include "mzvq/exact.hpp"

namespace mzvq {

// Working floating type: 100 decimal digits, plain value semantics. All
// numeric results carry certified absolute error bounds relative to this
// type, so its fixed precision caps the reachable targets (see
// PrecisionConfig).
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                           boost::multiprecision::et_off>;

inline constexpr int kMaxWorkingDigits = 90;

struct PrecisionUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Real real_epsilon() { return std::numeric_limits<Real>::epsilon(); }

inline Real to_real(const BigInt& n) { return n.convert_to<Real>(); }
inline Real to_real(const BigRational& q) {
    return to_real(numerator(q)) / to_real(denominator(q));
}

/// Absolute-error target plus the working precision that backs it. The
/// working precision must leave at least 10 guard digits beyond the target.
struct PrecisionConfig {
    Real target_abs_error;
    int working_digits;

    static PrecisionConfig from_target(const Real& target) {
        if (target <= 0)
            throw std::invalid_argument("PrecisionConfig: target must be positive");
        int digits = 1;
        Real t = target;
        while (t < 1 && digits < 200) {
            t *= 10;
            ++digits;
        }
        const int working = digits + 10;
        if (working > kMaxWorkingDigits)
            throw PrecisionUnreachable("target " + target.str(3) + " needs " +
                                       std::to_string(working) +
                                       " working digits; limit is " +
                                       std::to_string(kMaxWorkingDigits));
        return {target, working};
    }

    static PrecisionConfig standard() { return from_target(Real("1e-12")); }
};

/// A value with a rigorous absolute error bound: the true quantity lies in
/// [value - err, value + err].
struct ApproxReal {
    Real value{};
    Real err{};

    bool contains(const Real& x) const { return abs(value - x) <= err; }
};

namespace detail {
inline Real round_ulp(const Real& v) { return abs(v) * real_epsilon() + Real("1e-105"); }
}  // namespace

inline ApproxReal approx_exact(const Real& v) { return {v, detail::round_ulp(v)}; }

inline ApproxReal approx_add(const ApproxReal& a, const ApproxReal& b) {
    Real v = a.value + b.value;
    return {v, a.err + b.err + detail::round_ulp(v)};
}
inline ApproxReal approx_sub(const ApproxReal& a, const ApproxReal& b) {
    Real v = a.value - b.value;
    return {v, a.err + b.err + detail::round_ulp(v)};
}
inline ApproxReal approx_mul(const ApproxReal& a, const ApproxReal& b) {
    Real v = a.value * b.value;
    Real e = abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err;
    return {v, e + detail::round_ulp(v)};
}
inline ApproxReal approx_scale(const ApproxReal& a, const Real& c) {
    Real v = a.value * c;
    return {v, a.err * abs(c) + detail::round_ulp(v)};
}
inline ApproxReal approx_neg(const ApproxReal& a) { return {-a.value, a.err}; }

inline ApproxReal approx_pow_int(const ApproxReal& a, unsigned n) {
    ApproxReal r = approx_exact(Real(1));
    for (unsigned i = 0; i < n; ++i) r = approx_mul(r, a);
    return r;
}

/// coeff * pi^power with the error of the supplied pi estimate propagated.
inline ApproxReal to_approx(const PiRational& q, const ApproxReal& pi) {
    ApproxReal c = approx_exact(to_real(q.coeff));
    return approx_mul(c, approx_pow_int(pi, static_cast<unsigned>(q.pi_power)));
}

}  // namespace mzvq
