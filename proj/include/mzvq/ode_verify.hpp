#pragma once

#include <functional>
#include <vector>

#include "mzvq/precision.hpp"
#include "mzvq/quarter_power.hpp"
#include "mzvq/report.hpp"

namespace mzvq {

enum class Family { X, Y, Z, W };

/// Closed-form solution x~_n, y~_n, z~_n or w~_n of the coefficient-wise
/// differential system, as a polynomial in quarter powers of (1-v). The
/// parity prefactors make z~_n vanish for even n and w~_n for odd n >= 1.
QuarterPowerPoly tilde_closed_form(unsigned n, Family which);

/// Closed-form x_d(u), y_d(u), z_d(u), w_d(u): polynomials in integer powers
/// of u (stored in quarter units, so exponents are multiples of 4).
QuarterPowerPoly closed_form_xyzw(unsigned d, Family which);

/// Same data as closed_form_xyzw reinterpreted over base s with exponents
/// halved: X_d(s) = x_d(sqrt(s)) and so on.
QuarterPowerPoly closed_form_s(unsigned d, Family which);

using FamilyProvider = std::function<QuarterPowerPoly(unsigned, Family)>;

/// Checks, for every n in 1..n_max, the four rearranged identities
///   (1-v) x~_n' + (n/2 - 1/4) x~_n + (1/4) z~_n + (1/4) w~_n = 0
///   (1-v) y~_n' + (n/2 - 1/4) y~_n - (1/4) z~_n + (1/4) w~_n = 0
///   (1-v) z~_n' + (n/2 - 1/2) z~_n + (1/4) x~_{n-1} + (1/4) y~_{n-1} = 0
///   (1-v) w~_n' + (n/2 - 1/2) w~_n - (1/4) x~_{n-1} + (1/4) y~_{n-1} = 0
/// exactly, together with the v = 0 initial conditions. One report per
/// (n, equation). A custom provider substitutes perturbed inputs.
std::vector<VerificationReport> verify_tilde_system(unsigned n_max,
                                                    const FamilyProvider& provider = {});

/// Checks, for every 0 <= d < d_max, the four recurrences
///   (d+1) x_{d+1} = -(u/2) x_d' + (d + 1/4) x_d - (1/4) z_d - (1/4) w_d
///   (d+1) y_{d+1} = -(u/2) y_d' + (d + 1/4) y_d + (1/4) z_d - (1/4) w_d
///   (d+1) z_{d+1} = -(u/4) x_d - (u/4) y_d - (u/2) z_d' + (d + 1/2) z_d
///   (d+1) w_{d+1} =  (u/4) x_d - (u/4) y_d + (d + 1/2) w_d - (u/2) w_d'
/// exactly. One report per (d, equation).
std::vector<VerificationReport> verify_u_system(unsigned d_max,
                                                const FamilyProvider& provider = {});

/// Numerically evaluates both sides of the decomposition
///   G_d(s) = X_d(s) s^{1/4} cot s^{1/4} + Y_d(s) s^{1/4} coth s^{1/4}
///          + Z_d(s) cot s^{1/4} coth s^{1/4} + W_d(s)
/// at s_sample, with the left side (-s)^d D^d g(s) / (g(s) d!) obtained from
/// exact series differentiation of g. Returns the residual magnitude.
/// Requires 0 < s_sample < pi^4.
Real verify_gd_decomposition(unsigned d, const BigRational& s_sample, int precision_digits);

}  // namespace mzvq
