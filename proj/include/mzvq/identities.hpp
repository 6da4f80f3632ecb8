#pragma once

#include "mzvq/exact.hpp"
#include "mzvq/mzv.hpp"
#include "mzvq/report.hpp"

namespace mzvq {

/// Q(4n,2) = (1/2) sum_{k=1}^{n-1} zeta(4k) zeta(4n-4k) - ((n-1)/2) zeta(4n),
/// exact with pi power 4n. Q(4,2) = 0 by convention (empty composition set).
PiRational q_depth2(int n);

/// The closed formula for Q(4n,d), n >= d >= 3: a double sum of
/// zeta(4n-2k) pi^{2k} terms plus a double sum of
/// (Q(4n-4k,2) - (7/8) zeta(4n-4k)) pi^{4k} terms, all exact. Every term is
/// homogeneous of pi power 4n; the strict PiRational adder enforces it.
PiRational q_theorem(int n, int d);

inline constexpr double kDefaultNumericTolerance = 1e-10;

/// sum_{k=2}^{2n-1} (-1)^k zeta(k,2n-k) = (1/2) zeta(2n), checked numerically.
VerificationReport euler_alternating(int n, const PrecisionConfig& cfg,
                                     const Real& tolerance = Real(kDefaultNumericTolerance));

/// sum_{k=2}^{2n-1} zeta(k,2n-k) = zeta(2n), checked numerically.
VerificationReport euler_full(int n, const PrecisionConfig& cfg,
                              const Real& tolerance = Real(kDefaultNumericTolerance));

/// sum_{k=1}^{n-1} zeta(2k,2n-2k) = (3/4) zeta(2n), checked numerically.
VerificationReport gkz_even(int n, const PrecisionConfig& cfg,
                            const Real& tolerance = Real(kDefaultNumericTolerance));

/// sum_{k=1}^{n-1} zeta(2k) zeta(2n-2k) = ((2n+1)/2) zeta(2n), checked with
/// exact rationals; the residual must be exactly zero.
VerificationReport euler_product(int n);

/// sum_{m+l=2w, m,l>=0} (-1)^m zeta(2m) zeta(2l) = 4 Q(4w,2) - (7/2) zeta(4w)
/// with zeta(0) = -1/2, checked exactly.
VerificationReport alternating_even_sum(int w);

/// Same check with an explicit zeta(0) value; the +1/2 convention must fail
/// (negative control).
VerificationReport alternating_even_sum_with_zeta0(int w, const PiRational& zeta0);

}  // namespace mzvq
