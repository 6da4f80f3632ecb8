#include "mzvq/mzv.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <sstream>

namespace mzvq {

namespace {

constexpr int kEmTerms = 12;
constexpr long kFirstCutoff = 64;
constexpr long kMaxCutoff = 1L << 21;

Real pow_int_inv(const Real& inv, int s) {
    // inv^s by binary powering; s >= 1
    Real r = 1, base = inv;
    int e = s;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// rising factorial s(s+1)...(s+m-1) as exact integer
BigInt rising(int s, int m) {
    BigInt r = 1;
    for (int i = 0; i < m; ++i) r *= s + i;
    return r;
}

Real rounding_allowance(long ops, const Real& magnitude) {
    return Real(ops + 16) * real_epsilon() * (abs(magnitude) + 1);
}

}  // namespace

MzvIndex MzvIndex::parse(const std::string& spec) {
    std::vector<int> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("MzvIndex: cannot parse part '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("MzvIndex: trailing characters in part '" + item + "'");
        parts.push_back(v);
    }
    return MzvIndex(std::move(parts));
}

ApproxReal pi_value(const PrecisionConfig& cfg) {
    const Real pi = boost::math::constants::pi<Real>();
    ApproxReal r{pi, 8 * real_epsilon() * pi};
    if (r.err > cfg.target_abs_error)
        throw PrecisionUnreachable("pi_value: target below working-precision floor");
    return r;
}

ApproxReal zeta_tail(int s, long n, int em_terms) {
    if (s < 2) throw std::domain_error("zeta_tail: s must be >= 2");
    const Real nr(n);
    const Real inv = 1 / nr;
    Real val = pow_int_inv(inv, s - 1) / (s - 1) - pow_int_inv(inv, s) / 2;
    for (int i = 1; i <= em_terms; ++i) {
        const BigRational c = bernoulli(static_cast<unsigned>(2 * i)) *
                              BigRational(rising(s, 2 * i - 1),
                                          factorial_int(static_cast<unsigned>(2 * i)));
        val += to_real(c) * pow_int_inv(inv, s + 2 * i - 1);
    }
    const BigRational cr = abs(bernoulli(static_cast<unsigned>(2 * em_terms + 2))) *
                           BigRational(rising(s, 2 * em_terms + 1),
                                       factorial_int(static_cast<unsigned>(2 * em_terms + 2)));
    Real err = to_real(cr) * pow_int_inv(inv, s + 2 * em_terms + 1);
    err += rounding_allowance(4 * em_terms, val);
    return {val, err};
}

namespace {

ApproxReal zeta_single_at(int s, long n, int em_terms) {
    Real direct = 0;
    for (long k = n; k >= 1; --k) direct += pow_int_inv(Real(1) / Real(k), s);
    ApproxReal tail = zeta_tail(s, n, em_terms);
    return {direct + tail.value, tail.err + rounding_allowance(2 * n, direct)};
}

// Euler-Maclaurin expansion data for Z(s,x) about x: the beta_i coefficients
// of x^{-s-2i+1} and the remainder constant rho with |R(x)| <= rho x^{-s-2m-1}.
struct EmExpansion {
    std::vector<Real> beta;
    Real rho;
};

EmExpansion em_expansion(int s, int m) {
    EmExpansion e;
    e.beta.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        e.beta.push_back(to_real(bernoulli(static_cast<unsigned>(2 * i)) *
                                 BigRational(rising(s, 2 * i - 1),
                                             factorial_int(static_cast<unsigned>(2 * i)))));
    e.rho = to_real(abs(bernoulli(static_cast<unsigned>(2 * m + 2))) *
                    BigRational(rising(s, 2 * m + 1),
                                factorial_int(static_cast<unsigned>(2 * m + 2))));
    return e;
}

// sum_{k>N} k^{-s1} T2(k) for depth 2, where T2(k) = sum_{j<k} j^{-s2}.
// The inner partial sum is written as limit-minus-remainder (s2 >= 2) or via
// H_{k-1} = H_N + sum_{N<j<k} 1/j (s2 = 1); either way the double tail
// reduces to single-zeta tails through the Euler-Maclaurin expansion of
// Z(s, x) in inverse powers of x.
ApproxReal tail_depth2(int s1, int s2, long n, int m) {
    if (s2 >= 2) {
        const ApproxReal zs2 = zeta_single_at(s2, n, m);
        const ApproxReal z1 = zeta_tail(s1, n, m);
        const ApproxReal z12 = zeta_tail(s1 + s2, n, m);
        const EmExpansion em = em_expansion(s2, m);
        // S = sum_{k>N} k^{-s1} Z(s2,k)
        ApproxReal S = approx_scale(zeta_tail(s1 + s2 - 1, n, m), Real(1) / (s2 - 1));
        S = approx_sub(S, approx_scale(z12, Real(1) / 2));
        for (int i = 1; i <= m; ++i)
            S = approx_add(S, approx_scale(zeta_tail(s1 + s2 + 2 * i - 1, n, m),
                                           em.beta[static_cast<size_t>(i - 1)]));
        const ApproxReal zrem = zeta_tail(s1 + s2 + 2 * m + 1, n, m);
        S.err += em.rho * (zrem.value + zrem.err);
        ApproxReal r = approx_sub(approx_sub(approx_mul(zs2, z1), z12), S);
        return r;
    }
    // s2 == 1
    Real hn = 0;
    for (long j = n; j >= 1; --j) hn += Real(1) / Real(j);
    const ApproxReal z1 = zeta_tail(s1, n, m);
    const EmExpansion em = em_expansion(s1, m);
    // S = sum_{j>N} j^{-1} Z(s1,j)
    ApproxReal S = approx_scale(z1, Real(1) / (s1 - 1));
    S = approx_sub(S, approx_scale(zeta_tail(s1 + 1, n, m), Real(1) / 2));
    for (int i = 1; i <= m; ++i)
        S = approx_add(S, approx_scale(zeta_tail(s1 + 2 * i, n, m),
                                       em.beta[static_cast<size_t>(i - 1)]));
    const ApproxReal zrem = zeta_tail(s1 + 2 * m + 2, n, m);
    S.err += em.rho * (zrem.value + zrem.err);
    ApproxReal r = approx_add(approx_scale(z1, hn), S);
    r.err += rounding_allowance(2 * n, hn);
    return r;
}

// Crude uniform bound on the inner partial sums: T2(k) <= zeta(2)^a (1+ln k)^b
// with a the count of inner exponents >= 2 and b the count of inner ones.
// Tail bound via the closed-form integral of x^{-s}(1+ln x)^b.
Real crude_tail_bound(const std::vector<int>& parts, long n) {
    const int s1 = parts[0];
    int a = 0, b = 0;
    for (size_t i = 1; i < parts.size(); ++i)
        (parts[i] >= 2 ? a : b) += 1;
    const Real zeta2_ub("1.6449340668482264365");  // > zeta(2)
    // integral_N^inf x^{-s1} (1+ln x)^b dx = e^{s1-1} * int_A^inf e^{-cv} v^b dv,
    // c = s1-1, A = 1+ln N; by parts: e^{-cA} sum_j b!/(b-j)! A^{b-j} / c^{j+1}.
    const Real c(s1 - 1);
    const Real A = 1 + log(Real(n));
    Real sum = 0;
    Real fall = 1;  // b!/(b-j)!
    Real apow = pow(A, b);
    for (int j = 0; j <= b; ++j) {
        sum += fall * apow * pow_int_inv(1 / c, j + 1);
        fall *= b - j;
        if (j < b) apow /= A;
    }
    Real bound = exp(c) * exp(-c * A) * sum;
    for (int i = 0; i < a; ++i) bound *= zeta2_ub;
    return bound;
}

struct DirectSum {
    Real value;
    long ops;
};

// Direct part sum_{k<=N} k^{-s1} T2(k) with the streaming prefix recursion;
// T2 values are kept so the outer reduction can run in decreasing k.
DirectSum direct_part(const std::vector<int>& parts, long n) {
    const int d = static_cast<int>(parts.size());
    std::vector<Real> level(static_cast<size_t>(d) + 2, Real(0));  // level[j] = T_j(k)
    level[static_cast<size_t>(d) + 1] = 1;
    std::vector<Real> t2(static_cast<size_t>(n) + 1, Real(0));
    for (long k = 1; k <= n; ++k) {
        t2[static_cast<size_t>(k)] = level[2];
        const Real inv = Real(1) / Real(k);
        for (int j = 2; j <= d; ++j)
            level[static_cast<size_t>(j)] +=
                pow_int_inv(inv, parts[static_cast<size_t>(j - 1)]) * level[static_cast<size_t>(j) + 1];
    }
    Real acc = 0;
    for (long k = n; k >= 1; --k)
        acc += pow_int_inv(Real(1) / Real(k), parts[0]) * t2[static_cast<size_t>(k)];
    return {acc, n * (d + 2)};
}

ApproxReal mzv_attempt(const std::vector<int>& parts, long n, const PrecisionConfig& cfg);

ApproxReal mzv_with_target(const std::vector<int>& parts, const PrecisionConfig& cfg) {
    for (long n = kFirstCutoff; n <= kMaxCutoff; n *= 2) {
        ApproxReal r = mzv_attempt(parts, n, cfg);
        if (r.err <= cfg.target_abs_error) return r;
    }
    throw PrecisionUnreachable("mzv_eval: certified bound does not reach target " +
                               cfg.target_abs_error.str(3) + " within the cutoff limit");
}

ApproxReal mzv_attempt(const std::vector<int>& parts, long n, const PrecisionConfig& cfg) {
    const int d = static_cast<int>(parts.size());
    if (d == 1) return zeta_single_at(parts[0], n, kEmTerms);

    const DirectSum direct = direct_part(parts, n);
    ApproxReal result{direct.value, rounding_allowance(direct.ops, direct.value)};

    if (d == 2) {
        return approx_add(result, tail_depth2(parts[0], parts[1], n, kEmTerms));
    }

    const bool inner_all_ge2 =
        std::all_of(parts.begin() + 1, parts.end(), [](int s) { return s >= 2; });
    if (!inner_all_ge2) {
        result.err += crude_tail_bound(parts, n);
        return result;
    }

    // First-order correction: tail = M2 * Z(s1,N) - sum_{k>N} k^{-s1} R2(k),
    // 0 <= R2(k) <= UB3 * (k^{-s2} + Z(s2,k)); the subtracted term is folded
    // into the error bound.
    const std::vector<int> inner(parts.begin() + 1, parts.end());
    PrecisionConfig sub = cfg;
    sub.target_abs_error = cfg.target_abs_error / 8;
    const ApproxReal m2 = mzv_with_target(inner, sub);
    const ApproxReal z1 = zeta_tail(parts[0], n, kEmTerms);
    result = approx_add(result, approx_mul(m2, z1));

    const int s1 = parts[0], s2 = parts[1];
    Real ub3 = 1;
    for (size_t i = 2; i < parts.size(); ++i) {
        const ApproxReal z = zeta_single_at(parts[i], kFirstCutoff, kEmTerms);
        ub3 *= z.value + z.err;
    }
    const ApproxReal za = zeta_tail(s1 + s2, n, kEmTerms);
    const ApproxReal zb = zeta_tail(s1 + s2 - 1, n, kEmTerms);
    result.err += ub3 * ((za.value + za.err) + (zb.value + zb.err) / (s2 - 1));
    return result;
}

}  // namespace

ApproxReal zeta_single(int s, const PrecisionConfig& cfg) {
    if (s < 2) throw std::domain_error("divergent: zeta_single requires s >= 2");
    return mzv_with_target({s}, cfg);
}

ApproxReal mzv_eval(const MzvIndex& idx, const PrecisionConfig& cfg) {
    return mzv_with_target(idx.parts, cfg);
}

void for_each_composition(int n, int d,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (d < 1) throw std::invalid_argument("compositions: d must be >= 1");
    if (d > n) return;
    std::vector<int> parts(static_cast<size_t>(d));
    // lexicographic order: first part varies slowest
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d - 1) {
            parts[static_cast<size_t>(pos)] = remaining;
            fn(parts);
            return;
        }
        for (int v = 1; v <= remaining - (d - 1 - pos); ++v) {
            parts[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
}

std::vector<std::vector<int>> compositions(int n, int d) {
    std::vector<std::vector<int>> out;
    for_each_composition(n, d, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

ApproxReal q_bruteforce(int n, int d, const PrecisionConfig& cfg) {
    if (d < 1 || d > n) throw std::domain_error("q_bruteforce: requires 1 <= d <= n");
    const BigInt count = binomial_int(static_cast<unsigned>(n - 1), static_cast<unsigned>(d - 1));
    PrecisionConfig per_term = cfg;
    per_term.target_abs_error = cfg.target_abs_error / to_real(count);
    ApproxReal acc{Real(0), Real(0)};
    for_each_composition(n, d, [&](const std::vector<int>& c) {
        std::vector<int> idx(c.size());
        for (size_t i = 0; i < c.size(); ++i) idx[i] = 4 * c[i];
        acc = approx_add(acc, mzv_eval(MzvIndex(std::move(idx)), per_term));
    });
    return acc;
}

}  // namespace mzvq
