#include "mzvq/series.hpp"

#include <algorithm>

namespace mzvq {

namespace {
int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

BigRational g_coeff(int k) {
    // (-1)^k 4^k / (4k+2)!
    BigRational c(BigInt(1) << (2 * k), factorial_int(static_cast<unsigned>(4 * k + 2)));
    return (k % 2 == 0) ? c : -c;
}
}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(min_order(a, b));
    for (int k = 0; k <= r.order(); ++k) r.set(k, a[k] + b[k]);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(min_order(a, b));
    for (int k = 0; k <= r.order(); ++k) r.set(k, a[k] - b[k]);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(min_order(a, b));
    for (int k = 0; k <= r.order(); ++k) {
        BigRational acc = 0;
        for (int i = 0; i <= k; ++i) acc += a[i] * b[k - i];
        r.set(k, std::move(acc));
    }
    return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b[0] == 0) throw std::domain_error("TruncatedSeries: division by series with zero constant term");
    TruncatedSeries q(min_order(a, b));
    for (int k = 0; k <= q.order(); ++k) {
        BigRational acc = a[k];
        for (int i = 1; i <= k; ++i) acc -= b[i] * q[k - i];
        q.set(k, acc / b[0]);
    }
    return q;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) return TruncatedSeries(std::vector<BigRational>{BigRational(0)});
    TruncatedSeries r(order() - 1);
    for (int k = 0; k < order(); ++k) r.set(k, coeffs_[static_cast<size_t>(k) + 1] * (k + 1));
    return r;
}

TruncatedSeries TruncatedSeries::shift_down(int k) const {
    if (k < 0 || k > order()) throw std::invalid_argument("shift_down: bad shift");
    for (int i = 0; i < k; ++i)
        if (coeffs_[static_cast<size_t>(i)] != 0)
            throw std::domain_error("shift_down: low-order coefficient is nonzero");
    return TruncatedSeries(
        std::vector<BigRational>(coeffs_.begin() + k, coeffs_.end()));
}

TruncatedSeries TruncatedSeries::scaled(const BigRational& c) const {
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) r.set(k, coeffs_[static_cast<size_t>(k)] * c);
    return r;
}

TruncatedSeries g_series(int order) {
    TruncatedSeries r(order);
    for (int k = 0; k <= order; ++k) r.set(k, g_coeff(k));
    return r;
}

bool verify_f_product(int order) {
    const int deg = 4 * order + 2;
    TruncatedSeries sin_s(deg), sinh_s(deg);
    for (int k = 0; 2 * k + 1 <= deg; ++k) {
        BigRational c(1, factorial_int(static_cast<unsigned>(2 * k + 1)));
        sin_s.set(2 * k + 1, (k % 2 == 0) ? c : -c);
        sinh_s.set(2 * k + 1, c);
    }
    const TruncatedSeries f = (sin_s * sinh_s).shift_down(2).scaled(BigRational(1, 2));
    for (int m = 0; m <= 4 * order; ++m) {
        const BigRational expect = (m % 4 == 0) ? g_coeff(m / 4) : BigRational(0);
        if (f[m] != expect) return false;
    }
    return true;
}

BivariateSeries q_rational_table(int max_n, int max_d) {
    if (max_n < 1 || max_d < 1) throw std::invalid_argument("q_rational_table: orders must be >= 1");
    // Numerator g(s(1-t)): coefficient of s^k t^j is g_k C(k,j) (-1)^j.
    const auto nrows = static_cast<size_t>(max_n) + 1;
    const auto ncols = static_cast<size_t>(max_d) + 1;
    std::vector<std::vector<BigRational>> A(nrows, std::vector<BigRational>(ncols));
    std::vector<BigRational> g(nrows);
    for (int k = 0; k <= max_n; ++k) {
        g[static_cast<size_t>(k)] = g_coeff(k);
        for (int j = 0; j <= std::min(k, max_d); ++j) {
            BigRational c = g[static_cast<size_t>(k)] * binomial_int(static_cast<unsigned>(k),
                                                                     static_cast<unsigned>(j));
            A[static_cast<size_t>(k)][static_cast<size_t>(j)] = (j % 2 == 0) ? c : -c;
        }
    }
    // Divide by g(s) in s, with t-polynomial coefficients.
    BivariateSeries out;
    out.c.assign(nrows, std::vector<BigRational>(ncols));
    for (int n = 0; n <= max_n; ++n) {
        std::vector<BigRational> row = A[static_cast<size_t>(n)];
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j <= max_d; ++j)
                row[static_cast<size_t>(j)] -=
                    g[static_cast<size_t>(i)] * out.c[static_cast<size_t>(n - i)][static_cast<size_t>(j)];
        for (int j = 0; j <= max_d; ++j)
            out.c[static_cast<size_t>(n)][static_cast<size_t>(j)] =
                row[static_cast<size_t>(j)] / g[0];
    }
    return out;
}

PiRational zeta_four_power(unsigned d) {
    BigRational coeff(BigInt(2) << (2 * d), factorial_int(4 * d + 2));
    return {std::move(coeff), static_cast<int>(4 * d)};
}

}  // namespace mzvq
