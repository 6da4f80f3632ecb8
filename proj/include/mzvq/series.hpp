#pragma once

#include <vector>

#include "mzvq/exact.hpp"

namespace mzvq {

/// Power series with exact rational coefficients, truncated at a fixed
/// order. Coefficients beyond the order are unknown, not zero; binary
/// operations truncate the result to the minimum operand order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }
    explicit TruncatedSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficients");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRational& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    void set(int k, BigRational v) { coeffs_.at(static_cast<size_t>(k)) = std::move(v); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Series division; requires b[0] != 0.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    TruncatedSeries derivative() const;
    /// Divide by x^k; the first k coefficients must be zero.
    TruncatedSeries shift_down(int k) const;
    TruncatedSeries scaled(const BigRational& c) const;

private:
    std::vector<BigRational> coeffs_;
};

/// Rectangular table of rational coefficients c[n][d] of s^n t^d.
struct BivariateSeries {
    std::vector<std::vector<BigRational>> c;

    int order_s() const { return static_cast<int>(c.size()) - 1; }
    int order_t() const { return c.empty() ? -1 : static_cast<int>(c[0].size()) - 1; }
    const BigRational& at(int n, int d) const {
        return c.at(static_cast<size_t>(n)).at(static_cast<size_t>(d));
    }
};

/// g(t) = sum_{k=0}^{order} (-1)^k 4^k / (4k+2)! t^k.
TruncatedSeries g_series(int order);

/// Multiplies the truncated sin and sinh series, divides by 2x^2, and checks
/// the result against g applied to x^4, coefficientwise up to x^{4*order}.
bool verify_f_product(int order);

/// Exact table c[n][d] = Q(4n,d) / pi^{4n}, from expanding g(s(1-t))
/// bivariately and dividing by g(s) as a power series in s.
BivariateSeries q_rational_table(int max_n, int max_d);

/// zeta(4,...,4) with d fours, equal to 2 * 4^d * pi^{4d} / (4d+2)!.
PiRational zeta_four_power(unsigned d);

}  // namespace mzvq
