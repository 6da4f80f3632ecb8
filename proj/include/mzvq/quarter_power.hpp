#pragma once

#include <map>

#include "mzvq/exact.hpp"

namespace mzvq {

enum class BaseVar { OneMinusV, U, S };

/// Finite rational linear combination of quarter powers of a base variable:
/// sum of coeff * base^(e/4) over stored integer exponents e. Zero
/// coefficients are never stored.
class QuarterPowerPoly {
public:
    explicit QuarterPowerPoly(BaseVar base) : base_(base) {}

    BaseVar base() const { return base_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigRational>& terms() const { return terms_; }

    void add_term(int e, const BigRational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigRational coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    /// Largest exponent in quarter units, or INT_MIN when zero.
    int max_exponent() const;

    /// Value at base = 1 (sum of all coefficients); used for the v = 0
    /// initial conditions of the (1-v)-based families.
    BigRational value_at_base_one() const;

    QuarterPowerPoly scaled(const BigRational& c) const;
    /// Multiply by base^(delta/4), i.e. shift every exponent by delta.
    QuarterPowerPoly exponent_shifted(int delta) const;

    friend QuarterPowerPoly operator+(const QuarterPowerPoly& a, const QuarterPowerPoly& b);
    friend QuarterPowerPoly operator-(const QuarterPowerPoly& a, const QuarterPowerPoly& b);
    friend bool operator==(const QuarterPowerPoly& a, const QuarterPowerPoly& b) = default;

private:
    BaseVar base_;
    std::map<int, BigRational> terms_;
};

/// d/dv for a (1-v)-based polynomial: coeff c at exponent e maps to
/// -c*(e/4) at e-4. Any other base throws.
QuarterPowerPoly ddv(const QuarterPowerPoly& p);

/// d/du for a u-based polynomial with integer powers of u (exponents that
/// are multiples of 4): u^k maps to k*u^{k-1}.
QuarterPowerPoly ddu(const QuarterPowerPoly& p);

}  // namespace mzvq
