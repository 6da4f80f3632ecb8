#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mzvq {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-size rational, kept in canonical reduced form (gcd 1, positive
// denominator) by the backend.
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial_int(unsigned n);
BigInt binomial_int(unsigned n, unsigned k);

// 2^e as an exact rational; e may be negative.
BigRational pow2_rational(int e);

/// A value q * pi^m with q rational and m >= 0.
///
/// Addition and subtraction are defined only between equal pi powers; a
/// mismatch throws instead of coercing. Multiplication adds powers.
struct PiRational {
    BigRational coeff{0};
    int pi_power = 0;

    PiRational() = default;
    PiRational(BigRational c, int power) : coeff(std::move(c)), pi_power(power) {
        if (power < 0)
            throw std::invalid_argument("PiRational: negative pi power");
    }

    bool is_zero() const { return coeff == 0; }

    friend PiRational operator+(const PiRational& a, const PiRational& b) {
        if (a.pi_power != b.pi_power)
            throw std::invalid_argument("PiRational: pi power mismatch in addition (" +
                                        std::to_string(a.pi_power) + " vs " +
                                        std::to_string(b.pi_power) + ")");
        return {a.coeff + b.coeff, a.pi_power};
    }
    friend PiRational operator-(const PiRational& a, const PiRational& b) {
        if (a.pi_power != b.pi_power)
            throw std::invalid_argument("PiRational: pi power mismatch in subtraction (" +
                                        std::to_string(a.pi_power) + " vs " +
                                        std::to_string(b.pi_power) + ")");
        return {a.coeff - b.coeff, a.pi_power};
    }
    friend PiRational operator*(const PiRational& a, const PiRational& b) {
        return {a.coeff * b.coeff, a.pi_power + b.pi_power};
    }
    friend PiRational operator*(const BigRational& c, const PiRational& a) {
        return {c * a.coeff, a.pi_power};
    }
    PiRational operator-() const { return {-coeff, pi_power}; }

    friend bool operator==(const PiRational& a, const PiRational& b) {
        return a.coeff == b.coeff && a.pi_power == b.pi_power;
    }
};

/// Bernoulli number B_m with the B_1 = -1/2 convention. Memoized; safe to
/// call concurrently.
BigRational bernoulli(unsigned m);

/// zeta(m) for even m >= 0 as an exact rational multiple of pi^m, via
/// zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!), and zeta(0) = -1/2.
/// Odd m throws: odd zeta values have no rational pi-power form.
PiRational zeta_even(unsigned m);

/// Generalized binomial coefficient a(a-1)...(a-d+1)/d! with rational upper
/// argument; 1 when d = 0.
BigRational gen_binomial(const BigRational& a, unsigned d);

}  // namespace mzvq
