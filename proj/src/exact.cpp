#include "mzvq/exact.hpp"

#include <mutex>
#include <vector>

namespace mzvq {

BigInt factorial_int(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial_int(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // divides exactly at each step
    }
    return r;
}

BigRational pow2_rational(int e) {
    if (e >= 0) return BigRational(BigInt(1) << e);
    return BigRational(1, BigInt(1) << (-e));
}

namespace {
std::vector<BigRational>& bernoulli_cache() {
    static std::vector<BigRational> cache{BigRational(1), BigRational(-1, 2)};
    return cache;
}
std::mutex bernoulli_mutex;
}  // namespace

BigRational bernoulli(unsigned m) {
    std::scoped_lock lock(bernoulli_mutex);
    auto& cache = bernoulli_cache();
    while (cache.size() <= m) {
        // sum_{k=0}^{i} C(i+1,k) B_k = 0 for i >= 1
        const unsigned i = static_cast<unsigned>(cache.size());
        BigRational acc = 0;
        for (unsigned k = 0; k < i; ++k)
            acc += BigRational(binomial_int(i + 1, k)) * cache[k];
        cache.push_back(-acc / (i + 1));
    }
    return cache[m];
}

PiRational zeta_even(unsigned m) {
    if (m % 2 != 0)
        throw std::domain_error("zeta_even: argument must be even (odd zeta values are not "
                                "rational multiples of pi powers)");
    if (m == 0) return {BigRational(-1, 2), 0};
    const unsigned n = m / 2;
    const int sign = (n % 2 == 1) ? 1 : -1;  // (-1)^{n+1}
    BigRational coeff = bernoulli(2 * n) * BigRational(BigInt(1) << (2 * n));
    coeff /= 2 * factorial_int(2 * n);
    return {sign * coeff, static_cast<int>(m)};
}

BigRational gen_binomial(const BigRational& a, unsigned d) {
    BigRational r = 1;
    for (unsigned i = 0; i < d; ++i) r *= a - i;
    return r / factorial_int(d);
}

}  // namespace mzvq
