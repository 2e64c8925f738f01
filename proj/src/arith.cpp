#include "arith.hpp"

#include <limits>

namespace tabinv {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact: r is C(n, i+1) * C(i+1 prefix), always integral
    }
    return r;
}

std::uint64_t triangular(std::uint64_t k) {
    return (k % 2 == 0) ? (k / 2) * (k + 1) : k * ((k + 1) / 2);
}

std::uint64_t binomial_u64_saturated(unsigned n, unsigned k) {
    BigInt v = binomial(n, k);
    if (v > std::numeric_limits<std::uint64_t>::max())
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(v);
}

std::string to_decimal(const BigInt& v) {
    return v.str();
}

} // namespace tabinv
