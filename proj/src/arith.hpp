#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tabinv {

// Exact integers for the counting formulas; factorials blow past 64 bits
// around N = 21.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Triangular number k(k+1)/2 with T_0 = 0.
std::uint64_t triangular(std::uint64_t k);

// C(n, k) clamped to UINT64_MAX on overflow; used for work partitioning
// where true values are pre-checked against the generation budget.
std::uint64_t binomial_u64_saturated(unsigned n, unsigned k);

std::string to_decimal(const BigInt& v);

} // namespace tabinv
