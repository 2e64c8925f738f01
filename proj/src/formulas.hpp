#pragma once

#include <cstdint>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace tabinv {

/// Ordered sequence of positive integers with a fixed sum.
using Composition = std::vector<std::uint32_t>;

BigInt catalan(std::uint32_t n);

/// Coefficients of (1+x)(1+x+x^2)...(1+x+...+x^(m-1)); index i counts the
/// length-m column fillings with i inversions. Degree is T_(m-1).
std::vector<BigInt> mahonian_row(std::uint32_t m_minus_1);
BigInt mahonian(std::uint32_t m_minus_1, std::uint64_t i);

/// All length-k compositions of n, lexicographically decreasing:
/// (n-k+1,1,...,1) first, (1,...,1,n-k+1) last.
std::vector<Composition> compositions(std::uint32_t n, std::uint32_t k);

/// Count of two-row n x n fillings with exactly i inversions: Catalan
/// products summed over length-i and length-(i+1) compositions of n.
BigInt two_row_count(std::uint32_t n, std::uint32_t i);

/// mn - 1, the count one below the maximal inversion number on an m x n
/// rectangle. Needs m >= 2.
std::uint64_t m_minus_1_count(std::uint32_t m, std::uint32_t n);

/// (mn-2)(mn+1)/2, the count two below the maximum. Needs m >= 3; two-row
/// rectangles cannot lose two inversions within one column.
std::uint64_t m_minus_2_count(std::uint32_t m, std::uint32_t n);

/// n * T_(m-2): above this inversion count the m x n distribution is
/// conjectured to match the stair-step shape's, shifted by m-1.
std::uint64_t tail_end_threshold(std::uint32_t m, std::uint32_t n);

} // namespace tabinv
