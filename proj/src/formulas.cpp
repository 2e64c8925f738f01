#include "formulas.hpp"

namespace tabinv {

BigInt catalan(std::uint32_t n) {
    return binomial(2 * n, n) / (n + 1);
}

std::vector<BigInt> mahonian_row(std::uint32_t m_minus_1) {
    std::vector<BigInt> coeffs{1};
    for (std::uint32_t j = 1; j <= m_minus_1; ++j) {
        // multiply by 1 + x + ... + x^j
        std::vector<BigInt> next(coeffs.size() + j, 0);
        for (std::size_t d = 0; d < coeffs.size(); ++d)
            for (std::uint32_t k = 0; k <= j; ++k)
                next[d + k] += coeffs[d];
        coeffs = std::move(next);
    }
    return coeffs;
}

BigInt mahonian(std::uint32_t m_minus_1, std::uint64_t i) {
    auto row = mahonian_row(m_minus_1);
    if (i >= row.size()) return 0;
    return row[i];
}

std::vector<Composition> compositions(std::uint32_t n, std::uint32_t k) {
    if (k < 1 || k > n)
        fail(Status::invalid_argument, "composition length must be within 1..n");
    std::vector<Composition> result;
    Composition current;
    auto recurse = [&](auto&& self, std::uint32_t remaining, std::uint32_t slots) -> void {
        if (slots == 1) {
            current.push_back(remaining);
            result.push_back(current);
            current.pop_back();
            return;
        }
        for (std::uint32_t first = remaining - slots + 1; first >= 1; --first) {
            current.push_back(first);
            self(self, remaining - first, slots - 1);
            current.pop_back();
        }
    };
    recurse(recurse, n, k);
    return result;
}

BigInt two_row_count(std::uint32_t n, std::uint32_t i) {
    if (n < 1) fail(Status::invalid_argument, "two-row shapes need n >= 1");
    if (i == 0) return catalan(n);
    if (i > n) return 0;

    std::vector<BigInt> catalans(n + 1);
    for (std::uint32_t j = 0; j <= n; ++j) catalans[j] = catalan(j);
    auto sum_over = [&](std::uint32_t length) {
        BigInt sum = 0;
        if (length < 1 || length > n) return sum;
        for (const auto& parts : compositions(n, length)) {
            BigInt term = 1;
            for (std::uint32_t part : parts) term *= catalans[part];
            sum += term;
        }
        return sum;
    };
    return sum_over(i) + sum_over(i + 1);
}

std::uint64_t m_minus_1_count(std::uint32_t m, std::uint32_t n) {
    if (m < 2) fail(Status::domain_error, "the next-to-maximal count needs at least two rows");
    if (n < 1) fail(Status::domain_error, "rectangles need n >= 1");
    return std::uint64_t{m} * n - 1;
}

std::uint64_t m_minus_2_count(std::uint32_t m, std::uint32_t n) {
    if (m < 3) fail(Status::domain_error, "the maximal-minus-two count needs at least three rows");
    if (n < 1) fail(Status::domain_error, "rectangles need n >= 1");
    std::uint64_t mn = std::uint64_t{m} * n;
    return (mn - 2) * (mn + 1) / 2;
}

std::uint64_t tail_end_threshold(std::uint32_t m, std::uint32_t n) {
    if (m < 2 || n < 1) fail(Status::domain_error, "tail threshold needs m >= 2, n >= 1");
    return n * triangular(m - 2);
}

} // namespace tabinv
