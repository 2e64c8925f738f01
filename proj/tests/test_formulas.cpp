#include "doctest.h"

#include <algorithm>

#include "errors.hpp"
#include "formulas.hpp"

using namespace tabinv;

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(5) == 42);
    CHECK(catalan(10) == 16796);
    // recurrence cross-check
    for (std::uint32_t n = 0; n < 12; ++n) {
        BigInt sum = 0;
        for (std::uint32_t k = 0; k <= n; ++k) sum += catalan(k) * catalan(n - k);
        CHECK(sum == catalan(n + 1));
    }
}

TEST_CASE("mahonian coefficients") {
    CHECK(mahonian_row(2) == std::vector<BigInt>{1, 2, 2, 1});
    CHECK(mahonian(3, 5) == 3);
    CHECK(mahonian(3, 4) == 5);
    CHECK(mahonian(3, 99) == 0);
    CHECK(mahonian(0, 0) == 1);
}

TEST_CASE("mahonian rows sum to the factorial and read the same both ways") {
    for (std::uint32_t m = 1; m <= 9; ++m) {
        auto row = mahonian_row(m - 1);
        CHECK(row.size() == triangular(m - 1) + 1);
        BigInt sum = 0;
        for (const auto& c : row) sum += c;
        CHECK(sum == factorial(m));
        auto reversed = row;
        std::reverse(reversed.begin(), reversed.end());
        CHECK(row == reversed);
        CHECK(row.back() == 1);
    }
}

TEST_CASE("mahonian identities near the top degree") {
    for (std::uint32_t m = 3; m <= 9; ++m) {
        std::uint64_t top = triangular(m - 1);
        CHECK(mahonian(m - 1, top - 1) == m - 1);
        CHECK(mahonian(m - 1, top - 2) == BigInt((m - 2)) * (m + 1) / 2);
    }
}

TEST_CASE("compositions") {
    auto c32 = compositions(3, 2);
    REQUIRE(c32.size() == 2);
    CHECK(c32[0] == Composition{2, 1});
    CHECK(c32[1] == Composition{1, 2});
    CHECK(compositions(3, 3) == std::vector<Composition>{{1, 1, 1}});
    CHECK(compositions(5, 1) == std::vector<Composition>{{5}});
    CHECK_THROWS_AS(compositions(3, 4), Error);
    for (std::uint32_t n = 1; n <= 9; ++n)
        for (std::uint32_t k = 1; k <= n; ++k)
            CHECK(BigInt(compositions(n, k).size()) == binomial(n - 1, k - 1));
}

TEST_CASE("two-row counts") {
    CHECK(two_row_count(3, 0) == 5);
    CHECK(two_row_count(3, 1) == 9);
    CHECK(two_row_count(3, 2) == 5);
    CHECK(two_row_count(3, 3) == 1);
    CHECK(two_row_count(3, 4) == 0);
    for (std::uint32_t n = 1; n <= 8; ++n) {
        CHECK(two_row_count(n, 0) == catalan(n));
        CHECK(two_row_count(n, n) == 1);
        CHECK(two_row_count(n, n + 1) == 0);
    }
}

TEST_CASE("two-row counts sum to the central binomial") {
    for (std::uint32_t n = 1; n <= 10; ++n) {
        BigInt sum = 0;
        for (std::uint32_t i = 0; i <= n; ++i) sum += two_row_count(n, i);
        CHECK(sum == binomial(2 * n, n));
    }
}

TEST_CASE("near-maximal closed forms") {
    CHECK(m_minus_1_count(3, 3) == 8);
    CHECK(m_minus_1_count(3, 4) == 11);
    CHECK(m_minus_1_count(2, 1) == 1);
    CHECK_THROWS_AS(m_minus_1_count(1, 5), Error);

    CHECK(m_minus_2_count(3, 4) == 65);
    CHECK(m_minus_2_count(3, 5) == 104);
    CHECK(m_minus_2_count(3, 1) == 2);
    CHECK_THROWS_AS(m_minus_2_count(2, 5), Error);
}

TEST_CASE("tail threshold") {
    CHECK(tail_end_threshold(3, 4) == 4);
    CHECK(tail_end_threshold(2, 7) == 0);
    CHECK(tail_end_threshold(4, 2) == 6);
}
