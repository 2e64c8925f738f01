// Exercises the shared-library surface straight through the C header.
#include "doctest.h"

#include <cstring>
#include <string>

#include "tabinv.h"

namespace {

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { tabinv_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

} // namespace

TEST_CASE("partition round trip and counting") {
    tabinv_partition* p = nullptr;
    REQUIRE(tabinv_partition_parse("3,3,3", &p) == TABINV_OK);
    CHECK(tabinv_partition_rows(p) == 3);
    CHECK(tabinv_partition_row_length(p, 1) == 3);
    CHECK(tabinv_partition_boxes(p) == 9);
    CHECK(tabinv_max_inversions(p) == 9);

    StringGuard fmt{tabinv_partition_format(p)};
    CHECK(fmt.str() == "3,3,3");

    StringGuard hook, total;
    CHECK(tabinv_standard_count(p, &hook.s) == TABINV_OK);
    CHECK(hook.str() == "42");
    CHECK(tabinv_total_inverted_count(p, &total.s) == TABINV_OK);
    CHECK(total.str() == "1680");

    StringGuard steps;
    CHECK(tabinv_stair_steps(p, &steps.s) == TABINV_OK);
    CHECK(steps.str() ==
          "[{\"source_row\":3,\"target_row\":1,\"shape\":[4,3,2]}]\n");
    tabinv_partition_free(p);
}

TEST_CASE("parse errors carry a message") {
    tabinv_partition* p = nullptr;
    CHECK(tabinv_partition_parse("3,4", &p) == TABINV_ERROR_PARSE);
    CHECK(std::strlen(tabinv_last_error()) > 0);
    CHECK(std::string(tabinv_status_name(TABINV_ERROR_PARSE)) == "parse-error");
}

TEST_CASE("tableau operations") {
    tabinv_tableau* t = nullptr;
    REQUIRE(tabinv_tableau_parse("1 2 8 / 4 5 6 / 3 7 9", &t) == TABINV_OK);
    CHECK(tabinv_is_row_standard(t) == 1);
    CHECK(tabinv_is_column_standard(t) == 0);

    uint64_t count = 0;
    CHECK(tabinv_inversion_count(t, &count) == TABINV_OK);
    CHECK(count == 3);

    StringGuard pairs;
    CHECK(tabinv_inversions(t, &pairs.s) == TABINV_OK);
    CHECK(pairs.str().find("{\"small\":3,\"large\":4,\"column\":1}") != std::string::npos);

    tabinv_tableau* st = nullptr;
    REQUIRE(tabinv_standardize(t, &st) == TABINV_OK);
    StringGuard st_fmt{tabinv_tableau_format(st)};
    CHECK(st_fmt.str() == "1 2 6 / 3 5 8 / 4 7 9");
    tabinv_tableau_free(st);
    tabinv_tableau_free(t);
}

TEST_CASE("maximal tableau construction") {
    tabinv_partition* p = nullptr;
    REQUIRE(tabinv_partition_parse("3,3,2,2", &p) == TABINV_OK);
    tabinv_tableau* t = nullptr;
    REQUIRE(tabinv_max_inversion_tableau(p, &t) == TABINV_OK);
    StringGuard fmt{tabinv_tableau_format(t)};
    CHECK(fmt.str() == "2 7 10 / 1 8 9 / 3 6 / 4 5");
    tabinv_tableau_free(t);
    tabinv_partition_free(p);
}

TEST_CASE("distribution handle") {
    tabinv_partition* p = nullptr;
    REQUIRE(tabinv_partition_parse("2,2,2", &p) == TABINV_OK);
    tabinv_distribution* d = nullptr;
    REQUIRE(tabinv_distribution_compute(p, 2, 0, &d) == TABINV_OK);
    CHECK(tabinv_distribution_length(d) == 7);
    CHECK(tabinv_distribution_count(d, 0) == 5);
    CHECK(tabinv_distribution_count(d, 6) == 1);
    CHECK(tabinv_distribution_count(d, 99) == 0);
    CHECK(tabinv_distribution_total(d) == 90);

    StringGuard text;
    CHECK(tabinv_distribution_render(d, "text", &text.s) == TABINV_OK);
    CHECK(text.str().find("TOTAL 90") != std::string::npos);
    StringGuard bad;
    CHECK(tabinv_distribution_render(d, "yaml", &bad.s) == TABINV_ERROR_INVALID_ARGUMENT);
    tabinv_distribution_free(d);

    tabinv_distribution* over = nullptr;
    CHECK(tabinv_distribution_compute(p, 1, 10, &over) == TABINV_ERROR_BUDGET_EXCEEDED);
    tabinv_partition_free(p);
}

TEST_CASE("fiber and betti") {
    tabinv_tableau* t = nullptr;
    REQUIRE(tabinv_tableau_parse("1 3 / 2 4", &t) == TABINV_OK);
    StringGuard lines;
    uint64_t count = 0;
    CHECK(tabinv_fiber(t, 0, &lines.s, &count) == TABINV_OK);
    CHECK(count == 4);
    CHECK(lines.str().find("2 4 / 1 3\n") != std::string::npos);
    tabinv_tableau_free(t);

    tabinv_partition* p = nullptr;
    REQUIRE(tabinv_partition_parse("1,1,1", &p) == TABINV_OK);
    StringGuard betti;
    CHECK(tabinv_betti_render(p, 1, 0, "json", &betti.s) == TABINV_OK);
    CHECK(betti.str() ==
          "{\"shape\":[1,1,1],\"dimension\":3,\"betti\":[1,2,2,1]}\n");
    tabinv_partition_free(p);
}

TEST_CASE("maps through the C surface") {
    tabinv_tableau* t = nullptr;
    REQUIRE(tabinv_tableau_parse("1 2 6 / 4 5 7 / 3 8 9", &t) == TABINV_OK);
    tabinv_tableau* image = nullptr;
    StringGuard trace;
    REQUIRE(tabinv_map_phi1(t, &image, &trace.s) == TABINV_OK);
    StringGuard fmt{tabinv_tableau_format(image)};
    CHECK(fmt.str() == "1 2 5 6 / 3 4 7 / 8 9");
    CHECK(trace.str().find("\"move\":{\"source_row\":3,\"target_row\":1}") !=
          std::string::npos);

    tabinv_tableau* back = nullptr;
    REQUIRE(tabinv_map_phi2(image, nullptr, &back, nullptr) == TABINV_OK);
    StringGuard back_fmt{tabinv_tableau_format(back)};
    CHECK(back_fmt.str() == "1 2 6 / 4 5 7 / 3 8 9");

    tabinv_tableau_free(back);
    tabinv_tableau_free(image);
    tabinv_tableau_free(t);

    tabinv_tableau* standard = nullptr;
    REQUIRE(tabinv_tableau_parse("1 2 / 3 4", &standard) == TABINV_OK);
    tabinv_tableau* none = nullptr;
    CHECK(tabinv_map_phi1(standard, &none, nullptr) == TABINV_ERROR_WRONG_INVERSION_COUNT);
    tabinv_tableau_free(standard);
}

TEST_CASE("verification and reference tables") {
    tabinv_verify_options opts{nullptr, 3, 5, -1, -1, 0, 0};
    StringGuard report;
    CHECK(tabinv_verify("m2", &opts, &report.s) == TABINV_OK);
    CHECK(report.str().find("\"status\":\"pass\"") != std::string::npos);
    CHECK(report.str().find("\"formula\":104") != std::string::npos);

    CHECK(tabinv_verify("made-up", &opts, nullptr) == TABINV_ERROR_INVALID_ARGUMENT);

    StringGuard rendered, diff;
    CHECK(tabinv_appendix(4, 0, "text", &rendered.s, &diff.s) == TABINV_OK);
    CHECK(diff.str().empty());
    CHECK(rendered.str().find("(6,5,4)") != std::string::npos);
}
