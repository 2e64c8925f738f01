#include "doctest.h"

#include <fstream>
#include <sstream>

#include "appendix.hpp"
#include "errors.hpp"

using namespace tabinv;

TEST_CASE("reference tables are internally consistent") {
    const auto& tables = appendix_golden();
    REQUIRE(tables.size() == 4);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> totals{
        {90, 60}, {1680, 1260}, {34650, 27720}, {756756, 630630}};
    for (std::size_t t = 0; t < tables.size(); ++t) {
        std::uint64_t left = 0, right = 0;
        for (auto v : tables[t].left_counts) left += v;
        for (auto v : tables[t].right_counts) right += v;
        CHECK(left == totals[t].first);
        CHECK(right == totals[t].second);
        CHECK(tables[t].left_counts.size() == max_inversions(tables[t].left) + 1);
        CHECK(tables[t].right_counts.size() == max_inversions(tables[t].right) + 1);
        CHECK(tables[t].left_counts.back() == 1);
        CHECK(tables[t].right_counts.back() == 1);
    }
}

TEST_CASE("regeneration matches the embedded reference") {
    auto result = run_appendix(4, kDefaultBudget, "text");
    CHECK(result.match);
    CHECK(result.diff.empty());
    CHECK(result.rendered.find("TOTAL  90       60       TOTAL") != std::string::npos);
    CHECK(result.rendered.find("756756") != std::string::npos);
}

TEST_CASE("rendered fixtures on disk match the embedded tables") {
    const auto& tables = appendix_golden();
    for (std::size_t t = 0; t < tables.size(); ++t) {
        std::ifstream in(std::string(TABINV_DATA_DIR) + "/appendix/table" +
                         std::to_string(t + 1) + ".txt");
        REQUIRE(in.good());
        std::ostringstream content;
        content << in.rdbuf();
        CHECK(content.str() == render_appendix_table(tables[t]));
    }
}

TEST_CASE("csv and json layouts") {
    auto csv = run_appendix(2, kDefaultBudget, "csv");
    CHECK(csv.match);
    CHECK(csv.rendered.rfind("shape,i,count\n", 0) == 0);
    CHECK(csv.rendered.find("\"2,2,2\",6,1\n") != std::string::npos);

    auto json = run_appendix(2, kDefaultBudget, "json");
    CHECK(json.match);
    CHECK(json.rendered.find("\"total\":756756") != std::string::npos);

    CHECK_THROWS_AS(run_appendix(1, kDefaultBudget, "xml"), Error);
}

TEST_CASE("budget propagates") {
    CHECK_THROWS_AS(run_appendix(1, 100, "text"), Error);
}
