#include "doctest.h"

#include "json.hpp"

#include "errors.hpp"
#include "verify.hpp"

using namespace tabinv;

namespace {

VerifyOptions opts_max(std::int64_t max_n) {
    VerifyOptions o;
    o.max_n = max_n;
    return o;
}

VerifyOptions opts_mn(std::int64_t m, std::int64_t n) {
    VerifyOptions o;
    o.m = m;
    o.n = n;
    return o;
}

} // namespace

TEST_CASE("claim list") {
    CHECK(verify_claims().size() == 10);
    CHECK_THROWS_AS(run_verify("nonsense", VerifyOptions{}), Error);
}

TEST_CASE("hook and totals sweeps") {
    CHECK(run_verify("hook", opts_max(6)).passed());
    CHECK(run_verify("totals", opts_max(6)).passed());

    VerifyOptions single;
    single.shape = Partition::parse("3,3,3");
    CHECK(run_verify("hook", single).passed());
    CHECK(run_verify("totals", single).passed());
}

TEST_CASE("two-row claim") {
    VerifyOptions o;
    o.n = 4;
    auto report = run_verify("two-row", o);
    CHECK(report.passed());
    CHECK(run_verify("two-row", opts_max(5)).passed());
}

TEST_CASE("unique maximiser claim") {
    CHECK(run_verify("max-unique", opts_max(6)).passed());
    VerifyOptions single;
    single.shape = Partition::parse("3,3,2,2");
    CHECK(run_verify("max-unique", single).passed());
}

TEST_CASE("single-inversion claims") {
    VerifyOptions rect;
    rect.shape = Partition::parse("2,2,2");
    CHECK(run_verify("rect-i1", rect).passed());

    VerifyOptions bad;
    bad.shape = Partition::parse("3,2");
    CHECK_THROWS_AS(run_verify("rect-i1", bad), Error);

    CHECK(run_verify("general-i1", opts_max(6)).passed());
}

TEST_CASE("near-maximal claims") {
    CHECK(run_verify("m1", opts_mn(3, 2)).passed());
    CHECK(run_verify("m1", opts_mn(4, 2)).passed());
    CHECK(run_verify("m2", opts_mn(3, 2)).passed());
    CHECK_THROWS_AS(run_verify("m2", opts_mn(2, 3)), Error);
    CHECK_THROWS_AS(run_verify("m1", VerifyOptions{}), Error);
}

TEST_CASE("column-vs-hook claim") {
    VerifyOptions o = opts_mn(4, -1);
    o.n.reset();
    auto sweep = run_verify("lemma", o);
    CHECK(sweep.passed());
    CHECK(sweep.evidence.size() == 3); // i runs over (T_2, T_3] = {4, 5, 6}

    VerifyOptions single = o;
    single.i = 4;
    auto one = run_verify("lemma", single);
    CHECK(one.passed());
    CHECK(one.evidence[0]["column_count"] == 5);
    CHECK(one.evidence[0]["hook_count"] == 5);
    CHECK(one.evidence[0].contains("matching"));

    VerifyOptions outside = o;
    outside.i = 2;
    CHECK(run_verify("lemma", outside).status == "out-of-hypothesis");
}

TEST_CASE("tail claim") {
    auto report = run_verify("tail", opts_mn(3, 3));
    CHECK(report.passed());
    CHECK(report.params["threshold"] == 3);
    CHECK(report.params["empirical_tail_start"] == 4);

    auto small = run_verify("tail", opts_mn(3, 2));
    CHECK(small.passed());
    CHECK(small.params["empirical_tail_start"] == 3);

    CHECK(run_verify("tail", opts_mn(2, 2)).passed());
}

TEST_CASE("report serialization") {
    auto report = run_verify("m1", opts_mn(3, 1));
    auto j = nlohmann::json::parse(report.to_json());
    CHECK(j["claim"] == "m1");
    CHECK(j["status"] == "pass");
    CHECK(j["params"]["m"] == 3);
    CHECK(j["evidence"].is_array());
    CHECK(j["evidence"][0]["formula"] == 2);
}
