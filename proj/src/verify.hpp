#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "enumeration.hpp"
#include "partition.hpp"

namespace tabinv {

struct VerifyOptions {
    std::optional<Partition> shape;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> i;
    std::optional<std::int64_t> max_n;
    unsigned workers = 1;
    std::uint64_t budget = kDefaultBudget;
};

struct VerifyReport {
    std::string claim;
    nlohmann::ordered_json params;
    std::string status; // "pass" | "fail" | "out-of-hypothesis"
    nlohmann::ordered_json evidence;

    bool passed() const { return status == "pass"; }
    std::string to_json() const;
};

/// Runs one named cross-check of a closed formula or constructive map
/// against exhaustive enumeration. Claims:
///   hook        counts[0] matches the hook-length count
///   totals      sum of the distribution matches the product-of-binomials total
///   two-row     Catalan-composition formula matches |S_i((n,n))|
///   max-unique  one filling attains the bound and it is the constructed one
///   rect-i1     |S_1| of a rectangle matches its stair-step standard count,
///               with the explicit map round-tripping every element
///   general-i1  |S_1| matches the sum over all corner moves, likewise
///   m1          mn-1 matches the count one under the maximum
///   m2          (mn-2)(mn+1)/2 matches the count two under the maximum
///   lemma       one-column vs hook-shape tail equality with the
///               top-entry refinement and an explicit matching
///   tail        tail of the rectangle's distribution matches the stair
///               step's, shifted by m-1, above n*T_(m-2)
VerifyReport run_verify(const std::string& claim, const VerifyOptions& opts);

const std::vector<std::string>& verify_claims();

} // namespace tabinv
