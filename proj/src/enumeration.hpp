#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "partition.hpp"
#include "tableau.hpp"

namespace tabinv {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000; // generated tableaux

/// Counts of row-standard fillings by inversion number, index 0..M.
struct InversionDistribution {
    Partition shape;
    std::vector<std::uint64_t> counts;

    std::uint64_t max_inversions() const { return counts.size() - 1; }
    std::uint64_t total() const;

    std::string to_text() const; // "m=i  count" rows plus TOTAL
    std::string to_json() const; // {"shape":[...],"max_inversions":M,"counts":[...],"total":T}
    std::string to_csv() const;  // header "i,count"
};

/// Half-open block of first-row choices, as ranks into the lexicographic
/// sequence of leading-row subsets. Blocks cover the space disjointly, so
/// per-block tallies merge by addition no matter how many workers run.
struct WorkRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;

    bool empty() const { return begin >= end; }
};

/// Splits the enumeration into exactly `workers` contiguous ranges (some may
/// be empty when workers exceed the number of first-row choices).
std::vector<WorkRange> partition_work(const Partition& p, unsigned workers);

/// Walks every row-standard filling of p exactly once, in lexicographic
/// order of the rows read top to bottom (each row is a sorted subset of the
/// values unused by the rows above it). The grid passed to fn is reused;
/// copy it if it must outlive the call.
void for_each_inverted(const Partition& p, std::uint64_t budget,
                       const std::function<void(const Grid&)>& fn);

/// Same walk restricted to one first-row block; used by the parallel tally.
void for_each_inverted_in_range(const Partition& p, const WorkRange& range,
                                const std::function<void(const Grid&)>& fn);

/// Materialised enumeration in the same order.
std::vector<InvertedTableau> enumerate_inverted(const Partition& p,
                                                std::uint64_t budget = kDefaultBudget);

/// Full inversion tally by exhaustive generation. Refuses shapes whose total
/// filling count exceeds the budget. workers > 1 splits by first row.
InversionDistribution inversion_distribution(const Partition& p, unsigned workers = 1,
                                             std::uint64_t budget = kDefaultBudget);

/// All row-standard fillings whose per-column sort gives back T: the column
/// contents of T rearranged every legal way. T must be standard.
std::vector<InvertedTableau> fiber(const Tableau& T, std::uint64_t budget = kDefaultBudget);

/// The inversion tally read backwards: index d - m with d = max_inversions,
/// so entry 0 is always 1. The top index d is taken to be the shape's
/// maximal inversion number, which is the only value consistent with a
/// leading 1 and a trailing standard-count entry.
std::vector<std::uint64_t> betti_numbers(const Partition& p, unsigned workers = 1,
                                         std::uint64_t budget = kDefaultBudget);

std::string betti_to_json(const Partition& p, const std::vector<std::uint64_t>& betti);

} // namespace tabinv
