#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enumeration.hpp"
#include "partition.hpp"

namespace tabinv {

/// One reference table: a three-row rectangle next to its stair-step shape,
/// with the full inversion distributions of both.
struct AppendixTable {
    Partition left;
    Partition right;
    std::vector<std::uint64_t> left_counts;
    std::vector<std::uint64_t> right_counts;
};

/// The four reference tables: (2,2,2)/(3,2,1), (3,3,3)/(4,3,2),
/// (4,4,4)/(5,4,3), (5,5,5)/(6,5,4). Fixture copies of the rendered text
/// live under data/appendix/.
const std::vector<AppendixTable>& appendix_golden();

/// Fixed-width text rendering of one table. The right-hand column is offset
/// the way the reference lays it out: its row r sits beside the left row r+1
/// for r < n-1 and beside row r+2 from the tail onward, leaving the left
/// rows 0 and n unpaired.
std::string render_appendix_table(const AppendixTable& table);

struct AppendixResult {
    bool match = true;
    std::string rendered; // recomputed tables in the requested format
    std::string diff;     // empty when everything matches
};

/// Regenerates all four tables by enumeration and diffs them cell by cell
/// against the embedded reference values. format: text | json | csv.
AppendixResult run_appendix(unsigned workers, std::uint64_t budget, const std::string& format);

} // namespace tabinv
