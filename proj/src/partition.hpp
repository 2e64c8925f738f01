#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"

namespace tabinv {

/// A tableau shape: a non-increasing sequence of positive row lengths.
/// Rows and columns are 1-based everywhere in the documented interface.
class Partition {
public:
    explicit Partition(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::uint32_t part(std::size_t row_1based) const { return parts_[row_1based - 1]; }
    std::size_t rows() const { return parts_.size(); }
    std::uint64_t box_count() const { return box_count_; } // N

    bool is_rectangular() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    /// Parses a comma-separated part list, e.g. "4,3,2,2".
    static Partition parse(const std::string& text);
    std::string format() const;

private:
    std::vector<std::uint32_t> parts_;
    std::uint64_t box_count_;
};

/// Relocation of one removable corner box: the last box of source_row moves
/// to the end of target_row (target_row < source_row). Applying it yields
/// another valid shape with the same box count.
struct StairStepMove {
    std::uint32_t source_row = 0; // 1-based, > 1
    std::uint32_t target_row = 0; // 1-based, < source_row

    bool operator==(const StairStepMove& o) const {
        return source_row == o.source_row && target_row == o.target_row;
    }
};

/// Per-row slack in the shape. gap_below[i] is how far row i+1 falls short of
/// row i (with the final row's full length as its own slack); gap_above[i] is
/// the room left before row i reaches the length of row i-1. gap_above for
/// the first row is unbounded, kept as an explicit empty optional rather than
/// a sentinel value.
struct RowGaps {
    std::vector<std::uint32_t> gap_below;                // d_i, 1-based via index+1
    std::vector<std::optional<std::uint32_t>> gap_above; // d~_i, nullopt = unbounded
};

/// Heights h_j of the columns, j = 1..lambda_1; non-increasing, sums to N.
std::vector<std::uint32_t> column_heights(const Partition& p);

/// Largest inversion count any row-standard filling of this shape can carry:
/// sum over columns of C(h_j, 2).
std::uint64_t max_inversions(const Partition& p);

/// Hook length of every box, row by row.
std::vector<std::vector<std::uint32_t>> hook_lengths(const Partition& p);

/// Number of fillings that are standard both ways: N! / product of hooks.
BigInt standard_count_hook(const Partition& p);

/// Number of row-standard fillings: the product of binomials
/// C(l1+...+lm, lm) * C(l1+...+l(m-1), l(m-1)) * ... * C(l1, l1).
BigInt total_inverted_count(const Partition& p);

RowGaps row_gaps(const Partition& p);

/// All corner relocations legal for this shape, ordered lexicographically by
/// (target_row, source_row), each paired with the resulting shape.
std::vector<std::pair<StairStepMove, Partition>> stair_step_shapes(const Partition& p);

/// The shape produced by one move; a row shrunk to zero length is dropped.
Partition apply_move(const Partition& p, const StairStepMove& move);

/// Recovers the unique move with apply_move(from, move) == to, or fails with
/// shape_mismatch.
StairStepMove move_between(const Partition& from, const Partition& to);

/// All partitions of n, descending lexicographic order.
std::vector<Partition> partitions_of(std::uint32_t n);

} // namespace tabinv
