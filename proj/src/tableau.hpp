#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "partition.hpp"

namespace tabinv {

using Row = std::vector<std::uint32_t>;
using Grid = std::vector<Row>;

/// A shape filled bijectively by 1..N. No ordering is promised beyond that;
/// see InvertedTableau for the row-standard refinement.
class Tableau {
public:
    explicit Tableau(Grid rows);

    const Grid& rows() const { return rows_; }
    const Partition& shape() const { return shape_; }
    std::uint64_t box_count() const { return shape_.box_count(); }
    std::uint32_t at(std::uint32_t row_1based, std::uint32_t col_1based) const {
        return rows_[row_1based - 1][col_1based - 1];
    }

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const Tableau& o) const { return rows_ != o.rows_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

    /// Parses "1 2 8 / 4 5 6 / 3 7 9"; newlines work as row separators too.
    static Tableau parse(const std::string& text);
    /// Inline form with " / " between rows.
    std::string format() const;

private:
    Grid rows_;
    Partition shape_;
};

bool is_row_standard(const Tableau& t);
bool is_column_standard(const Tableau& t);
bool is_standard(const Tableau& t);

/// A row-standard tableau. Columns may be out of order; that disorder is
/// what the inversion pairs measure.
class InvertedTableau {
public:
    explicit InvertedTableau(Tableau t);
    explicit InvertedTableau(Grid rows) : InvertedTableau(Tableau(std::move(rows))) {}

    const Tableau& tableau() const { return t_; }
    const Grid& rows() const { return t_.rows(); }
    const Partition& shape() const { return t_.shape(); }

    bool operator==(const InvertedTableau& o) const { return t_ == o.t_; }
    bool operator<(const InvertedTableau& o) const { return t_ < o.t_; }

private:
    Tableau t_;
};

/// Same-column pair small < large that breaks column order: either one of the
/// two has no box to its right and small sits below large, or both have right
/// neighbours and those appear in reversed order.
struct InversionPair {
    std::uint32_t small = 0;
    std::uint32_t large = 0;
    std::uint32_t column = 0; // 1-based

    bool operator==(const InversionPair& o) const {
        return small == o.small && large == o.large && column == o.column;
    }
    bool operator<(const InversionPair& o) const {
        if (column != o.column) return column < o.column;
        if (small != o.small) return small < o.small;
        return large < o.large;
    }
};

/// Every inversion pair, sorted by (column, small, large).
std::vector<InversionPair> inversions(const InvertedTableau& t);

/// Pair count only; avoids materialising pairs in hot enumeration loops.
std::uint64_t inversion_count(const Grid& rows, const Partition& shape);
std::uint64_t inversion_count(const InvertedTableau& t);

/// Sorts each column increasing top-to-bottom. The result is standard both
/// ways and carries no inversions.
Tableau standardize(const InvertedTableau& t);

/// Columns j < n of an m x n rectangle whose prefix holds exactly {1..jm}.
/// Only defined for rectangles; anything else is unsupported_shape.
std::set<std::uint32_t> split_points(const InvertedTableau& t);

/// The unique filling attaining max_inversions(p). Built right to left: the
/// rightmost column takes the largest values in decreasing order, then each
/// column to the left takes the next-largest values arranged in the order
/// opposite to its right neighbours, where a missing right neighbour in row r
/// counts as an arbitrarily large value growing with r.
InvertedTableau max_inversion_tableau(const Partition& p);

} // namespace tabinv
