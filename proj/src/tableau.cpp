#include "tableau.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace tabinv {

namespace {

Partition shape_of(const Grid& rows) {
    std::vector<std::uint32_t> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<std::uint32_t>(row.size()));
    try {
        return Partition(std::move(parts));
    } catch (const Error&) {
        fail(Status::parse_error, "row lengths must be positive and non-increasing");
    }
}

} // namespace

Tableau::Tableau(Grid rows) : rows_(std::move(rows)), shape_(shape_of(rows_)) {
    std::uint64_t n = shape_.box_count();
    std::vector<bool> seen(n + 1, false);
    for (const auto& row : rows_) {
        for (std::uint32_t v : row) {
            if (v < 1 || v > n || seen[v])
                fail(Status::parse_error,
                     "entries must be exactly 1.." + std::to_string(n) + ", each once");
            seen[v] = true;
        }
    }
}

Tableau Tableau::parse(const std::string& text) {
    Grid rows(1);
    std::size_t pos = 0;
    while (pos < text.size()) {
        char ch = text[pos];
        if (ch == '/' || ch == '\n') {
            rows.emplace_back();
            ++pos;
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++pos;
        } else {
            std::size_t end = text.find_first_of(" \t\r\n/", pos);
            if (end == std::string::npos) end = text.size();
            std::string token = text.substr(pos, end - pos);
            std::uint32_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                fail(Status::parse_error, "bad entry '" + token + "' in tableau");
            rows.back().push_back(value);
            pos = end;
        }
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    for (const auto& row : rows)
        if (row.empty()) fail(Status::parse_error, "empty row in tableau");
    if (rows.empty()) fail(Status::parse_error, "empty tableau");
    return Tableau(std::move(rows));
}

std::string Tableau::format() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out << " / ";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out << ' ';
            out << rows_[r][c];
        }
    }
    return out.str();
}

bool is_row_standard(const Tableau& t) {
    for (const auto& row : t.rows())
        for (std::size_t c = 1; c < row.size(); ++c)
            if (row[c - 1] >= row[c]) return false;
    return true;
}

bool is_column_standard(const Tableau& t) {
    const Grid& rows = t.rows();
    for (std::size_t r = 1; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r - 1][c] >= rows[r][c]) return false;
    return true;
}

bool is_standard(const Tableau& t) {
    return is_row_standard(t) && is_column_standard(t);
}

InvertedTableau::InvertedTableau(Tableau t) : t_(std::move(t)) {
    if (!is_row_standard(t_))
        fail(Status::input_not_standard, "tableau is not row-standard: " + t_.format());
}

std::vector<InversionPair> inversions(const InvertedTableau& t) {
    const Grid& rows = t.rows();
    const auto& parts = t.shape().parts();
    auto heights = column_heights(t.shape());
    std::vector<InversionPair> result;
    for (std::uint32_t c = 0; c < heights.size(); ++c) {
        for (std::uint32_t r1 = 0; r1 < heights[c]; ++r1) {
            for (std::uint32_t r2 = r1 + 1; r2 < heights[c]; ++r2) {
                std::uint32_t upper = rows[r1][c];
                std::uint32_t lower = rows[r2][c];
                bool upper_has_right = parts[r1] > c + 1;
                bool lower_has_right = parts[r2] > c + 1;
                bool inverted;
                if (!upper_has_right || !lower_has_right) {
                    // the smaller entry must sit below the larger one
                    inverted = upper > lower;
                } else {
                    std::uint32_t small_right =
                        upper < lower ? rows[r1][c + 1] : rows[r2][c + 1];
                    std::uint32_t large_right =
                        upper < lower ? rows[r2][c + 1] : rows[r1][c + 1];
                    inverted = small_right > large_right;
                }
                if (inverted)
                    result.push_back({std::min(upper, lower), std::max(upper, lower), c + 1});
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::uint64_t inversion_count(const Grid& rows, const Partition& shape) {
    const auto& parts = shape.parts();
    std::uint64_t count = 0;
    std::uint32_t width = parts[0];
    for (std::uint32_t c = 0; c < width; ++c) {
        // rows covering column c are a prefix because parts are non-increasing
        std::uint32_t height = 0;
        while (height < parts.size() && parts[height] > c) ++height;
        for (std::uint32_t r1 = 0; r1 < height; ++r1) {
            bool upper_has_right = parts[r1] > c + 1;
            std::uint32_t upper = rows[r1][c];
            for (std::uint32_t r2 = r1 + 1; r2 < height; ++r2) {
                std::uint32_t lower = rows[r2][c];
                if (!upper_has_right || parts[r2] <= c + 1) {
                    count += upper > lower;
                } else if (upper < lower) {
                    count += rows[r1][c + 1] > rows[r2][c + 1];
                } else {
                    count += rows[r2][c + 1] > rows[r1][c + 1];
                }
            }
        }
    }
    return count;
}

std::uint64_t inversion_count(const InvertedTableau& t) {
    return inversion_count(t.rows(), t.shape());
}

Tableau standardize(const InvertedTableau& t) {
    Grid rows = t.rows();
    auto heights = column_heights(t.shape());
    std::vector<std::uint32_t> column;
    for (std::uint32_t c = 0; c < heights.size(); ++c) {
        column.clear();
        for (std::uint32_t r = 0; r < heights[c]; ++r) column.push_back(rows[r][c]);
        std::sort(column.begin(), column.end());
        for (std::uint32_t r = 0; r < heights[c]; ++r) rows[r][c] = column[r];
    }
    Tableau result(std::move(rows));
    if (!is_standard(result))
        fail(Status::internal_error, "column sort failed to standardize " + t.tableau().format());
    return result;
}

std::set<std::uint32_t> split_points(const InvertedTableau& t) {
    if (!t.shape().is_rectangular())
        fail(Status::unsupported_shape,
             "splitting is defined for rectangular shapes only, got " + t.shape().format());
    const Grid& rows = t.rows();
    std::uint32_t m = static_cast<std::uint32_t>(rows.size());
    std::uint32_t n = t.shape().parts()[0];
    std::set<std::uint32_t> result;
    std::uint32_t prefix_max = 0;
    for (std::uint32_t j = 1; j < n; ++j) {
        for (std::uint32_t r = 0; r < m; ++r)
            prefix_max = std::max(prefix_max, rows[r][j - 1]);
        // j*m distinct entries with maximum j*m means the prefix is {1..jm}
        if (prefix_max == j * m) result.insert(j);
    }
    return result;
}

InvertedTableau max_inversion_tableau(const Partition& p) {
    auto heights = column_heights(p);
    Grid rows(p.rows());
    for (std::size_t r = 0; r < p.rows(); ++r) rows[r].resize(p.parts()[r]);

    std::uint32_t next = static_cast<std::uint32_t>(p.box_count());
    for (std::uint32_t c = static_cast<std::uint32_t>(heights.size()); c >= 1; --c) {
        std::uint32_t h = heights[c - 1];
        // order rows by their right-neighbour value; absent neighbours rank
        // above every real entry and grow with the row index
        std::vector<std::uint32_t> order(h);
        std::iota(order.begin(), order.end(), 0);
        auto key = [&](std::uint32_t r) -> std::uint64_t {
            if (p.parts()[r] > c) return rows[r][c];
            return (std::uint64_t{1} << 32) + r;
        };
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
        for (std::uint32_t r : order) rows[r][c - 1] = next--;
    }

    InvertedTableau result{Tableau(std::move(rows))};
    if (inversion_count(result) != max_inversions(p))
        fail(Status::internal_error, "maximal construction missed the bound for " + p.format());
    return result;
}

} // namespace tabinv
