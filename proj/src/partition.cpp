#include "partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace tabinv {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        fail(Status::invalid_argument, "a shape needs at least one row");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            fail(Status::invalid_argument, "row lengths must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(Status::invalid_argument, "row lengths must be non-increasing");
    }
    box_count_ = std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

bool Partition::is_rectangular() const {
    return parts_.front() == parts_.back();
}

Partition Partition::parse(const std::string& text) {
    std::vector<std::uint32_t> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        // trim surrounding blanks
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            fail(Status::parse_error, "empty part in shape '" + text + "'");
        token = token.substr(b, e - b + 1);
        std::uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            fail(Status::parse_error, "bad part '" + token + "' in shape '" + text + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        fail(Status::parse_error, std::string("invalid shape '") + text + "': " + e.what());
    }
}

std::string Partition::format() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

std::vector<std::uint32_t> column_heights(const Partition& p) {
    std::vector<std::uint32_t> heights(p.parts().front());
    for (std::uint32_t row_len : p.parts())
        for (std::uint32_t j = 0; j < row_len; ++j)
            ++heights[j];
    return heights;
}

std::uint64_t max_inversions(const Partition& p) {
    std::uint64_t total = 0;
    for (std::uint32_t h : column_heights(p)) total += triangular(h - 1);
    return total;
}

std::vector<std::vector<std::uint32_t>> hook_lengths(const Partition& p) {
    auto heights = column_heights(p);
    std::vector<std::vector<std::uint32_t>> hooks(p.rows());
    for (std::size_t r = 0; r < p.rows(); ++r) {
        hooks[r].resize(p.parts()[r]);
        for (std::uint32_t c = 0; c < p.parts()[r]; ++c) {
            std::uint32_t arm = p.parts()[r] - c - 1;
            std::uint32_t leg = heights[c] - static_cast<std::uint32_t>(r) - 1;
            hooks[r][c] = arm + leg + 1;
        }
    }
    return hooks;
}

BigInt standard_count_hook(const Partition& p) {
    BigInt product = 1;
    for (const auto& row : hook_lengths(p))
        for (std::uint32_t h : row) product *= h;
    BigInt numerator = factorial(static_cast<unsigned>(p.box_count()));
    if (numerator % product != 0)
        fail(Status::internal_error, "hook product does not divide N! for shape " + p.format());
    return numerator / product;
}

BigInt total_inverted_count(const Partition& p) {
    BigInt result = 1;
    std::uint64_t prefix = 0;
    for (std::uint32_t part : p.parts()) {
        prefix += part;
        result *= binomial(static_cast<unsigned>(prefix), part);
    }
    return result;
}

RowGaps row_gaps(const Partition& p) {
    RowGaps gaps;
    const auto& parts = p.parts();
    gaps.gap_below.resize(parts.size());
    gaps.gap_above.resize(parts.size());
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        gaps.gap_below[i] = parts[i] - parts[i + 1];
    gaps.gap_below.back() = parts.back();
    gaps.gap_above[0] = std::nullopt;
    for (std::size_t i = 1; i < parts.size(); ++i)
        gaps.gap_above[i] = parts[i - 1] - parts[i];
    return gaps;
}

Partition apply_move(const Partition& p, const StairStepMove& move) {
    auto parts = p.parts();
    if (move.source_row <= 1 || move.source_row > parts.size() ||
        move.target_row < 1 || move.target_row >= move.source_row)
        fail(Status::invalid_argument, "bad corner move for shape " + p.format());
    parts[move.target_row - 1] += 1;
    parts[move.source_row - 1] -= 1;
    if (parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

std::vector<std::pair<StairStepMove, Partition>> stair_step_shapes(const Partition& p) {
    auto gaps = row_gaps(p);
    std::vector<std::pair<StairStepMove, Partition>> result;
    for (std::uint32_t target = 1; target <= p.rows(); ++target) {
        if (target > 1 && *gaps.gap_above[target - 1] == 0) continue;
        for (std::uint32_t source = target + 1; source <= p.rows(); ++source) {
            if (gaps.gap_below[source - 1] == 0) continue;
            StairStepMove move{source, target};
            result.emplace_back(move, apply_move(p, move));
        }
    }
    return result;
}

StairStepMove move_between(const Partition& from, const Partition& to) {
    for (const auto& [move, shape] : stair_step_shapes(from))
        if (shape == to) return move;
    fail(Status::shape_mismatch,
         "shape " + to.format() + " is not one corner move away from " + from.format());
}

std::vector<Partition> partitions_of(std::uint32_t n) {
    std::vector<Partition> result;
    std::vector<std::uint32_t> current;
    auto recurse = [&](auto&& self, std::uint32_t remaining, std::uint32_t cap) -> void {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (std::uint32_t next = std::min(remaining, cap); next >= 1; --next) {
            current.push_back(next);
            self(self, remaining - next, next);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    return result;
}

} // namespace tabinv
