#include "appendix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "errors.hpp"

namespace tabinv {

namespace {

AppendixTable make_table(std::vector<std::uint32_t> left, std::vector<std::uint32_t> right,
                         std::vector<std::uint64_t> left_counts,
                         std::vector<std::uint64_t> right_counts) {
    return AppendixTable{Partition(std::move(left)), Partition(std::move(right)),
                         std::move(left_counts), std::move(right_counts)};
}

// Row of the left table a right-hand entry r sits beside: the top of the
// right column aligns one row down, the tail aligns two rows down, and the
// left rows 0 and n stay unpaired.
std::optional<std::size_t> right_index_for_row(std::size_t row, std::uint32_t n) {
    if (row == 0 || row == n) return std::nullopt;
    if (row < n) return row - 1;
    return row - 2;
}

} // namespace

const std::vector<AppendixTable>& appendix_golden() {
    static const std::vector<AppendixTable> tables = {
        make_table({2, 2, 2}, {3, 2, 1},
                   {5, 16, 25, 24, 14, 5, 1},
                   {16, 24, 14, 5, 1}),
        make_table({3, 3, 3}, {4, 3, 2},
                   {42, 168, 330, 414, 357, 222, 103, 35, 8, 1},
                   {168, 366, 357, 222, 103, 35, 8, 1}),
        make_table({4, 4, 4}, {5, 4, 3},
                   {462, 2112, 4785, 7051, 7436, 5951, 3773, 1937, 803, 263, 65, 11, 1},
                   {2112, 5643, 7161, 5951, 3773, 1937, 803, 263, 65, 11, 1}),
        make_table({5, 5, 5}, {6, 5, 4},
                   {6006, 30030, 75075, 123552, 148512, 138801, 105495, 67158, 36297,
                    16667, 6448, 2065, 531, 104, 14, 1},
                   {30030, 91520, 137137, 137163, 105495, 67158, 36297, 16667, 6448,
                    2065, 531, 104, 14, 1}),
    };
    return tables;
}

std::string render_appendix_table(const AppendixTable& table) {
    std::uint32_t n = table.left.parts()[0];
    std::size_t rows = table.left_counts.size();

    auto width_of = [](std::uint64_t v) { return std::to_string(v).size(); };
    std::size_t label_w = 5; // "TOTAL" and every "m=K" label here
    for (std::size_t i = 0; i < rows; ++i)
        label_w = std::max(label_w, 2 + width_of(i));
    std::size_t left_w = ("(" + table.left.format() + ")").size();
    std::uint64_t left_total = 0, right_total = 0;
    for (std::uint64_t v : table.left_counts) {
        left_total += v;
        left_w = std::max(left_w, width_of(v));
    }
    std::size_t right_w = ("(" + table.right.format() + ")").size();
    for (std::uint64_t v : table.right_counts) {
        right_total += v;
        right_w = std::max(right_w, width_of(v));
    }
    left_w = std::max(left_w, width_of(left_total));
    right_w = std::max(right_w, width_of(right_total));

    std::ostringstream out;
    auto line = [&](const std::string& label, const std::string& left,
                    const std::string& right, const std::string& tag) {
        std::ostringstream row;
        row << label;
        for (std::size_t i = label.size(); i < label_w + 2; ++i) row << ' ';
        row << left;
        if (!right.empty() || !tag.empty()) {
            for (std::size_t i = left.size(); i < left_w + 2; ++i) row << ' ';
            row << right;
            if (!tag.empty()) {
                for (std::size_t i = right.size(); i < right_w + 2; ++i) row << ' ';
                row << tag;
            }
        }
        out << row.str() << '\n';
    };

    line("", "(" + table.left.format() + ")", "(" + table.right.format() + ")", "");
    for (std::size_t i = 0; i < rows; ++i) {
        auto r = right_index_for_row(i, n);
        if (r && *r < table.right_counts.size())
            line("m=" + std::to_string(i), std::to_string(table.left_counts[i]),
                 std::to_string(table.right_counts[*r]), "m=" + std::to_string(*r));
        else
            line("m=" + std::to_string(i), std::to_string(table.left_counts[i]), "", "");
    }
    line("TOTAL", std::to_string(left_total), std::to_string(right_total), "TOTAL");
    return out.str();
}

AppendixResult run_appendix(unsigned workers, std::uint64_t budget, const std::string& format) {
    if (format != "text" && format != "json" && format != "csv")
        fail(Status::invalid_argument, "format must be text, json or csv");

    AppendixResult result;
    std::vector<AppendixTable> computed;
    std::ostringstream diff;
    for (const auto& golden : appendix_golden()) {
        AppendixTable table = golden;
        table.left_counts = inversion_distribution(golden.left, workers, budget).counts;
        table.right_counts = inversion_distribution(golden.right, workers, budget).counts;

        auto compare = [&](const Partition& shape, const std::vector<std::uint64_t>& got,
                           const std::vector<std::uint64_t>& want) {
            if (got.size() != want.size()) {
                result.match = false;
                diff << shape.format() << ": " << got.size() << " rows, reference has "
                     << want.size() << "\n";
                return;
            }
            for (std::size_t i = 0; i < got.size(); ++i)
                if (got[i] != want[i]) {
                    result.match = false;
                    diff << shape.format() << " m=" << i << ": computed " << got[i]
                         << ", reference " << want[i] << "\n";
                }
        };
        compare(table.left, table.left_counts, golden.left_counts);
        compare(table.right, table.right_counts, golden.right_counts);
        computed.push_back(std::move(table));
    }
    result.diff = diff.str();

    if (format == "text") {
        std::ostringstream out;
        for (std::size_t t = 0; t < computed.size(); ++t) {
            if (t) out << '\n';
            out << render_appendix_table(computed[t]);
        }
        result.rendered = out.str();
    } else if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& table : computed) {
            nlohmann::ordered_json entry;
            entry["left"] = {{"shape", table.left.parts()},
                             {"counts", table.left_counts},
                             {"total", InversionDistribution{table.left, table.left_counts}
                                           .total()}};
            entry["right"] = {{"shape", table.right.parts()},
                              {"counts", table.right_counts},
                              {"total", InversionDistribution{table.right, table.right_counts}
                                            .total()}};
            j.push_back(std::move(entry));
        }
        result.rendered = j.dump() + "\n";
    } else {
        std::ostringstream out;
        out << "shape,i,count\n";
        for (const auto& table : computed) {
            for (std::size_t i = 0; i < table.left_counts.size(); ++i)
                out << '"' << table.left.format() << "\"," << i << ',' << table.left_counts[i]
                    << '\n';
            for (std::size_t i = 0; i < table.right_counts.size(); ++i)
                out << '"' << table.right.format() << "\"," << i << ',' << table.right_counts[i]
                    << '\n';
        }
        result.rendered = out.str();
    }
    return result;
}

} // namespace tabinv
