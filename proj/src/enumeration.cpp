#include "enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "errors.hpp"

namespace tabinv {

std::uint64_t InversionDistribution::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::string InversionDistribution::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < counts.size(); ++i)
        out << "m=" << i << ' ' << counts[i] << '\n';
    out << "TOTAL " << total() << '\n';
    return out.str();
}

std::string InversionDistribution::to_json() const {
    nlohmann::ordered_json j;
    j["shape"] = shape.parts();
    j["max_inversions"] = max_inversions();
    j["counts"] = counts;
    j["total"] = total();
    return j.dump() + "\n";
}

std::string InversionDistribution::to_csv() const {
    std::ostringstream out;
    out << "i,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i) out << i << ',' << counts[i] << '\n';
    return out.str();
}

namespace {

// Lexicographically next k-combination of {0..n-1}; false once exhausted.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
    std::uint32_t k = static_cast<std::uint32_t>(c.size());
    for (std::uint32_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::uint32_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// rank-th k-combination of {0..n-1} in lexicographic order.
std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k,
                                              std::uint64_t rank) {
    std::vector<std::uint32_t> c(k);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t v = next;; ++v) {
            std::uint64_t block = binomial_u64_saturated(n - v - 1, k - i - 1);
            if (rank < block) {
                c[i] = v;
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return c;
}

struct RowEnumerator {
    const std::vector<std::uint32_t>& parts;
    Grid grid;
    // avail[r] holds the values still free when row r is being chosen
    std::vector<std::vector<std::uint32_t>> avail;
    const std::function<void(const Grid&)>& fn;

    RowEnumerator(const Partition& p, const std::function<void(const Grid&)>& callback)
        : parts(p.parts()), fn(callback) {
        grid.resize(parts.size());
        avail.resize(parts.size() + 1);
        for (std::size_t r = 0; r < parts.size(); ++r) grid[r].resize(parts[r]);
        avail[0].resize(p.box_count());
        std::iota(avail[0].begin(), avail[0].end(), 1);
    }

    void fill_row(std::size_t row, const std::vector<std::uint32_t>& combo) {
        const auto& pool = avail[row];
        auto& rest = avail[row + 1];
        rest.clear();
        std::size_t pick = 0;
        for (std::uint32_t i = 0; i < pool.size(); ++i) {
            if (pick < combo.size() && combo[pick] == i) {
                grid[row][pick] = pool[i];
                ++pick;
            } else {
                rest.push_back(pool[i]);
            }
        }
    }

    void run(std::size_t row) {
        if (row == parts.size()) {
            fn(grid);
            return;
        }
        std::uint32_t pool_size = static_cast<std::uint32_t>(avail[row].size());
        std::uint32_t k = parts[row];
        std::vector<std::uint32_t> combo(k);
        std::iota(combo.begin(), combo.end(), 0);
        do {
            fill_row(row, combo);
            run(row + 1);
        } while (next_combination(combo, pool_size));
    }

    void run_first_row_range(const WorkRange& range) {
        if (range.empty()) return;
        std::uint32_t n = static_cast<std::uint32_t>(avail[0].size());
        std::vector<std::uint32_t> combo = unrank_combination(n, parts[0], range.begin);
        for (std::uint64_t rank = range.begin; rank < range.end; ++rank) {
            fill_row(0, combo);
            run(1);
            if (!next_combination(combo, n)) break;
        }
    }
};

void check_budget(const Partition& p, std::uint64_t budget) {
    BigInt total = total_inverted_count(p);
    if (total > budget)
        fail(Status::budget_exceeded, "shape " + p.format() + " has " + to_decimal(total) +
                                          " fillings, over the budget of " +
                                          std::to_string(budget));
}

} // namespace

std::vector<WorkRange> partition_work(const Partition& p, unsigned workers) {
    if (workers < 1) fail(Status::invalid_argument, "need at least one worker");
    std::uint64_t first_row_choices =
        binomial_u64_saturated(static_cast<unsigned>(p.box_count()), p.parts()[0]);
    std::uint64_t chunk = first_row_choices / workers;
    std::uint64_t remainder = first_row_choices % workers;
    std::vector<WorkRange> ranges(workers);
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        ranges[w].begin = begin;
        begin += chunk + (w < remainder ? 1 : 0);
        ranges[w].end = begin;
    }
    return ranges;
}

void for_each_inverted(const Partition& p, std::uint64_t budget,
                       const std::function<void(const Grid&)>& fn) {
    check_budget(p, budget);
    RowEnumerator e(p, fn);
    e.run(0);
}

void for_each_inverted_in_range(const Partition& p, const WorkRange& range,
                                const std::function<void(const Grid&)>& fn) {
    RowEnumerator e(p, fn);
    e.run_first_row_range(range);
}

std::vector<InvertedTableau> enumerate_inverted(const Partition& p, std::uint64_t budget) {
    std::vector<InvertedTableau> result;
    for_each_inverted(p, budget, [&](const Grid& grid) {
        result.emplace_back(Tableau(grid));
    });
    return result;
}

InversionDistribution inversion_distribution(const Partition& p, unsigned workers,
                                             std::uint64_t budget) {
    check_budget(p, budget);
    std::uint64_t m = max_inversions(p);
    InversionDistribution dist{p, std::vector<std::uint64_t>(m + 1, 0)};

    auto ranges = partition_work(p, workers);
    auto tally = [&](std::vector<std::uint64_t>& counts, const Grid& grid) {
        std::uint64_t k = inversion_count(grid, p);
        if (k > m)
            fail(Status::internal_error,
                 "filling of " + p.format() + " exceeded the inversion bound");
        ++counts[k];
    };
    if (workers == 1) {
        for_each_inverted_in_range(p, ranges[0],
                                   [&](const Grid& grid) { tally(dist.counts, grid); });
    } else {
        std::vector<std::vector<std::uint64_t>> local(
            workers, std::vector<std::uint64_t>(m + 1, 0));
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    for_each_inverted_in_range(
                        p, ranges[w], [&](const Grid& grid) { tally(local[w], grid); });
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& error : errors)
            if (error) std::rethrow_exception(error);
        for (const auto& counts : local)
            for (std::size_t i = 0; i <= m; ++i) dist.counts[i] += counts[i];
    }

    if (BigInt(dist.total()) != total_inverted_count(p))
        fail(Status::internal_error, "enumeration missed fillings for " + p.format());
    return dist;
}

std::vector<InvertedTableau> fiber(const Tableau& T, std::uint64_t budget) {
    if (!is_standard(T))
        fail(Status::input_not_standard,
             "fibers are taken over standard tableaux, got " + T.format());

    auto heights = column_heights(T.shape());
    std::vector<std::vector<std::uint32_t>> columns(heights.size());
    for (std::uint32_t c = 0; c < heights.size(); ++c)
        for (std::uint32_t r = 0; r < heights[c]; ++r)
            columns[c].push_back(T.rows()[r][c]);

    BigInt arrangements = 1;
    for (std::uint32_t h : heights) arrangements *= factorial(h);
    if (arrangements > budget)
        fail(Status::budget_exceeded, "column rearrangements of " + T.format() +
                                          " exceed the budget of " + std::to_string(budget));

    // odometer over per-column permutations, rightmost column fastest
    std::vector<std::vector<std::uint32_t>> perm = columns;
    std::vector<InvertedTableau> result;
    Grid grid(T.rows().size());
    for (std::size_t r = 0; r < grid.size(); ++r) grid[r].resize(T.shape().parts()[r]);
    while (true) {
        for (std::uint32_t c = 0; c < perm.size(); ++c)
            for (std::uint32_t r = 0; r < heights[c]; ++r) grid[r][c] = perm[c][r];
        bool row_standard = true;
        for (const auto& row : grid) {
            for (std::size_t i = 1; i < row.size() && row_standard; ++i)
                row_standard = row[i - 1] < row[i];
            if (!row_standard) break;
        }
        if (row_standard) result.emplace_back(Tableau(grid));

        std::size_t c = perm.size();
        while (c-- > 0) {
            if (std::next_permutation(perm[c].begin(), perm[c].end())) break;
            if (c == 0) return result;
        }
    }
}

std::vector<std::uint64_t> betti_numbers(const Partition& p, unsigned workers,
                                         std::uint64_t budget) {
    auto dist = inversion_distribution(p, workers, budget);
    return {dist.counts.rbegin(), dist.counts.rend()};
}

std::string betti_to_json(const Partition& p, const std::vector<std::uint64_t>& betti) {
    nlohmann::ordered_json j;
    j["shape"] = p.parts();
    j["dimension"] = betti.size() - 1;
    j["betti"] = betti;
    return j.dump() + "\n";
}

} // namespace tabinv
