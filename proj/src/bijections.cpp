#include "bijections.hpp"

#include <algorithm>
#include <optional>

#include "json.hpp"

#include "errors.hpp"

namespace tabinv {

namespace {

struct Board {
    Grid grid;
    const Partition& shape; // bounds for slides; 0 marks the hole

    bool in_shape(Pos p) const {
        return p.row >= 1 && p.row <= shape.rows() && p.col >= 1 && p.col <= shape.part(p.row);
    }
    std::uint32_t at(Pos p) const { return grid[p.row - 1][p.col - 1]; }
    void set(Pos p, std::uint32_t v) { grid[p.row - 1][p.col - 1] = v; }

    void flip_rows(std::uint32_t top, std::uint32_t bottom, std::uint32_t columns) {
        for (std::uint32_t c = 1; c <= columns; ++c)
            std::swap(grid[top - 1][c - 1], grid[bottom - 1][c - 1]);
    }
};

// One back-fill move: the smaller of the hole's right/below neighbours (the
// `locked` box does not participate) slides into the hole. Returns false
// when neither neighbour exists and the hole has come to rest.
bool slide_once(Board& b, Pos& hole, std::optional<Pos> locked, std::vector<TraceSlide>& slides) {
    Pos right{hole.row, hole.col + 1};
    Pos below{hole.row + 1, hole.col};
    bool right_ok = b.in_shape(right) && !(locked && *locked == right);
    bool below_ok = b.in_shape(below) && !(locked && *locked == below);
    if (!right_ok && !below_ok) return false;
    Pos source;
    if (right_ok && below_ok)
        source = b.at(right) < b.at(below) ? right : below;
    else
        source = right_ok ? right : below;
    slides.push_back({b.at(source), source, hole});
    b.set(hole, b.at(source));
    b.set(source, 0);
    hole = source;
    return true;
}

// First row whose length is exactly `len`; because parts are non-increasing
// this is the only row that can legally grow to len+1.
std::optional<std::uint32_t> growable_row_of_length(const Partition& p, std::uint32_t len) {
    for (std::uint32_t r = 1; r <= p.rows(); ++r)
        if (p.part(r) == len) return r;
    return std::nullopt;
}

} // namespace

Phi1Result phi1_general(const InvertedTableau& t) {
    auto pairs = inversions(t);
    if (pairs.size() != 1)
        fail(Status::wrong_inversion_count,
             "expected exactly one inversion, found " + std::to_string(pairs.size()) + " in " +
                 t.tableau().format());
    const InversionPair inv = pairs[0];
    const Partition& source = t.shape();
    const std::uint32_t k = inv.column;

    std::uint32_t row_small = 0, row_large = 0;
    for (std::uint32_t r = 1; r <= source.rows(); ++r) {
        if (source.part(r) < k) break;
        std::uint32_t v = t.rows()[r - 1][k - 1];
        if (v == inv.small) row_small = r;
        if (v == inv.large) row_large = r;
    }
    if (row_small != row_large + 1)
        fail(Status::internal_error,
             "single inversion without the larger entry directly above the smaller in " +
                 t.tableau().format());

    Board board{t.rows(), source};
    BumpTrace trace;
    trace.inversion = inv;
    trace.flip_top_row = row_large;
    trace.flip_bottom_row = row_small;
    trace.flip_columns = k;

    // undo the row swap that created the inversion; the larger entry ends on
    // the lower row and becomes the first tracked entry
    board.flip_rows(row_large, row_small, k);

    Pos hole{row_small, k};
    board.set(hole, 0);
    std::uint32_t tracked = inv.large;
    Pos tracked_from = hole;
    bool settled = false;
    std::uint32_t j = k;
    Pos new_box;

    while (true) {
        // a tracked entry leaves the shape as soon as a new corner accepts it
        bool escaped = false;
        if (auto r = growable_row_of_length(source, j)) {
            bool fits = true;
            if (*r > 1 && board.at({*r - 1, j + 1}) >= tracked) fits = false;
            Pos left{*r, j};
            if (fits && !(hole == left) && board.at(left) >= tracked) fits = false;
            if (fits) {
                new_box = {*r, j + 1};
                board.grid[*r - 1].push_back(tracked);
                BumpStep step{tracked, tracked_from, new_box, {}};
                if (!settled)
                    while (slide_once(board, hole, std::nullopt, step.slides)) {}
                trace.steps.push_back(std::move(step));
                escaped = true;
            }
        }
        if (escaped) break;

        // bump into the next column: displace the smallest larger entry
        Pos target;
        std::uint32_t next_tracked = 0;
        for (std::uint32_t r = 1; r <= source.rows(); ++r) {
            if (source.part(r) < j + 1) break;
            std::uint32_t v = board.at({r, j + 1});
            if (v > tracked && (next_tracked == 0 || v < next_tracked)) {
                next_tracked = v;
                target = {r, j + 1};
            }
        }
        if (next_tracked == 0)
            fail(Status::internal_error,
                 "bump has no landing entry and no legal new corner at column " +
                     std::to_string(j + 1) + " for " + t.tableau().format());

        board.set(target, tracked);
        BumpStep step{tracked, tracked_from, target, {}};
        tracked_from = target;
        tracked = next_tracked;
        if (!settled) {
            while (hole.col == j && slide_once(board, hole, target, step.slides)) {}
            if (hole.col == j) settled = true;
        }
        trace.steps.push_back(std::move(step));
        ++j;
    }

    trace.new_box = new_box;
    trace.vacated = hole;
    if (hole.col != source.part(hole.row) ||
        (hole.row < source.rows() && source.part(hole.row + 1) >= hole.col))
        fail(Status::internal_error, "hole came to rest off a removable corner");
    if (new_box.row >= hole.row)
        fail(Status::internal_error, "new corner did not land above the vacated one");
    trace.move = StairStepMove{hole.row, new_box.row};

    Grid result_rows = board.grid;
    auto& vacated_row = result_rows[hole.row - 1];
    if (vacated_row.back() != 0)
        fail(Status::internal_error, "vacated corner is not at the end of its row");
    vacated_row.pop_back();
    if (vacated_row.empty()) result_rows.pop_back();

    Tableau image(std::move(result_rows));
    if (image.shape() != apply_move(source, trace.move) || !is_standard(image))
        fail(Status::internal_error, "bump run did not produce a standard image");
    return {trace.move, std::move(image), std::move(trace)};
}

Phi1Result phi1_rect(const InvertedTableau& t) {
    if (!t.shape().is_rectangular())
        fail(Status::unsupported_shape,
             "this direction expects a rectangular shape, got " + t.shape().format());
    return phi1_general(t);
}

Phi2Result phi2_general(const Tableau& T, const Partition& source) {
    if (!is_standard(T))
        fail(Status::input_not_standard, "expected a standard tableau, got " + T.format());
    StairStepMove move = move_between(source, T.shape());

    Pos new_box{move.target_row, source.part(move.target_row) + 1};
    Pos vacated{move.source_row, source.part(move.source_row)};

    Board board{T.rows(), source};
    if (board.grid.size() < source.rows()) board.grid.emplace_back();

    std::uint32_t tracked = board.grid[new_box.row - 1].back();
    board.grid[new_box.row - 1].pop_back();
    std::uint32_t assoc_col = new_box.col;
    board.grid[vacated.row - 1].push_back(0);
    Pos hole = vacated;

    // steps are assembled newest-first in the forward orientation and
    // reversed at the end; slides are collected globally because an undone
    // bump can interleave with the slides of the phase before it
    std::vector<BumpStep> records;
    records.push_back({tracked, {}, new_box, {}});
    std::vector<TraceSlide> slides_undone;

    BumpTrace trace;
    while (true) {
        if (hole.col + 1 < assoc_col) {
            // the hole has fallen behind the tracked entry (it crossed a
            // column, or it was already at rest): undo one bump by moving
            // the tracked entry onto the largest smaller entry to its left
            std::uint32_t col = assoc_col - 1;
            Pos target;
            std::uint32_t next_tracked = 0;
            for (std::uint32_t r = 1; r <= source.rows(); ++r) {
                if (source.part(r) < col) break;
                std::uint32_t v = board.at({r, col});
                if (v != 0 && v < tracked && v > next_tracked) {
                    next_tracked = v;
                    target = {r, col};
                }
            }
            if (next_tracked == 0)
                fail(Status::internal_error,
                     "no smaller entry to hand the tracked value back to in column " +
                         std::to_string(col));
            board.set(target, tracked);
            records.back().from = target;
            records.push_back({next_tracked, {}, target, {}});
            tracked = next_tracked;
            assoc_col = col;
            continue;
        }

        std::uint32_t above = hole.row > 1 ? board.at({hole.row - 1, hole.col}) : 0;
        std::uint32_t left = hole.col > 1 ? board.at({hole.row, hole.col - 1}) : 0;
        if (tracked > above && tracked > left) {
            // the tracked entry itself drops in; swapping the two rows
            // through it up to this column creates the single inversion
            if (hole.row == 1)
                fail(Status::internal_error, "tracked entry landed on the top row of " +
                                                 T.format());
            board.set(hole, tracked);
            records.back().from = hole;
            std::uint32_t partner = board.at({hole.row - 1, hole.col});
            board.flip_rows(hole.row - 1, hole.row, hole.col);
            trace.inversion = InversionPair{partner, tracked, hole.col};
            trace.flip_top_row = hole.row - 1;
            trace.flip_bottom_row = hole.row;
            trace.flip_columns = hole.col;
            break;
        }
        Pos from = above > left ? Pos{hole.row - 1, hole.col} : Pos{hole.row, hole.col - 1};
        std::uint32_t value = std::max(above, left);
        // recorded in the forward sense: the entry slid out of the hole's box
        slides_undone.push_back({value, hole, from});
        board.set(hole, value);
        board.set(from, 0);
        hole = from;
    }

    std::reverse(records.begin(), records.end());
    // regroup the slides the way the forward run batches them: each phase
    // keeps filling within its column and ends with the slide that carries
    // the hole one column right; everything after the last crossing belongs
    // to the final drain
    std::vector<TraceSlide> forward_slides(slides_undone.rbegin(), slides_undone.rend());
    std::size_t idx = 0;
    for (std::size_t s = 0; s + 1 < records.size(); ++s) {
        std::uint32_t phase_col = records[s].to.col - 1;
        while (idx < forward_slides.size() && forward_slides[idx].to.col == phase_col) {
            bool crossed = forward_slides[idx].from.col == phase_col + 1;
            records[s].slides.push_back(forward_slides[idx++]);
            if (crossed) break;
        }
    }
    for (; idx < forward_slides.size(); ++idx) records.back().slides.push_back(forward_slides[idx]);
    trace.steps = std::move(records);
    trace.new_box = new_box;
    trace.vacated = vacated;
    trace.move = move;

    InvertedTableau image{Tableau(std::move(board.grid))};
    auto pairs = inversions(image);
    if (pairs.size() != 1 || !(pairs[0] == trace.inversion))
        fail(Status::internal_error,
             "reverse bump did not leave exactly the intended inversion in " +
                 image.tableau().format());
    return {std::move(image), std::move(trace)};
}

Phi2Result phi2_rect(const Tableau& T) {
    const auto& parts = T.shape().parts();
    std::uint32_t n = parts[0] >= 2 ? parts[0] - 1 : 0;
    std::uint64_t boxes = T.shape().box_count();
    if (n == 0 || boxes % n != 0)
        fail(Status::unsupported_shape,
             "shape " + T.shape().format() + " is not a rectangle's stair step");
    std::uint32_t m = static_cast<std::uint32_t>(boxes / n);
    if (m < 2)
        fail(Status::unsupported_shape,
             "shape " + T.shape().format() + " is not a rectangle's stair step");
    Partition rect(std::vector<std::uint32_t>(m, n));
    auto moves = stair_step_shapes(rect);
    if (moves.size() != 1 || moves[0].second != T.shape())
        fail(Status::unsupported_shape,
             "shape " + T.shape().format() + " is not a rectangle's stair step");
    return phi2_general(T, rect);
}

Tableau replay_backward(const Tableau& image, const BumpTrace& trace, const Partition& source) {
    if (trace.steps.empty())
        fail(Status::invalid_argument, "empty trace");
    Board board{image.rows(), source};

    auto& escape_row = board.grid[trace.new_box.row - 1];
    if (escape_row.size() != trace.new_box.col || escape_row.back() != trace.steps.back().value)
        fail(Status::invalid_argument, "trace does not match the image at the new corner");
    escape_row.pop_back();
    if (board.grid.size() < source.rows()) board.grid.emplace_back();
    board.grid[trace.vacated.row - 1].push_back(0);

    std::uint32_t in_hand = trace.steps.back().value;
    for (std::size_t i = trace.steps.size(); i-- > 0;) {
        const BumpStep& step = trace.steps[i];
        for (std::size_t s = step.slides.size(); s-- > 0;) {
            const TraceSlide& slide = step.slides[s];
            if (board.at(slide.to) != slide.value || board.at(slide.from) != 0)
                fail(Status::invalid_argument, "trace slide does not match the board");
            board.set(slide.from, slide.value);
            board.set(slide.to, 0);
        }
        if (i + 1 < trace.steps.size()) {
            if (board.at(step.to) != step.value)
                fail(Status::invalid_argument, "trace bump does not match the board");
            board.set(step.to, in_hand);
            in_hand = step.value;
        }
    }

    if (board.at(trace.steps.front().from) != 0)
        fail(Status::invalid_argument, "trace origin is not empty after unwinding");
    board.set(trace.steps.front().from, in_hand);
    board.flip_rows(trace.flip_top_row, trace.flip_bottom_row, trace.flip_columns);
    return Tableau(std::move(board.grid));
}

std::string BumpTrace::to_json() const {
    nlohmann::ordered_json j;
    j["inversion"] = {{"small", inversion.small},
                      {"large", inversion.large},
                      {"column", inversion.column}};
    j["row_flip"] = {{"top", flip_top_row}, {"bottom", flip_bottom_row},
                     {"columns", flip_columns}};
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& step : steps) {
        nlohmann::ordered_json js;
        js["value"] = step.value;
        js["from"] = {step.from.row, step.from.col};
        js["to"] = {step.to.row, step.to.col};
        js["slides"] = nlohmann::ordered_json::array();
        for (const auto& s : step.slides)
            js["slides"].push_back({{"value", s.value},
                                    {"from", {s.from.row, s.from.col}},
                                    {"to", {s.to.row, s.to.col}}});
        j["steps"].push_back(std::move(js));
    }
    j["new_box"] = {new_box.row, new_box.col};
    j["vacated"] = {vacated.row, vacated.col};
    j["move"] = {{"source_row", move.source_row}, {"target_row", move.target_row}};
    return j.dump();
}

} // namespace tabinv
