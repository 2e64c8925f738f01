#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partition.hpp"
#include "tableau.hpp"

namespace tabinv {

struct Pos {
    std::uint32_t row = 0; // 1-based
    std::uint32_t col = 0;

    bool operator==(const Pos& o) const { return row == o.row && col == o.col; }
};

/// One back-fill slide: `value` moved out of `from` into the hole at `to`.
struct TraceSlide {
    std::uint32_t value = 0;
    Pos from;
    Pos to;
};

/// One bump: a tracked entry placed into `to` (displacing the next tracked
/// entry, or landing in the box added outside the source shape), followed by
/// the back-fill slides that ran before the next bump.
struct BumpStep {
    std::uint32_t value = 0;
    Pos from;
    Pos to;
    std::vector<TraceSlide> slides;
};

/// Complete record of one run of the single-inversion correspondence, always
/// stored in the forward orientation (1-inverted tableau -> standard
/// tableau), whichever direction produced it. Tracked values strictly
/// increase across steps, and replaying the record backward restores the
/// 1-inverted tableau exactly.
struct BumpTrace {
    InversionPair inversion;      // removed going forward, created coming back
    std::uint32_t flip_top_row = 0;    // rows swapped on columns 1..flip_columns
    std::uint32_t flip_bottom_row = 0;
    std::uint32_t flip_columns = 0;
    std::vector<BumpStep> steps;
    Pos new_box; // box outside the source shape that received the last value
    Pos vacated; // corner of the source shape left empty
    StairStepMove move;

    std::string to_json() const;
};

struct Phi1Result {
    StairStepMove move;
    Tableau image; // standard, of the moved shape
    BumpTrace trace;
};

struct Phi2Result {
    InvertedTableau image; // exactly one inversion, of the source shape
    BumpTrace trace;
};

/// Sends a tableau with exactly one inversion to a standard tableau whose
/// shape is the source shape with one corner relocated upward.
///
/// The inversion pair (a,b) sits with b directly above a in column k. First
/// the two rows are swapped on columns 1..k, which removes the inversion;
/// then b bumps rightward column by column, each time displacing the
/// smallest larger entry, while the vacated hole back-fills with the smaller
/// of its right/below neighbours. The run ends the moment a tracked entry
/// fits at the end of a row outside the source shape; the hole then sinks to
/// a removable corner, which is dropped.
Phi1Result phi1_general(const InvertedTableau& t);

/// phi1_general restricted to rectangles, where the image shape is forced:
/// an m x n rectangle always maps onto (n+1, n, ..., n, n-1).
Phi1Result phi1_rect(const InvertedTableau& t);

/// Exact inverse of phi1_general: walks the bump chain backwards from the
/// entry in the box of T's shape that lies outside `source`, filling the
/// vacated corner. Each fill takes the largest of the tracked entry, the
/// entry above the hole, and the entry to its left; when the tracked entry
/// itself drops in, the two rows through it are swapped up to that column,
/// creating the single inversion.
Phi2Result phi2_general(const Tableau& T, const Partition& source);

/// phi2_general with the source rectangle inferred from T's stair-step shape.
Phi2Result phi2_rect(const Tableau& T);

/// Reconstructs the 1-inverted tableau from a forward image plus its trace by
/// undoing every slide and bump in reverse order. Used to check traces
/// step-by-step rather than only end-to-end.
Tableau replay_backward(const Tableau& image, const BumpTrace& trace, const Partition& source);

} // namespace tabinv
