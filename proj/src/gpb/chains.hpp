#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "gpb/catabolism.hpp"
#include "gpb/partition.hpp"

namespace gpb {

// (pass, index), ordered lexicographically.  For a word z of length n, index
// i refers to position n - i + 1 of z.
struct PairEntry {
    int pass = 0;
    int index = 0;
    auto operator<=>(const PairEntry&) const = default;
};

// Partition-shaped filling with rows bottom-to-top whose rows and columns
// strictly increase in the lexicographic order on entries.
class PairFilling {
public:
    PairFilling() = default;
    explicit PairFilling(std::vector<std::vector<PairEntry>> rows);

    const std::vector<std::vector<PairEntry>>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int size() const;
    Partition shape() const;

    bool operator==(const PairFilling& o) const { return rows_ == o.rows_; }

    // Chain-state conditions against a word z: each index 1..|z| appears
    // exactly once, and an entry (k,i) in row r satisfies k + z_{n-i+1} = r.
    // Throws naming the violated condition.
    void validate_against(const Word& z) const;

private:
    std::vector<std::vector<PairEntry>> rows_;
};

// Inserts t into row `row` (1-based, >= 2): replaces the leftmost entry that
// is >= t and whose below-neighbour is <= t, then shifts the displaced
// entries rightward until one pops out or the row grows by one box.  The
// popped entry, when present, is >= t.
std::pair<PairFilling, std::optional<PairEntry>>
modified_row_insert(const PairFilling& F, int row, PairEntry t);

// Runs catabolism insertion on each subword of z given by `blocks` (1-based
// positions partitioning 1..n), recording (pass, n-position+1) pairs, then
// sums the fillings row-wise and sorts rows.  Every subword must be a
// cocharge word.
PairFilling build_seed_filling(const Word& z,
                               const std::vector<std::vector<int>>& blocks);

// One box-adding step of the chains run, for traces.  The rows carry the
// state after the step; between steps the column order may transiently fail
// between two relocated unread entries, so this is not a PairFilling.
struct ChainsStep {
    PairEntry read;    // (k, i) read at this step
    int position = 0;  // 1-based position in z
    int row = 0;       // row receiving the new box
    bool relocated = false;
    Partition shape;
    std::vector<std::vector<PairEntry>> rows;
};

struct ChainsResult {
    Partition ctype;
    PairFilling filling;
    std::vector<Partition> shape_trace;  // seed shape, then after each box step
};

// Catabolism insertion on z carrying the seed filling: when the pending pair
// for the read index sits d rows too high, its column segment is deleted,
// reinserted d rows lower via modified row insertion, and the vacated column
// refilled with the popped entries shifted back up.  The shape trace is a
// dominance-increasing chain from shape(seed) to ctype(z).
//
// The bookkeeping is exhaustively verified over every shuffle of two
// cocharge words with total length <= 8 (and all three-block shuffles with
// total <= 6).  From length 9 on there are shuffles where a letter of the
// full word inserts on a later pass than its block run predicts, the
// filling's deferred pair falls due without a box, and no locally decidable
// insertion choice restores the invariants; the run then stops with a
// check_failure instead of fabricating a trace.
ChainsResult chains_run(const Word& z, const PairFilling& seed,
                        bool check_invariants = true,
                        std::vector<ChainsStep>* trace = nullptr);

}  // namespace gpb
