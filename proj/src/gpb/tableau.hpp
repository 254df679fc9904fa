#pragma once

#include <vector>

#include "gpb/common.hpp"
#include "gpb/partition.hpp"

namespace gpb {

// Filling of a partition shape with integers.  Rows are stored bottom-to-top
// (French convention): rows()[0] is the first (longest) row.  Shape is always
// a partition; semistandardness is a queried property, not an invariant, so
// the same type carries reading-word fillings that are not tableaux.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int size() const;  // number of boxes
    Partition shape() const;

    bool is_semistandard() const;
    // Semistandard with entries exactly 1..n.
    bool is_standard() const;

    // Concatenation of the row words from the top row down to the bottom row.
    Word reading_word() const;

    // Entry at (row r, column c) moves to (row c, column r).
    Tableau transposed() const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

    std::string to_string() const;  // "[[1,3,4],[2,5],[6]]" bottom-to-top

private:
    std::vector<std::vector<int>> rows_;
};

// Skew semistandard filling: row r (bottom-to-top) starts at column
// offset[r]+1.  Offsets form a partition contained in the outer shape.
class SkewTableau {
public:
    SkewTableau(std::vector<int> offsets, std::vector<std::vector<int>> rows);

    const std::vector<int>& offsets() const { return offsets_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    Word reading_word() const;  // top row first, rows left to right

private:
    std::vector<int> offsets_;
    std::vector<std::vector<int>> rows_;
};

// Inward jeu-de-taquin slides until the shape is straight.  Agrees with
// rectification by row insertion of the reading word.
Tableau jdt_rectify(const SkewTableau& skew);

}  // namespace gpb
