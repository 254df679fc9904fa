#include "gpb/tableau.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace gpb {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty())
            throw invalid_argument("tableau rows must be nonempty");
        if (r > 0 && rows_[r - 1].size() < rows_[r].size())
            throw invalid_argument("tableau rows must weakly decrease bottom-to-top");
    }
}

int Tableau::size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

Partition Tableau::shape() const {
    std::vector<int> lens;
    lens.reserve(rows_.size());
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
}

bool Tableau::is_semistandard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c + 1 < rows_[r].size(); ++c)
            if (rows_[r][c] > rows_[r][c + 1]) return false;
        if (r + 1 < rows_.size())
            for (std::size_t c = 0; c < rows_[r + 1].size(); ++c)
                if (rows_[r + 1][c] <= rows_[r][c]) return false;
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Word Tableau::reading_word() const {
    Word w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

Tableau Tableau::transposed() const {
    if (rows_.empty()) return Tableau{};
    std::vector<std::vector<int>> cols(rows_[0].size());
    for (const auto& row : rows_)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return Tableau(std::move(cols));
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ",";
        os << "[" << join_ints(rows_[r]) << "]";
    }
    os << "]";
    return os.str();
}

SkewTableau::SkewTableau(std::vector<int> offsets, std::vector<std::vector<int>> rows)
    : offsets_(std::move(offsets)), rows_(std::move(rows)) {
    if (offsets_.size() != rows_.size())
        throw invalid_argument("skew filling: offsets/rows length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (offsets_[r] < 0 || rows_[r].empty())
            throw invalid_argument("skew filling: bad row");
        if (r > 0) {
            if (offsets_[r - 1] < offsets_[r])
                throw invalid_argument("skew filling: inner shape is not a partition");
            int outer_below = offsets_[r - 1] + static_cast<int>(rows_[r - 1].size());
            int outer_here = offsets_[r] + static_cast<int>(rows_[r].size());
            if (outer_below < outer_here)
                throw invalid_argument("skew filling: outer shape is not a partition");
        }
        for (std::size_t c = 0; c + 1 < rows_[r].size(); ++c)
            if (rows_[r][c] > rows_[r][c + 1])
                throw invalid_argument("skew filling: row not weakly increasing");
    }
    // Column strictness across adjacent rows.
    for (std::size_t r = 0; r + 1 < rows_.size(); ++r) {
        int lo = offsets_[r + 1], hi = lo + static_cast<int>(rows_[r + 1].size());
        for (int c = lo; c < hi; ++c) {
            if (c >= offsets_[r] && c < offsets_[r] + static_cast<int>(rows_[r].size())) {
                if (rows_[r + 1][c - offsets_[r + 1]] <= rows_[r][c - offsets_[r]])
                    throw invalid_argument("skew filling: column not strictly increasing");
            }
        }
    }
}

Word SkewTableau::reading_word() const {
    Word w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

Tableau jdt_rectify(const SkewTableau& skew) {
    std::vector<int> inner = skew.offsets();
    std::vector<std::vector<int>> grid;  // grid[r][c] over full outer shape
    std::vector<int> outer;
    const int kEmpty = INT_MIN;
    for (std::size_t r = 0; r < skew.rows().size(); ++r) {
        std::vector<int> row(inner[r], kEmpty);
        row.insert(row.end(), skew.rows()[r].begin(), skew.rows()[r].end());
        outer.push_back(static_cast<int>(row.size()));
        grid.push_back(std::move(row));
    }
    int nrows = static_cast<int>(grid.size());

    auto filled = [&](int r, int c) {
        return r >= 0 && r < nrows && c >= inner[r] && c < outer[r];
    };

    while (true) {
        // Pick the highest inner corner.
        int r0 = -1;
        for (int r = nrows - 1; r >= 0; --r) {
            if (inner[r] > 0 && (r + 1 >= nrows || inner[r + 1] < inner[r])) {
                r0 = r;
                break;
            }
        }
        if (r0 < 0) break;
        int r = r0, c = inner[r0] - 1;
        inner[r0] -= 1;
        while (true) {
            bool above = filled(r + 1, c);
            bool right = filled(r, c + 1);
            if (!above && !right) {
                outer[r] = c;  // hole leaves through this outer corner
                break;
            }
            if (above && (!right || grid[r + 1][c] <= grid[r][c + 1])) {
                grid[r][c] = grid[r + 1][c];
                ++r;
            } else {
                grid[r][c] = grid[r][c + 1];
                ++c;
            }
        }
    }

    std::vector<std::vector<int>> rows;
    for (int r = 0; r < nrows; ++r) {
        if (outer[r] == 0) break;
        rows.emplace_back(grid[r].begin(), grid[r].begin() + outer[r]);
    }
    return Tableau(std::move(rows));
}

}  // namespace gpb
