#include "gpb/chains.hpp"

#include <algorithm>
#include <set>

namespace gpb {

PairFilling::PairFilling(std::vector<std::vector<PairEntry>> rows)
    : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty())
            throw invalid_argument("pair filling: empty row");
        if (r > 0 && rows_[r - 1].size() < rows_[r].size())
            throw invalid_argument("pair filling: shape is not a partition");
        for (std::size_t c = 0; c + 1 < rows_[r].size(); ++c)
            if (!(rows_[r][c] < rows_[r][c + 1]))
                throw invalid_argument("pair filling: row not increasing");
        if (r > 0)
            for (std::size_t c = 0; c < rows_[r].size(); ++c)
                if (!(rows_[r - 1][c] < rows_[r][c]))
                    throw invalid_argument("pair filling: column not increasing");
    }
}

int PairFilling::size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
}

Partition PairFilling::shape() const {
    std::vector<int> lens;
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lens));
}

void PairFilling::validate_against(const Word& z) const {
    int n = static_cast<int>(z.size());
    if (size() != n)
        throw invalid_argument("pair filling: size differs from word length");
    std::vector<char> seen(n + 1, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const PairEntry& e : rows_[r]) {
            if (e.index < 1 || e.index > n || seen[e.index])
                throw invalid_argument(
                    "pair filling: condition (1) violated, indices must cover 1..n once");
            seen[e.index] = 1;
            if (e.pass < 1 || e.pass + z[n - e.index] != static_cast<int>(r) + 1)
                throw invalid_argument(
                    "pair filling: condition (4) violated, pass + letter != row");
        }
    }
}

namespace {

using Cell = std::optional<PairEntry>;
using Grid = std::vector<std::vector<Cell>>;

// Insertion into grid row `row0` (0-based, >= 1).  Vacated cells keep their
// physical position and never receive entries; the displaced entries shift
// right along the occupied cells.  Below-neighbour comparisons pair occupied
// cells by occupied index, which is the pairing the end-of-step compaction
// realizes, so the column condition is checked against the geometry the
// filling will actually have.  The entry displaced past the last occupied
// cell opens a box at the physical row end when the row is strictly shorter
// than the one below and the paired entry under the new box is smaller;
// otherwise it pops out.  An entry exceeding the whole row goes straight to
// that end box on the same terms.
std::optional<PairEntry> insert_into_row(Grid& grid, int row0, PairEntry t) {
    auto& row = grid[row0];
    auto& below = grid[row0 - 1];
    std::vector<int> occ, bocc;  // physical columns of occupied cells
    for (int c = 0; c < static_cast<int>(row.size()); ++c)
        if (row[c]) occ.push_back(c);
    for (int c = 0; c < static_cast<int>(below.size()); ++c)
        if (below[c]) bocc.push_back(c);
    auto below_at = [&](int k) -> const PairEntry& {
        if (k >= static_cast<int>(bocc.size()))
            throw internal_error("modified insertion: missing below-neighbour");
        return *below[bocc[k]];
    };
    auto ends_at_row_end = [&](PairEntry e) -> std::optional<PairEntry> {
        if (row.size() < below.size() &&
            !(e < below_at(static_cast<int>(occ.size())))) {
            row.push_back(e);
            return std::nullopt;
        }
        return e;
    };
    int p = -1;  // occupied index where t lands
    for (int k = 0; k < static_cast<int>(occ.size()); ++k)
        if (!(*row[occ[k]] < t)) {
            p = k;
            break;
        }
    if (p < 0) return ends_at_row_end(t);
    if (t < below_at(p)) return t;
    PairEntry carry = *row[occ[p]];
    row[occ[p]] = t;
    for (int k = p + 1; k < static_cast<int>(occ.size()); ++k) {
        if (carry < below_at(k)) return carry;
        std::swap(carry, *row[occ[k]]);
    }
    return ends_at_row_end(carry);
}

Grid to_grid(const PairFilling& F) {
    Grid g;
    for (const auto& row : F.rows()) {
        std::vector<Cell> gr;
        for (const PairEntry& e : row) gr.emplace_back(e);
        g.push_back(std::move(gr));
    }
    return g;
}

PairFilling from_grid(const Grid& g) {
    std::vector<std::vector<PairEntry>> rows;
    for (const auto& row : g) {
        std::vector<PairEntry> r;
        for (const Cell& c : row) {
            if (!c) throw internal_error("grid still has gaps");
            r.push_back(*c);
        }
        if (!r.empty()) rows.push_back(std::move(r));
    }
    return PairFilling(std::move(rows));
}

bool partition_can_grow(const std::vector<int>& nu, int r) {
    if (r == 1) return true;
    if (static_cast<int>(nu.size()) < r - 1) return false;
    int below = nu[r - 2];
    int here = static_cast<int>(nu.size()) >= r ? nu[r - 1] : 0;
    return below > here;
}

}  // namespace

std::pair<PairFilling, std::optional<PairEntry>>
modified_row_insert(const PairFilling& F, int row, PairEntry t) {
    if (row < 2 || row > F.num_rows())
        throw invalid_argument("modified_row_insert: row absent or below 2");
    Grid g = to_grid(F);
    auto popped = insert_into_row(g, row - 1, t);
    return {from_grid(g), popped};
}

PairFilling build_seed_filling(const Word& z,
                               const std::vector<std::vector<int>>& blocks) {
    int n = static_cast<int>(z.size());
    std::vector<char> seen(n + 1, 0);
    for (const auto& b : blocks)
        for (int pos : b) {
            if (pos < 1 || pos > n || seen[pos])
                throw invalid_argument("build_seed_filling: blocks must partition 1..n");
            seen[pos] = 1;
        }
    for (int pos = 1; pos <= n; ++pos)
        if (!seen[pos])
            throw invalid_argument("build_seed_filling: blocks must partition 1..n");

    std::vector<std::vector<PairEntry>> sum_rows;
    for (const auto& block : blocks) {
        std::vector<int> positions = block;
        std::sort(positions.begin(), positions.end());
        Word sub;
        for (int pos : positions) sub.push_back(z[pos - 1]);
        if (!is_cocharge_word(sub))
            throw invalid_argument("build_seed_filling: block subword is not a cocharge word");
        BlasiakResult res = blasiak_ctype(sub);
        for (int r = 0; r < res.recording.num_rows(); ++r) {
            if (static_cast<int>(sum_rows.size()) <= r) sum_rows.push_back({});
            for (int local : res.recording.rows()[r]) {
                int global_pos = positions[local - 1];
                sum_rows[r].push_back(
                    PairEntry{res.pass_counts[local - 1], n - global_pos + 1});
            }
        }
    }
    for (auto& row : sum_rows) std::sort(row.begin(), row.end());
    PairFilling out{std::move(sum_rows)};
    out.validate_against(z);
    return out;
}

ChainsResult chains_run(const Word& z, const PairFilling& seed,
                        bool check_invariants, std::vector<ChainsStep>* trace) {
    int n = static_cast<int>(z.size());
    if (!is_cocharge_word(z))
        throw invalid_argument("chains_run: input is not a cocharge word");
    seed.validate_against(z);
    Partition seed_shape = seed.shape();

    Grid grid = to_grid(seed);
    std::vector<int> letter = z;
    std::vector<char> alive(n, 1);
    std::vector<int> passes(n, 0);
    std::vector<int> nu;
    ChainsResult result;
    result.shape_trace.push_back(seed_shape);

    auto locate = [&](int index) -> std::pair<int, int> {
        for (int r = 0; r < static_cast<int>(grid.size()); ++r)
            for (int c = 0; c < static_cast<int>(grid[r].size()); ++c)
                if (grid[r][c] && grid[r][c]->index == index) return {r, c};
        throw internal_error("chains_run: index missing from filling");
    };

    auto current_shape = [&]() {
        std::vector<int> lens;
        for (const auto& row : grid)
            if (!row.empty()) lens.push_back(static_cast<int>(row.size()));
        return Partition(std::move(lens));
    };

    // Conditions (1) and (3)-(6) hold after every step, rows stay sorted,
    // and columns increase on the read region.  The full column condition
    // can fail transiently between two just-refilled unread cells (a later
    // relocation repairs it); it is enforced on the final filling.
    auto validate_state = [&](const PairEntry& last_read) {
        std::vector<char> seen(n + 1, 0);
        for (int r = 0; r < static_cast<int>(grid.size()); ++r) {
            const auto& row = grid[r];
            const PairEntry* prev = nullptr;
            int cells = 0;
            for (int c = 0; c < static_cast<int>(row.size()); ++c) {
                if (!row[c]) throw internal_error("chains_run: gap between steps");
                const PairEntry& e = *row[c];
                ++cells;
                if (prev && !(*prev < e))
                    throw internal_error("chains_run: row not increasing");
                prev = &e;
                if (e.index < 1 || e.index > n || seen[e.index])
                    throw internal_error("chains_run: condition (1) violated");
                seen[e.index] = 1;
                if (e.pass < 1 || e.pass + z[n - e.index] != r + 1)
                    throw internal_error("chains_run: condition (4) violated");
                bool read = !(last_read < e);
                bool in_nu = r < static_cast<int>(nu.size()) && c < nu[r];
                if (read != in_nu)
                    throw internal_error("chains_run: condition (5) violated");
                bool deleted = !alive[n - e.index];
                if (read != deleted)
                    throw internal_error("chains_run: condition (6) violated");
                // Column increase over the read region.
                if (in_nu && r > 0 && !(*grid[r - 1][c] < e))
                    throw internal_error("chains_run: read region column not increasing");
            }
            if (r > 0 && static_cast<int>(grid[r - 1].size()) < cells)
                throw internal_error("chains_run: shape not a partition");
        }
        for (int i = 1; i <= n; ++i)
            if (!seen[i]) throw internal_error("chains_run: condition (1) violated");
        if (!dominates(current_shape(), seed_shape))
            throw internal_error("chains_run: condition (3) violated");
    };

    long long mx = *std::max_element(z.begin(), z.end());
    long long bound = static_cast<long long>(n) * (mx + n);
    long long steps = 0;
    int remaining = n, p = n - 1;
    while (remaining > 0) {
        if (!alive[p]) {
            p = (p - 1 + n) % n;
            continue;
        }
        if (++steps > bound)
            throw internal_error("chains_run: step bound exceeded");
        passes[p] += 1;
        int k = passes[p];
        int i = n - p;  // index of this position
        int a = letter[p];
        int r = a + 1;
        if (!partition_can_grow(nu, r)) {
            letter[p] = a + 1;
            if (check_invariants) {
                auto [tr, tc] = locate(i);
                if (grid[tr][tc]->pass <= k)
                    throw check_failure(
                        "chains_run: the run left its soundness envelope (a "
                        "pending pair fell due without a box); the bookkeeping "
                        "is exhaustively verified for words of length <= 8");
            }
            p = (p - 1 + n) % n;
            continue;
        }

        auto [tr, tc] = locate(i);
        int rprime = tr + 1;
        bool relocated = false;
        if (rprime < r)
            throw internal_error("chains_run: pending pair below target row");
        if (rprime == r) {
            if (grid[tr][tc]->pass != k)
                throw internal_error("chains_run: pass mismatch at target row");
            if (check_invariants &&
                tc != (r <= static_cast<int>(nu.size()) ? nu[r - 1] : 0))
                throw internal_error("chains_run: new box is not the pending cell");
        } else {
            relocated = true;
            if (r < 2)
                throw invalid_argument(
                    "chains_run: seed requires an insertion into the first row");
            int d = rprime - r;
            int j0 = tc;
            // Delete the column segment from (m,i) upward.
            std::vector<PairEntry> segment;
            for (int rr = tr; rr < static_cast<int>(grid.size()) &&
                              j0 < static_cast<int>(grid[rr].size()) && grid[rr][j0];
                 ++rr) {
                segment.push_back(*grid[rr][j0]);
                grid[rr][j0] = std::nullopt;
            }
            // Reinsert shifted pairs into rows r, r+1, ...  The pops form a
            // prefix of the insertions; the refill indexing depends on that.
            std::vector<PairEntry> pops;
            bool popping = true;
            for (std::size_t t = 0; t < segment.size(); ++t) {
                PairEntry entry{segment[t].pass - d, segment[t].index};
                int target0 = (r - 1) + static_cast<int>(t);
                if (target0 <= 0 || target0 >= static_cast<int>(grid.size()))
                    throw internal_error("chains_run: insertion row out of range");
                auto popped = insert_into_row(grid, target0, entry);
                if (popped) {
                    if (!popping)
                        throw internal_error("chains_run: pops are not a prefix");
                    pops.push_back(*popped);
                } else {
                    popping = false;
                }
            }
            // Refill the vacated column bottom-up with the pops shifted back.
            for (std::size_t t = 0; t < pops.size(); ++t) {
                int rr = tr + static_cast<int>(t);
                if (grid[rr][j0])
                    throw internal_error("chains_run: refill target not empty");
                grid[rr][j0] = PairEntry{pops[t].pass + d, pops[t].index};
            }
            // Rearrange rows r' and above: sort and close gaps.
            for (int rr = tr; rr < static_cast<int>(grid.size()); ++rr) {
                std::vector<PairEntry> entries;
                for (const Cell& c : grid[rr])
                    if (c) entries.push_back(*c);
                std::sort(entries.begin(), entries.end());
                grid[rr].assign(entries.begin(), entries.end());
            }
            while (!grid.empty() && grid.back().empty()) grid.pop_back();
            // The read pair must now sit in the new box of row r.
            auto [nr, nc] = locate(i);
            if (nr != r - 1 || grid[nr][nc]->pass != k ||
                nc != (r <= static_cast<int>(nu.size()) ? nu[r - 1] : 0))
                throw internal_error("chains_run: read pair not at the new box");
        }

        if (static_cast<int>(nu.size()) < r) nu.push_back(0);
        nu[r - 1] += 1;
        alive[p] = 0;
        --remaining;

        Partition sh = current_shape();
        if (!dominates(sh, result.shape_trace.back()))
            throw internal_error("chains_run: shape trace not dominance-increasing");
        result.shape_trace.push_back(sh);
        if (check_invariants) validate_state(PairEntry{k, i});
        if (trace) {
            ChainsStep step;
            step.read = PairEntry{k, i};
            step.position = p + 1;
            step.row = r;
            step.relocated = relocated;
            step.shape = sh;
            for (const auto& row : grid) {
                std::vector<PairEntry> entries;
                for (const Cell& c : row)
                    if (c) entries.push_back(*c);
                if (!entries.empty()) step.rows.push_back(std::move(entries));
            }
            trace->push_back(std::move(step));
        }
        p = (p - 1 + n) % n;
    }

    result.ctype = Partition(nu);
    result.filling = from_grid(grid);
    if (!(result.filling.shape() == result.ctype))
        throw internal_error("chains_run: final shape differs from read diagram");
    return result;
}

}  // namespace gpb
