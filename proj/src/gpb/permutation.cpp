#include "gpb/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace gpb {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
    std::vector<char> seen(v_.size() + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
            throw invalid_argument("not a permutation of 1..n");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const { return join_ints(v_); }

Permutation inverse(const Permutation& w) {
    std::vector<int> inv(w.size());
    for (int i = 0; i < w.size(); ++i) inv[w[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation reverse(const Permutation& w) {
    std::vector<int> v(w.values().rbegin(), w.values().rend());
    return Permutation(std::move(v));
}

std::vector<int> descent_set(const Permutation& w) {
    std::vector<int> d;
    for (int i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back(i + 1);
    return d;
}

int maj(const Permutation& w) {
    int s = 0;
    for (int i : descent_set(w)) s += i;
    return s;
}

int inv(const Permutation& w) {
    int s = 0;
    for (int i = 0; i < w.size(); ++i)
        for (int j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++s;
    return s;
}

namespace {

// Insert x into row r, bumping upward; returns the final cell's row.
int row_insert(std::vector<std::vector<int>>& rows, int x) {
    int r = 0;
    while (true) {
        if (r == static_cast<int>(rows.size())) rows.push_back({});
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return r;
        }
        std::swap(x, *it);
        ++r;
    }
}

}  // namespace

Tableau rsk_insertion(const Word& w) {
    std::vector<std::vector<int>> rows;
    for (int x : w) row_insert(rows, x);
    return Tableau(std::move(rows));
}

std::pair<Tableau, Tableau> rsk(const Permutation& w) {
    std::vector<std::vector<int>> p, q;
    for (int i = 0; i < w.size(); ++i) {
        int r = row_insert(p, w[i]);
        if (r == static_cast<int>(q.size())) q.push_back({});
        q[r].push_back(i + 1);
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Permutation rsk_inverse(const Tableau& P, const Tableau& Q) {
    if (!P.is_standard() || !Q.is_standard())
        throw invalid_argument("rsk_inverse requires standard tableaux");
    if (P.shape() != Q.shape())
        throw invalid_argument("rsk_inverse requires equal shapes");
    auto rows = P.rows();
    // Locate each value of Q.
    int n = P.size();
    std::vector<std::pair<int, int>> pos(n + 1);
    for (int r = 0; r < Q.num_rows(); ++r)
        for (std::size_t c = 0; c < Q.rows()[r].size(); ++c)
            pos[Q.rows()[r][c]] = {r, static_cast<int>(c)};
    std::vector<int> w(n);
    for (int k = n; k >= 1; --k) {
        auto [r, c] = pos[k];
        int x = rows[r][c];
        rows[r].pop_back();
        if (rows[r].empty()) rows.pop_back();
        for (int rr = r - 1; rr >= 0; --rr) {
            // Rightmost entry smaller than x.
            auto it = std::lower_bound(rows[rr].begin(), rows[rr].end(), x);
            std::swap(x, *(it - 1));
        }
        w[k - 1] = x;
    }
    return Permutation(std::move(w));
}

std::vector<int> descent_set_tableau(const Tableau& T) {
    if (!T.is_standard())
        throw invalid_argument("descent set requires a standard tableau");
    int n = T.size();
    std::vector<int> row_of(n + 1, 0);
    for (int r = 0; r < T.num_rows(); ++r)
        for (int x : T.rows()[r]) row_of[x] = r;
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
        if (row_of[i] < row_of[i + 1]) d.push_back(i);
    return d;
}

}  // namespace gpb
