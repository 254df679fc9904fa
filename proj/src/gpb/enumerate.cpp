#include "gpb/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace gpb {

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw invalid_argument("enumerate_partitions: n < 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> enumerate_compositions(int n) {
    if (n < 0) throw invalid_argument("enumerate_compositions: n < 0");
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    // Iterate over subsets of break points via recursion on the first part.
    struct Rec {
        std::vector<Composition>& out;
        std::vector<int>& cur;
        void operator()(int rem) {
            if (rem == 0) {
                out.emplace_back(Composition(cur));
                return;
            }
            for (int p = 1; p <= rem; ++p) {
                cur.push_back(p);
                (*this)(rem - p);
                cur.pop_back();
            }
        }
    } rec{out, cur};
    rec(n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> enumerate_syt(const Partition& la) {
    int n = la.sum();
    std::vector<std::vector<int>> rows(la.length());
    std::vector<Tableau> out;
    // Place 1..n in increasing order; each prefix is a standard filling.
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            out.emplace_back(Tableau(rows));
            return;
        }
        for (int r = 0; r < la.length(); ++r) {
            int len = static_cast<int>(rows[r].size());
            if (len >= la.part(r + 1)) continue;
            if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
            rows[r].push_back(k);
            self(self, k + 1);
            rows[r].pop_back();
        }
    };
    if (n == 0) return out;
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

std::vector<Tableau> enumerate_ssyt(const Partition& la, const std::vector<int>& weight) {
    int n = la.sum();
    int total = std::accumulate(weight.begin(), weight.end(), 0);
    std::vector<Tableau> out;
    if (total != n) return out;
    std::vector<int> remaining = weight;
    std::vector<std::vector<int>> rows(la.length());
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == la.length()) {
            out.emplace_back(Tableau(rows));
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == la.part(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(weight.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            remaining[v - 1] -= 1;
            rows[r].push_back(v);
            self(self, nr, nc);
            rows[r].pop_back();
            remaining[v - 1] += 1;
        }
    };
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

long long hook_length_count(const Partition& la) {
    int n = la.sum();
    Partition t = la.transposed();
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    long long hooks = 1;
    for (int r = 1; r <= la.length(); ++r)
        for (int c = 1; c <= la.part(r); ++c)
            hooks *= (la.part(r) - c) + (t.part(c) - r) + 1;
    return fact / hooks;
}

}  // namespace gpb
