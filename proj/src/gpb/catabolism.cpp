#include "gpb/catabolism.hpp"

#include <algorithm>
#include <set>

namespace gpb {

int d_statistic(const Tableau& T) {
    if (T.num_rows() == 0) return 0;
    std::vector<int> all;
    for (const auto& r : T.rows()) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    std::set<int> first(T.rows()[0].begin(), T.rows()[0].end());
    int m = 0;
    while (m < static_cast<int>(all.size()) && first.count(all[m])) ++m;
    return m;
}

namespace {

Word upper_reading_word(const Tableau& T) {
    Word w;
    const auto& rows = T.rows();
    for (std::size_t r = rows.size(); r-- > 1;)
        w.insert(w.end(), rows[r].begin(), rows[r].end());
    return w;
}

}  // namespace

Tableau catabolize(const Tableau& T) {
    if (T.num_rows() == 0) return T;
    Word word(T.rows()[0].begin(), T.rows()[0].end());
    Word upper = upper_reading_word(T);
    word.insert(word.end(), upper.begin(), upper.end());
    return rsk_insertion(word);
}

Tableau catabolize_via_jdt(const Tableau& T) {
    if (T.num_rows() <= 1) return T;
    int shift = static_cast<int>(T.rows()[0].size());
    std::vector<int> offsets;
    std::vector<std::vector<int>> rows;
    for (int r = 1; r < T.num_rows(); ++r) {
        offsets.push_back(shift);
        rows.push_back(T.rows()[r]);
    }
    offsets.push_back(0);
    rows.push_back(T.rows()[0]);
    return jdt_rectify(SkewTableau(std::move(offsets), std::move(rows)));
}

Tableau m_catabolize(const Tableau& T, int m) {
    if (m < 0 || m > (T.num_rows() ? static_cast<int>(T.rows()[0].size()) : 0))
        throw invalid_argument("m_catabolize: m out of range");
    if (d_statistic(T) < m)
        throw invalid_argument("m_catabolize: first row must contain the m smallest entries");
    Word word;
    if (T.num_rows() > 0)
        word.assign(T.rows()[0].begin() + m, T.rows()[0].end());
    Word upper = upper_reading_word(T);
    word.insert(word.end(), upper.begin(), upper.end());
    return rsk_insertion(word);
}

Partition ctype(const Tableau& T) {
    std::vector<int> parts;
    Tableau cur = T;
    int n = T.size(), prev = 0;
    while (prev < n) {
        int d = d_statistic(cur);
        parts.push_back(d - prev);
        prev = d;
        if (prev < n) cur = catabolize(cur);
    }
    return Partition(std::move(parts));
}

Partition ctype_via_mcat(const Tableau& T) {
    std::vector<int> parts;
    Tableau cur = T;
    while (cur.size() > 0) {
        int m = d_statistic(cur);
        parts.push_back(m);
        cur = m_catabolize(cur, m);
    }
    return Partition(std::move(parts));
}

BlasiakResult blasiak_ctype(const Word& z) {
    int n = static_cast<int>(z.size());
    if (n == 0) throw invalid_argument("blasiak_ctype: empty word");
    int mx = *std::max_element(z.begin(), z.end());
    long long bound = static_cast<long long>(n) * (mx + n);
    std::vector<int> letter = z;
    std::vector<char> alive(n, 1);
    std::vector<int> passes(n, 0);
    std::vector<int> nu;  // growing partition
    std::vector<std::vector<int>> rec;
    BlasiakResult out;
    out.pass_counts.assign(n, 0);
    int remaining = n, p = n - 1;
    long long steps = 0;
    while (remaining > 0) {
        if (!alive[p]) {
            p = (p - 1 + n) % n;
            continue;
        }
        if (++steps > bound)
            throw invalid_argument("blasiak_ctype: step bound exceeded (not a cocharge word?)");
        passes[p] += 1;
        int a = letter[p];
        int r = a + 1;  // candidate row, 1-based
        bool fits = (r == 1) ? true
                             : (static_cast<int>(nu.size()) >= r - 1 &&
                                nu[r - 2] > (static_cast<int>(nu.size()) >= r ? nu[r - 1] : 0));
        if (fits) {
            if (static_cast<int>(nu.size()) < r) nu.push_back(0);
            nu[r - 1] += 1;
            if (static_cast<int>(rec.size()) < r) rec.push_back({});
            rec[r - 1].push_back(p + 1);
            out.pass_counts[p] = passes[p];
            alive[p] = 0;
            --remaining;
        } else {
            letter[p] = a + 1;
        }
        p = (p - 1 + n) % n;
    }
    out.ctype = Partition(nu);
    out.recording = Tableau(std::move(rec));
    return out;
}

Partition ctype_of(const Permutation& w) {
    return blasiak_ctype(cocharge_word(w)).ctype;
}

Word column_subword(const Tableau& recording, const Word& z, int j, int r) {
    Partition shape = recording.shape();
    Partition heights = shape.transposed();
    if (j < 1 || j > shape.part(1))
        throw invalid_argument("column_subword: column out of range");
    if (r < 1 || r > heights.part(j))
        throw invalid_argument("column_subword: row out of range");
    std::vector<int> idx;
    for (int row = 0; row < r; ++row) idx.push_back(recording.rows()[row][j - 1]);
    std::sort(idx.begin(), idx.end());
    Word sub;
    for (int i : idx) sub.push_back(z[i - 1]);
    return sub;
}

std::pair<Permutation, bool> adjacent_swap_check(const Permutation& w, int i) {
    if (i < 1 || i >= w.size())
        throw invalid_argument("adjacent_swap_check: index out of range");
    if (w[i - 1] + 1 >= w[i])
        throw invalid_argument("adjacent_swap_check: requires w_i + 1 < w_{i+1}");
    std::vector<int> v = w.values();
    std::swap(v[i - 1], v[i]);
    Permutation swapped(std::move(v));
    bool raised = dominates(ctype_of(swapped), ctype_of(w));
    return {std::move(swapped), raised};
}

}  // namespace gpb
