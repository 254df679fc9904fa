#include "gpb/charge.hpp"

#include <algorithm>
#include <numeric>

#include "gpb/partition.hpp"

namespace gpb {

Word cocharge_word(const Permutation& w) {
    int n = w.size();
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[w[i]] = i;
    std::vector<int> label(n + 1, 0);
    for (int v = 2; v <= n; ++v)
        label[v] = label[v - 1] + (pos[v] < pos[v - 1] ? 1 : 0);
    Word z(n);
    for (int i = 0; i < n; ++i) z[i] = label[w[i]];
    return z;
}

Word charge_word(const Permutation& w) {
    Word z = cocharge_word(reverse(w));
    std::reverse(z.begin(), z.end());
    return z;
}

int cocharge(const Permutation& w) {
    Word z = cocharge_word(w);
    return std::accumulate(z.begin(), z.end(), 0);
}

int charge(const Permutation& w) {
    Word z = charge_word(w);
    return std::accumulate(z.begin(), z.end(), 0);
}

bool is_cocharge_word(const Word& z) {
    int n = static_cast<int>(z.size());
    if (n == 0) return false;
    for (int x : z)
        if (x < 0) throw invalid_argument("letters must be nonnegative");
    int mx = *std::max_element(z.begin(), z.end());
    if (std::find(z.begin(), z.end(), 0) == z.end()) return false;
    for (int i = 0; i < n; ++i) {
        if (z[i] == mx) continue;
        bool ok = false;
        for (int j = i + 1; j < n && !ok; ++j) ok = (z[j] == z[i]);
        for (int j = 0; j < i && !ok; ++j) ok = (z[j] == z[i] + 1);
        if (!ok) return false;
    }
    return true;
}

Permutation cocharge_word_inverse(const Word& z) {
    if (!is_cocharge_word(z))
        throw invalid_argument("not a cocharge word");
    int n = static_cast<int>(z.size());
    int mx = *std::max_element(z.begin(), z.end());
    std::vector<int> w(n, 0);
    int next = 1;
    for (int k = 0; k <= mx; ++k)
        for (int i = 0; i < n; ++i)
            if (z[i] == k) w[i] = next++;
    return Permutation(std::move(w));
}

Word descent_word(const Permutation& w) {
    int n = w.size();
    Word e(n, 0);
    for (int i : descent_set(w))
        for (int j = 0; j < i; ++j) e[w[j] - 1] += 1;
    return e;
}

namespace {

// Content as a vector of multiplicities of 1..max; throws unless it is a
// partition (weakly decreasing, all letters 1..max present).
std::vector<int> partition_content(const Word& w) {
    if (w.empty()) return {};
    int mx = *std::max_element(w.begin(), w.end());
    if (*std::min_element(w.begin(), w.end()) < 1)
        throw invalid_argument("content word letters must be >= 1");
    std::vector<int> mult(mx, 0);
    for (int x : w) mult[x - 1] += 1;
    for (int v = 0; v < mx; ++v) {
        if (mult[v] == 0 || (v > 0 && mult[v - 1] < mult[v]))
            throw invalid_argument("word does not have partition content");
    }
    return mult;
}

}  // namespace

int charge_on_content_word(const Word& w) {
    std::vector<int> mult = partition_content(w);
    int n = static_cast<int>(w.size());
    std::vector<char> used(n, 0);
    int remaining = n;
    int total = 0;
    while (remaining > 0) {
        int top = 0;
        for (std::size_t v = 0; v < mult.size(); ++v)
            if (mult[v] > 0) top = static_cast<int>(v) + 1;
        // Mark one occurrence of each of 1..top, scanning right-to-left and
        // wrapping around from the chosen letter.
        std::vector<int> chosen;
        int start = n - 1;
        for (int v = 1; v <= top; ++v) {
            int p = start, found = -1;
            for (int cnt = 0; cnt < n; ++cnt) {
                if (!used[p] && w[p] == v) {
                    found = p;
                    break;
                }
                p = (p - 1 + n) % n;
            }
            if (found < 0) throw internal_error("extraction failed");
            chosen.push_back(found);
            used[found] = 1;
            start = (found - 1 + n) % n;
        }
        std::sort(chosen.begin(), chosen.end());
        std::vector<int> sub;
        for (int p : chosen) sub.push_back(w[p]);
        total += charge(Permutation(sub));
        for (int v = 1; v <= top; ++v) mult[v - 1] -= 1;
        remaining -= top;
    }
    return total;
}

int cocharge_on_content_word(const Word& w) {
    std::vector<int> mult = partition_content(w);
    Partition weight(mult);
    return n_statistic(weight) - charge_on_content_word(w);
}

}  // namespace gpb
