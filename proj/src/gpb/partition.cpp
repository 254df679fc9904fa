#include "gpb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gpb {

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw invalid_argument("partition parts must weakly decrease");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transposed() const {
    std::vector<int> t;
    if (parts_.empty()) return Partition{};
    t.resize(parts_[0], 0);
    for (int j = 0; j < parts_[0]; ++j)
        t[j] = static_cast<int>(std::count_if(
            parts_.begin(), parts_.end(), [j](int p) { return p >= j + 1; }));
    return Partition(std::move(t));
}

std::string Partition::to_string() const {
    return parts_.empty() ? std::string("0") : join_ints(parts_);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw invalid_argument("composition parts must be positive");
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Composition::partial_sums_proper() const {
    std::vector<int> s;
    int acc = 0;
    for (int i = 0; i + 1 < length(); ++i) {
        acc += parts_[i];
        s.push_back(acc);
    }
    return s;
}

std::string Composition::to_string() const {
    return parts_.empty() ? std::string("0") : join_ints(parts_);
}

bool dominates(const Partition& mu, const Partition& la) {
    if (mu.sum() != la.sum())
        throw invalid_argument("dominance requires partitions of equal size");
    int len = std::max(mu.length(), la.length());
    int pm = 0, pl = 0;
    for (int i = 1; i <= len; ++i) {
        pm += mu.part(i);
        pl += la.part(i);
        if (pm < pl) return false;
    }
    return true;
}

int n_statistic(const Partition& mu) {
    int s = 0;
    for (int i = 1; i <= mu.length(); ++i) s += (i - 1) * mu.part(i);
    return s;
}

Partition partwise_sum(const Partition& a, const Partition& b) {
    std::vector<int> s;
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) s.push_back(a.part(i) + b.part(i));
    return Partition(std::move(s));
}

}  // namespace gpb
