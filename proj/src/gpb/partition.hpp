#pragma once

#include <compare>
#include <vector>

#include "gpb/common.hpp"

namespace gpb {

// Weakly decreasing sequence of positive integers, stored without trailing
// zeros.  The empty partition (of 0) is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const { return sum_; }
    bool empty() const { return parts_.empty(); }

    // 1-based part access, zero-padded beyond the last part.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    Partition transposed() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Lexicographic on part sequences; used only as a container order.
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

    std::string to_string() const;  // "3,1"; empty partition prints "0"

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// Positive integer sequence in a fixed order.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const { return sum_; }

    // {gamma_1, gamma_1+gamma_2, ..., gamma_1+...+gamma_{l-1}}
    std::vector<int> partial_sums_proper() const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Composition& o) const {
        return parts_ <=> o.parts_;
    }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// Prefix-sum comparison; requires |mu| = |la|, padding the shorter with zeros.
bool dominates(const Partition& mu, const Partition& la);

// n(mu) = sum (i-1) mu_i.
int n_statistic(const Partition& mu);

// Pointwise sum of parts (a partition again).
Partition partwise_sum(const Partition& a, const Partition& b);

}  // namespace gpb
