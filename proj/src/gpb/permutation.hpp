#pragma once

#include <utility>
#include <vector>

#include "gpb/common.hpp"
#include "gpb/tableau.hpp"

namespace gpb {

// One-line notation: values()[i] is the image of i+1; values are 1..n each once.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);
    static Permutation identity(int n);

    const std::vector<int>& values() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    int operator[](int pos0) const { return v_[pos0]; }

    bool operator==(const Permutation& o) const { return v_ == o.v_; }
    bool operator<(const Permutation& o) const { return v_ < o.v_; }

    std::string to_string() const;  // "3,5,1,6,2,4,7"

private:
    std::vector<int> v_;
};

Permutation inverse(const Permutation& w);
Permutation reverse(const Permutation& w);

// Descent positions {i : w_i > w_{i+1}}, 1-based, sorted.
std::vector<int> descent_set(const Permutation& w);
int maj(const Permutation& w);
int inv(const Permutation& w);

// Row insertion of a word with pairwise distinct letters.
Tableau rsk_insertion(const Word& w);

// (P, Q): insertion and recording tableaux, standard and of equal shape.
std::pair<Tableau, Tableau> rsk(const Permutation& w);

// Inverse of rsk: requires P, Q standard of equal shape.
Permutation rsk_inverse(const Tableau& P, const Tableau& Q);

// {i : i appears in a lower row than i+1}; requires T standard.
std::vector<int> descent_set_tableau(const Tableau& T);

}  // namespace gpb
