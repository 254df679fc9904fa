#pragma once

#include <vector>

#include "gpb/partition.hpp"
#include "gpb/permutation.hpp"
#include "gpb/tableau.hpp"

namespace gpb {

// All partitions of n, ascending lexicographic on part sequences.
std::vector<Partition> enumerate_partitions(int n);

// All compositions of n, ascending lexicographic.
std::vector<Composition> enumerate_compositions(int n);

// All standard Young tableaux of shape la, ascending by reading word.
std::vector<Tableau> enumerate_syt(const Partition& la);

// All semistandard fillings of shape la with weight[i-1] copies of letter i,
// ascending by reading word.
std::vector<Tableau> enumerate_ssyt(const Partition& la, const std::vector<int>& weight);

// All of S_n in lexicographic order.
std::vector<Permutation> enumerate_permutations(int n);

// |SYT(la)| by the hook length formula.
long long hook_length_count(const Partition& la);

}  // namespace gpb
