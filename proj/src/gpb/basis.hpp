#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "gpb/charge.hpp"
#include "gpb/partition.hpp"
#include "gpb/permutation.hpp"
#include "gpb/qpoly.hpp"
#include "gpb/tableau.hpp"

namespace gpb {

using ExponentVector = Word;  // length-n exponents of x_1..x_n

// A deduplicated set of exponent vectors, listed in descent order.
struct MonomialSet {
    int n = 0;
    std::string kind;  // "artin" | "descent" | "charge" | "shuffle"
    std::vector<ExponentVector> members;

    bool contains(const ExponentVector& e) const;
    bool same_members(const MonomialSet& o) const;
};

// Compare by the sorted (partition) rearrangements lexicographically, then
// break ties lexicographically on the vectors themselves.
std::strong_ordering descent_compare(const ExponentVector& a, const ExponentVector& b);

// {x^a : a_i < i}; n! vectors.
MonomialSet artin_basis(int n);

// Exponent vectors of the Garsia-Stanton monomials g_w over S_n; equals the
// set of charge words of S_n.
MonomialSet descent_basis(int n);

// All interleavings of the given words, deduplicated.
std::set<Word> shuffle_set(const std::vector<Word>& words);

// Reverse shuffles: the shuffle set of the reversed words.
std::set<Word> reverse_shuffle_set(const std::vector<Word>& words);

// Union of shuffle sets over tuples from D_{mu_1} x ... x D_{mu_l}.
MonomialSet cc_shuffle_basis(const Partition& mu);

// {cw(w) : w in S_n, ctype(P(w)^t) dominates mu^t}.
MonomialSet charge_basis(const Partition& mu);

QPolynomial hilbert_series(const MonomialSet& s);

// Sorts w to increase within each gamma-block by adjacent swaps of
// non-consecutive values; requires the charge labels within each block of
// cw(w) to be pairwise distinct.  The charge label carried by each value is
// unchanged.
Permutation sort_gamma(const Permutation& w, const Composition& gamma);

struct AntisymWitness {
    Permutation w;
    Tableau P;
    Tableau Q;
    int charge = 0;
};

// All w with ctype(P(w)^t) dominating mu^t and des(Q(w)) inside the proper
// partial sums of gamma, sorted by word.
std::vector<AntisymWitness> antisym_index_set(const Partition& mu,
                                              const Composition& gamma);

// Per-n catalog of S_n grouped by insertion tableau, with the catabolizability
// type of each transposed insertion tableau computed once.
struct SnCatalog {
    struct TableauClass {
        Tableau P;
        Partition shape;
        Partition ctype_of_transpose;  // ctype(P^t)
        int charge = 0;                // charge(rw(P)) = cocharge(P^t)
    };
    struct WordRecord {
        Permutation w;
        ExponentVector cw;
        int charge = 0;
        std::vector<int> q_descents;  // des(Q(w))
        int tableau_id = 0;
    };
    int n = 0;
    std::vector<TableauClass> tableaux;
    std::vector<WordRecord> words;
};

// Cached; safe for concurrent readers.
const SnCatalog& sn_catalog(int n);

}  // namespace gpb
