#pragma once

#include <utility>

#include "gpb/charge.hpp"
#include "gpb/partition.hpp"
#include "gpb/permutation.hpp"
#include "gpb/tableau.hpp"

namespace gpb {

// Largest m such that the first row contains the m smallest entries of T.
int d_statistic(const Tableau& T);

// K(T) = P(w' w) where rw(T) = w w' and w' is the first row.  Lowers cocharge
// by |shape| - shape_1.
Tableau catabolize(const Tableau& T);

// Same operation performed by sliding the first row off and rectifying the
// swapped skew shape with jeu-de-taquin; cross-check for catabolize.
Tableau catabolize_via_jdt(const Tableau& T);

// Cat_m(T): requires the first row to contain the m smallest entries; deletes
// them and catabolizes the rest.  May return the empty tableau.
Tableau m_catabolize(const Tableau& T, int m);

// Sequence of d-increments along iterated catabolism; always a partition.
Partition ctype(const Tableau& T);

// Same value computed by iterated maximal m-catabolism.
Partition ctype_via_mcat(const Tableau& T);

struct BlasiakResult {
    Partition ctype;
    Tableau recording;             // entry = 1-based input index, in box-creation order
    std::vector<int> pass_counts;  // pass_counts[i] = k when index i+1 was inserted
};

// Catabolism insertion: read the word right-to-left cyclically; a letter a is
// deleted when row a+1 of the growing diagram can take a box, otherwise it is
// bumped to a+1.  Requires a cocharge word; guarded against nontermination by
// a step bound of n*(max letter + n) reads.
BlasiakResult blasiak_ctype(const Word& z);

// ctype of the insertion tableau of w, via catabolism insertion on its
// cocharge word.
Partition ctype_of(const Permutation& w);

// Subword of z at the sorted index set of column j, rows <= r, of the
// recording filling.  Always a cocharge word.  1-based j and r.
Word column_subword(const Tableau& recording, const Word& z, int j, int r);

// Requires w_i + 1 < w_{i+1} (1-based i).  Returns w with positions i, i+1
// swapped and whether ctype(swapped) dominates ctype(w).
std::pair<Permutation, bool> adjacent_swap_check(const Permutation& w, int i);

}  // namespace gpb
