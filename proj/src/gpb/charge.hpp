#pragma once

#include "gpb/common.hpp"
#include "gpb/permutation.hpp"

namespace gpb {

// Cocharge labels per position: 1 gets label 0; i+1 gets the label of i,
// plus one when i+1 sits to the left of i.
Word cocharge_word(const Permutation& w);

// cw(w) = rev(cocharge_word(rev(w))).
Word charge_word(const Permutation& w);

int cocharge(const Permutation& w);
int charge(const Permutation& w);

// True iff z contains a 0 and every index i satisfies one of:
//   (1) some equal letter to its right,
//   (2) some letter z_i + 1 to its left,
//   (3) z_i is the maximum letter of z.
// Exactly the words of the form cocharge_word(w).
bool is_cocharge_word(const Word& z);

// Canonical w with cocharge_word(w) = z: positions labelled k are filled
// with consecutive values, left to right, after all smaller labels.
Permutation cocharge_word_inverse(const Word& z);

// Exponent vector of the Garsia-Stanton monomial g_w: exponent of x_j is the
// number of descents i of w with j among w_1..w_i.  Degree maj(w).
Word descent_word(const Permutation& w);

// Lascoux-Schutzenberger charge of a word with partition content, by repeated
// extraction of standard subwords scanning right-to-left cyclically.  Agrees
// with charge(w) on permutations.
int charge_on_content_word(const Word& w);

// n(weight) - charge_on_content_word(w).
int cocharge_on_content_word(const Word& w);

}  // namespace gpb
