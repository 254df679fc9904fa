#pragma once

#include "gpb/mvpoly.hpp"

namespace gpb {

// Reduced Groebner basis: monic generators with pairwise non-divisible
// leading terms, each fully reduced against the others, sorted by leading
// monomial.
struct GroebnerBasis {
    int nvars = 0;
    TermOrder order = TermOrder::grevlex;
    std::vector<MVPolynomial> polys;
    std::vector<Monomial> leads;
};

GroebnerBasis buchberger(const std::vector<MVPolynomial>& gens, int nvars,
                         TermOrder order);

// Remainder of full multivariate division by G; supported on standard
// monomials, linear in p, zero iff p lies in the ideal.
MVPolynomial normal_form(const MVPolynomial& p, const GroebnerBasis& G);

// Monomials outside the leading-term ideal, sorted by (degree, order).
// Throws if more than `cap` are found (quotient not finite-dimensional).
std::vector<Monomial> standard_monomials(const GroebnerBasis& G, long long cap = 2000000);

// Counts of standard monomials per degree.
std::vector<long long> graded_quotient_counts(const GroebnerBasis& G);

// Rank over Q of a matrix of exact rationals, by clearing denominators and
// fraction-free (Bareiss) elimination.
long long rational_matrix_rank(std::vector<std::vector<mpq_class>> rows);

}  // namespace gpb
