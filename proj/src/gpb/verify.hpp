#pragma once

#include <optional>

#include "gpb/basis.hpp"
#include "gpb/groebner.hpp"
#include "gpb/partition.hpp"
#include "gpb/qpoly.hpp"

namespace gpb {

// Tanisaki generators of I_mu in n variables: e_d(S) for every nonempty
// S subset of {x_1..x_n} and |S| - p_{n-|S|}(mu) < d <= |S|, where p_k(mu)
// counts the boxes of mu outside the first k columns.  With prune on,
// generators implied by a smaller variable set are dropped; the ideal is
// unchanged (see docs/tanisaki.md).
std::vector<MVPolynomial> tanisaki_generators(const Partition& mu, int n,
                                              TermOrder order = TermOrder::grevlex,
                                              bool prune = true);

// Boxes of mu outside the first k columns.
int boxes_outside_columns(const Partition& mu, int k);

struct CertifyReport {
    Partition mu;
    std::optional<Composition> gamma;
    long long dimension = 0;    // standard-monomial count of I_{mu^t}
    long long cardinality = 0;  // candidate set size
    long long rank = 0;
    std::vector<long long> graded_ranks;
    std::vector<long long> quotient_graded;  // standard monomials per degree
    std::vector<long long> expected_graded;  // from the combinatorial side
    bool pass = false;
    std::vector<std::string> basis_polynomials;  // antisymmetrized candidates (antisym only)
};

// Reduces each candidate monomial modulo a Groebner basis of I_{mu^t} and
// reports the exact rank of the reductions; passes iff
// rank = |monomials| = dim C[x]/I_{mu^t}.
CertifyReport certify_basis(const MonomialSet& monomials, const Partition& mu,
                            TermOrder order = TermOrder::grevlex);

// Signed sum over the Young subgroup S_gamma acting on variable indices.
MVPolynomial apply_antisymmetrizer(const MVPolynomial& p, const Composition& gamma);

// Builds {N_gamma x^{cw(w)} : w in antisym_index_set(mu, gamma)}, reduces
// modulo I_{mu^t}, and passes iff the exact rank equals the set size and
// <e_gamma, h_{mu^t}>, with graded ranks matching e_coeff_combinatorial.
CertifyReport certify_antisym_basis(const Partition& mu, const Composition& gamma,
                                    TermOrder order = TermOrder::grevlex);

}  // namespace gpb
