#pragma once

#include <map>

#include "gpb/partition.hpp"
#include "gpb/qpoly.hpp"

namespace gpb {

enum class SFBasis { m, e, h, s };

// Homogeneous symmetric function of one fixed degree n with QPolynomial
// coefficients, stored as an expansion in a tagged basis.
class SymmetricFunction {
public:
    SymmetricFunction(int degree, SFBasis basis) : degree_(degree), basis_(basis) {}

    // The basis element indexed by la, e.g. h_la or e_la.
    static SymmetricFunction generator(SFBasis basis, const Partition& la);

    int degree() const { return degree_; }
    SFBasis basis() const { return basis_; }
    const std::map<Partition, QPolynomial>& coeffs() const { return coeff_; }

    QPolynomial coeff(const Partition& la) const {
        auto it = coeff_.find(la);
        return it == coeff_.end() ? QPolynomial{} : it->second;
    }
    void add_term(const Partition& la, const QPolynomial& c);

    bool operator==(const SymmetricFunction& o) const;

private:
    int degree_;
    SFBasis basis_;
    std::map<Partition, QPolynomial> coeff_;  // zero coefficients dropped
};

// Kostka number via SSYT count; cross-checked internally against the count of
// standard tableaux with descents inside the partial sums of gamma.
long long kostka(const Partition& la, const std::vector<int>& gamma);

// Modified q-Kostka polynomial: cocharge generating function over
// SSYT(la, mu).
QPolynomial qkostka_modified(const Partition& la, const Partition& mu);

// Modified Hall-Littlewood polynomial in the Schur basis: sum over standard
// tableaux T with ctype(T) dominating mu of q^{cocharge(T)} s_{shape(T)}.
SymmetricFunction modified_hl(const Partition& mu);

// Independent route: sum over la of qkostka_modified(la, mu) s_la.
SymmetricFunction modified_hl_via_ssyt(const Partition& mu);

// Change of basis (through the Schur basis, using the Kostka matrix and back
// substitution along dominance).
SymmetricFunction convert(const SymmetricFunction& f, SFBasis target);

// omega: s_la -> s_{la^t}; swaps the e and h tags.  Results carrying an m
// expansion come back in the Schur basis.
SymmetricFunction omega(const SymmetricFunction& f);

QPolynomial hall_inner_product(const SymmetricFunction& f, const SymmetricFunction& g);

// <e_gamma, modified_hl(mu^t)> computed combinatorially: sum of q^{charge(w)}
// over w with ctype(P(w)^t) dominating mu^t and des(w) inside the proper
// partial sums of gamma.
QPolynomial e_coeff_combinatorial(const Partition& mu, const Composition& gamma);

// n! / prod(mu_i!): dimension of the quotient whose ungraded character is h_mu.
long long dimension_formula(const Partition& mu);

}  // namespace gpb
