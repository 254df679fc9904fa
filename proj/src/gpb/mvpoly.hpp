#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "gpb/common.hpp"

namespace gpb {

// Exponent vector over x_1..x_n.
using Monomial = std::vector<int>;

enum class TermOrder { grevlex, lex };

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);  // a | b componentwise
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Strict less-than with variable priority x_n > ... > x_1.
struct MonoLess {
    TermOrder order = TermOrder::grevlex;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.  Terms are
// kept sorted ascending in the active term order; zero coefficients are never
// stored.
class MVPolynomial {
public:
    explicit MVPolynomial(int nvars, TermOrder order = TermOrder::grevlex)
        : nvars_(nvars), terms_(MonoLess{order}) {}

    static MVPolynomial monomial(int nvars, const Monomial& m,
                                 const mpq_class& c = 1,
                                 TermOrder order = TermOrder::grevlex);
    static MVPolynomial variable(int nvars, int i,  // 1-based
                                 TermOrder order = TermOrder::grevlex);

    int nvars() const { return nvars_; }
    TermOrder order() const { return terms_.key_comp().order; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, mpq_class, MonoLess>& terms() const { return terms_; }

    const Monomial& leading_monomial() const;
    const mpq_class& leading_coeff() const;
    int degree() const;  // max total degree, -1 if zero

    void add_term(const Monomial& m, const mpq_class& c);
    MVPolynomial& operator+=(const MVPolynomial& o);
    MVPolynomial& operator-=(const MVPolynomial& o);
    MVPolynomial operator+(const MVPolynomial& o) const;
    MVPolynomial operator-(const MVPolynomial& o) const;
    MVPolynomial operator*(const MVPolynomial& o) const;
    MVPolynomial scaled(const mpq_class& c) const;
    // this * c * x^m
    MVPolynomial times_term(const Monomial& m, const mpq_class& c) const;
    MVPolynomial monic() const;

    // Substitution x_i -> x_{sigma(i)}; sigma is 1-based.
    MVPolynomial permuted_variables(const std::vector<int>& sigma) const;

    bool operator==(const MVPolynomial& o) const;

    std::string to_string() const;  // "x2*x4^2 - x1*x4^2 + 3"

private:
    int nvars_;
    std::map<Monomial, mpq_class, MonoLess> terms_;
};

// e_d in the 1-based variable subset `vars` of x_1..x_nvars.
MVPolynomial elementary_symmetric(int nvars, int d, const std::vector<int>& vars,
                                  TermOrder order = TermOrder::grevlex);

}  // namespace gpb
