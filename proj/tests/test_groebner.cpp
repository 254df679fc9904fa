#include <doctest.h>

#include <random>

#include "gpb/basis.hpp"
#include "gpb/enumerate.hpp"
#include "gpb/groebner.hpp"
#include "gpb/symfunc.hpp"
#include "gpb/verify.hpp"

using namespace gpb;

TEST_CASE("monomial orders") {
    MonoLess grevlex{TermOrder::grevlex};
    // With x2 > x1: x2^2 > x1*x2 > x1^2.
    CHECK(grevlex(Monomial{1, 1}, Monomial{0, 2}));
    CHECK(grevlex(Monomial{2, 0}, Monomial{1, 1}));
    CHECK(grevlex(Monomial{0, 0}, Monomial{1, 0}));
    MonoLess lex{TermOrder::lex};
    CHECK(lex(Monomial{5, 0}, Monomial{0, 1}));
    CHECK_FALSE(lex(Monomial{0, 1}, Monomial{5, 0}));
}

TEST_CASE("polynomial arithmetic and printing") {
    MVPolynomial x1 = MVPolynomial::variable(2, 1);
    MVPolynomial x2 = MVPolynomial::variable(2, 2);
    MVPolynomial square = (x1 + x2) * (x1 + x2);
    CHECK(square.terms().size() == 3);
    CHECK(square.terms().at(Monomial{1, 1}) == 2);
    MVPolynomial zero = square - square;
    CHECK(zero.is_zero());
    MVPolynomial p(4);
    p.add_term({0, 1, 0, 2}, 1);
    p.add_term({1, 0, 0, 2}, -1);
    p.add_term({0, 1, 2, 0}, -1);
    p.add_term({1, 0, 2, 0}, 1);
    CHECK(p.to_string() == "x2*x4^2 - x2*x3^2 - x1*x4^2 + x1*x3^2");
    // x_i -> x_{sigma(i)} with sigma = (2 1 3 4) swaps the first two slots.
    MVPolynomial moved = p.permuted_variables({2, 1, 3, 4});
    CHECK(moved.terms().at(Monomial{1, 0, 0, 2}) == 1);
    CHECK(elementary_symmetric(3, 2, {1, 2, 3}).terms().size() == 3);
    CHECK(elementary_symmetric(3, 4, {1, 2, 3}).is_zero());
}

TEST_CASE("buchberger on the coinvariant ideal of two variables") {
    std::vector<MVPolynomial> gens = {elementary_symmetric(2, 1, {1, 2}),
                                      elementary_symmetric(2, 2, {1, 2})};
    GroebnerBasis gb = buchberger(gens, 2, TermOrder::grevlex);
    REQUIRE(gb.polys.size() == 2);
    CHECK(gb.leads[0] == Monomial{0, 1});  // x2
    CHECK(gb.leads[1] == Monomial{2, 0});  // x1^2
    std::vector<Monomial> std_monos = standard_monomials(gb);
    CHECK(std_monos == std::vector<Monomial>{{0, 0}, {1, 0}});
    // NF(x2) = -x1.
    MVPolynomial nf = normal_form(MVPolynomial::variable(2, 2), gb);
    CHECK(nf.terms().size() == 1);
    CHECK(nf.terms().at(Monomial{1, 0}) == -1);
    // Standard monomials reduce to themselves; generators reduce to zero.
    CHECK(normal_form(MVPolynomial::variable(2, 1), gb) ==
          MVPolynomial::variable(2, 1));
    for (const MVPolynomial& g : gens) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("buchberger with a single generator") {
    std::vector<MVPolynomial> gens = {MVPolynomial::variable(2, 1)};
    GroebnerBasis gb = buchberger(gens, 2, TermOrder::grevlex);
    REQUIRE(gb.polys.size() == 1);
    CHECK(gb.polys[0] == MVPolynomial::variable(2, 1));
    CHECK(buchberger({}, 2, TermOrder::grevlex).polys.empty());
}

TEST_CASE("normal form is idempotent and linear") {
    GroebnerBasis gb = buchberger(tanisaki_generators(Partition({2, 1}), 3), 3,
                                  TermOrder::grevlex);
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        MVPolynomial p(3), q(3);
        for (int t = 0; t < 4; ++t) {
            Monomial m{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                       static_cast<int>(rng() % 3)};
            p.add_term(m, static_cast<int>(rng() % 7) - 3);
            Monomial m2{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                        static_cast<int>(rng() % 3)};
            q.add_term(m2, static_cast<int>(rng() % 7) - 3);
        }
        MVPolynomial np = normal_form(p, gb), nq = normal_form(q, gb);
        CHECK(normal_form(np, gb) == np);
        CHECK(normal_form(p + q, gb) == np + nq);
    }
}

TEST_CASE("tanisaki generators") {
    // mu = (1,1): the full coinvariant ideal of two variables.
    std::vector<MVPolynomial> gens = tanisaki_generators(Partition({1, 1}), 2);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == elementary_symmetric(2, 1, {1, 2}));
    CHECK(gens[1] == elementary_symmetric(2, 2, {1, 2}));
    // mu = (2): both variables die, the quotient is one-dimensional.
    GroebnerBasis gb2 =
        buchberger(tanisaki_generators(Partition({2}), 2), 2, TermOrder::grevlex);
    CHECK(standard_monomials(gb2).size() == 1);
    GroebnerBasis gb211 = buchberger(tanisaki_generators(Partition({2, 1, 1}), 4), 4,
                                     TermOrder::grevlex);
    CHECK(standard_monomials(gb211).size() == 12);
    CHECK_THROWS_AS(tanisaki_generators(Partition({2}), 3), invalid_argument);
}

TEST_CASE("pruned and full generating sets give the same ideal") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            GroebnerBasis pruned = buchberger(tanisaki_generators(mu, n), n,
                                              TermOrder::grevlex);
            GroebnerBasis full = buchberger(
                tanisaki_generators(mu, n, TermOrder::grevlex, false), n,
                TermOrder::grevlex);
            REQUIRE(pruned.polys.size() == full.polys.size());
            for (std::size_t i = 0; i < pruned.polys.size(); ++i)
                CHECK(pruned.polys[i] == full.polys[i]);
        }
}

TEST_CASE("quotient dimensions match the multinomial formula") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            GroebnerBasis gb =
                buchberger(tanisaki_generators(mu, n), n, TermOrder::grevlex);
            CHECK(static_cast<long long>(standard_monomials(gb).size()) ==
                  dimension_formula(mu));
        }
}

TEST_CASE("certify the charge basis") {
    CertifyReport rep = certify_basis(charge_basis(Partition({3, 1})), Partition({3, 1}));
    CHECK(rep.pass);
    CHECK(rep.rank == 12);
    CHECK(rep.dimension == 12);
    CHECK(rep.graded_ranks == std::vector<long long>{1, 3, 5, 3});
    CHECK(rep.quotient_graded == std::vector<long long>{1, 3, 5, 3});
    CertifyReport one = certify_basis(charge_basis(Partition({1, 1, 1})),
                                      Partition({1, 1, 1}));
    CHECK(one.pass);
    CHECK(one.rank == 1);
    for (int n = 1; n <= 4; ++n) {
        CertifyReport full = certify_basis(descent_basis(n), Partition({n}));
        CHECK(full.pass);
        long long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        CHECK(full.rank == f);
    }
}

TEST_CASE("certification is order independent") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            CertifyReport a = certify_basis(charge_basis(mu), mu, TermOrder::grevlex);
            CertifyReport b = certify_basis(charge_basis(mu), mu, TermOrder::lex);
            CHECK(a.pass == b.pass);
            CHECK(a.rank == b.rank);
            CHECK(a.dimension == b.dimension);
            CHECK(a.graded_ranks == b.graded_ranks);
        }
}

TEST_CASE("antisymmetrizer") {
    MVPolynomial x2 = MVPolynomial::variable(2, 2);
    MVPolynomial n2 = apply_antisymmetrizer(x2, Composition({2}));
    CHECK(n2 == x2 - MVPolynomial::variable(2, 1));
    CHECK(apply_antisymmetrizer(MVPolynomial::variable(2, 1) * x2, Composition({2}))
              .is_zero());
    MVPolynomial mono = MVPolynomial::monomial(4, {0, 1, 0, 2});
    MVPolynomial expected(4);
    expected.add_term({0, 1, 0, 2}, 1);
    expected.add_term({1, 0, 0, 2}, -1);
    expected.add_term({0, 1, 2, 0}, -1);
    expected.add_term({1, 0, 2, 0}, 1);
    CHECK(apply_antisymmetrizer(mono, Composition({2, 2})) == expected);
    // N(sigma p) = sgn(sigma) N(p) for sigma inside the Young subgroup.
    MVPolynomial swapped = mono.permuted_variables({1, 2, 4, 3});
    CHECK(apply_antisymmetrizer(swapped, Composition({2, 2})) ==
          expected.scaled(-1));
}

TEST_CASE("certify the antisymmetric basis") {
    CertifyReport rep = certify_antisym_basis(Partition({3, 1}), Composition({2, 2}));
    CHECK(rep.pass);
    CHECK(rep.rank == 2);
    CHECK(rep.graded_ranks == std::vector<long long>{0, 0, 1, 1});
    REQUIRE(rep.basis_polynomials.size() == 2);
    CHECK(rep.basis_polynomials[0] == "x2*x4^2 - x2*x3^2 - x1*x4^2 + x1*x3^2");
    CHECK(rep.basis_polynomials[1] == "x2*x4 - x2*x3 - x1*x4 + x1*x3");
    // The trivial Young subgroup reduces to the plain certification.
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            Composition ones(std::vector<int>(n, 1));
            CertifyReport anti = certify_antisym_basis(mu, ones);
            CertifyReport plain = certify_basis(charge_basis(mu), mu);
            CHECK(anti.pass);
            CHECK(anti.rank == plain.rank);
            CHECK(anti.graded_ranks == plain.graded_ranks);
        }
}

TEST_CASE("rational matrix rank") {
    CHECK(rational_matrix_rank({}) == 0);
    CHECK(rational_matrix_rank({{mpq_class(0), mpq_class(0)}}) == 0);
    CHECK(rational_matrix_rank({{mpq_class(1, 2), mpq_class(1)},
                                {mpq_class(1), mpq_class(2)}}) == 1);
    CHECK(rational_matrix_rank({{mpq_class(1, 3), mpq_class(1)},
                                {mpq_class(1), mpq_class(2)}}) == 2);
    CHECK(rational_matrix_rank({{mpq_class(0), mpq_class(1)},
                                {mpq_class(0), mpq_class(2)},
                                {mpq_class(1), mpq_class(0)}}) == 2);
}
