#include "gpb/groebner.hpp"

#include <algorithm>
#include <set>

namespace gpb {

namespace {

// Full reduction of p modulo basis (not necessarily a Groebner basis).
MVPolynomial reduce(const MVPolynomial& p, const std::vector<MVPolynomial>& basis) {
    MVPolynomial rem(p.nvars(), p.order());
    MVPolynomial work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        const mpq_class lc = work.leading_coeff();
        bool reduced = false;
        for (const MVPolynomial& g : basis) {
            if (g.is_zero()) continue;
            if (divides(g.leading_monomial(), lm)) {
                Monomial q = mono_div(lm, g.leading_monomial());
                work -= g.times_term(q, lc / g.leading_coeff());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            MVPolynomial t = MVPolynomial::monomial(p.nvars(), lm, lc, p.order());
            work -= t;
        }
    }
    return rem;
}

MVPolynomial s_polynomial(const MVPolynomial& f, const MVPolynomial& g) {
    Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    MVPolynomial a = f.times_term(mono_div(l, f.leading_monomial()),
                                  1 / f.leading_coeff());
    MVPolynomial b = g.times_term(mono_div(l, g.leading_monomial()),
                                  1 / g.leading_coeff());
    return a - b;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MVPolynomial>& gens, int nvars,
                         TermOrder order) {
    std::vector<MVPolynomial> G;
    for (const MVPolynomial& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars() != nvars || g.order() != order)
            throw invalid_argument("buchberger: generator with mismatched setup");
        G.push_back(g.monic());
    }
    // Deterministic processing order: pairs keyed by (lcm degree, lcm, i, j).
    struct PairKey {
        int deg;
        Monomial lcm;
        int i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lcm != o.lcm) return lcm < o.lcm;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> queue;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            const Monomial& a = G[i].leading_monomial();
            const Monomial& b = G[j].leading_monomial();
            Monomial l = mono_lcm(a, b);
            if (l == mono_mul(a, b)) continue;  // coprime leading terms
            queue.insert(PairKey{total_degree(l), l, i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(G.size()); ++j) push_pairs(j);
    while (!queue.empty()) {
        PairKey k = *queue.begin();
        queue.erase(queue.begin());
        MVPolynomial s = reduce(s_polynomial(G[k.i], G[k.j]), G);
        if (s.is_zero()) continue;
        G.push_back(s.monic());
        push_pairs(static_cast<int>(G.size()) - 1);
    }
    // Minimalize: drop generators whose leading term another divides.
    std::vector<MVPolynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < G.size() && keep; ++j) {
            if (i == j) continue;
            const Monomial& a = G[j].leading_monomial();
            const Monomial& b = G[i].leading_monomial();
            if (divides(a, b) && (a != b || j < i)) keep = false;
        }
        if (keep) minimal.push_back(G[i]);
    }
    // Inter-reduce.
    std::vector<MVPolynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MVPolynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MVPolynomial r = reduce(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(),
              [order](const MVPolynomial& a, const MVPolynomial& b) {
                  return MonoLess{order}(a.leading_monomial(), b.leading_monomial());
              });
    GroebnerBasis out;
    out.nvars = nvars;
    out.order = order;
    for (MVPolynomial& g : reduced) {
        out.leads.push_back(g.leading_monomial());
        out.polys.push_back(std::move(g));
    }
    return out;
}

MVPolynomial normal_form(const MVPolynomial& p, const GroebnerBasis& G) {
    if (p.nvars() != G.nvars || p.order() != G.order)
        throw invalid_argument("normal_form: polynomial/basis setup mismatch");
    return reduce(p, G.polys);
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G, long long cap) {
    std::set<Monomial> seen;
    std::vector<Monomial> frontier{Monomial(G.nvars, 0)};
    auto reducible = [&](const Monomial& m) {
        for (const Monomial& l : G.leads)
            if (divides(l, m)) return true;
        return false;
    };
    if (reducible(frontier[0])) return {};  // ideal contains a constant
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const Monomial& m : frontier) {
            for (int v = 0; v < G.nvars; ++v) {
                Monomial up = m;
                up[v] += 1;
                if (seen.count(up) || reducible(up)) continue;
                if (static_cast<long long>(seen.size()) >= cap)
                    throw check_failure("standard_monomials: quotient appears infinite-dimensional");
                seen.insert(up);
                next.push_back(up);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return MonoLess{G.order}(a, b);
    });
    return out;
}

std::vector<long long> graded_quotient_counts(const GroebnerBasis& G) {
    std::vector<long long> counts;
    for (const Monomial& m : standard_monomials(G)) {
        int d = total_degree(m);
        if (static_cast<int>(counts.size()) <= d) counts.resize(d + 1, 0);
        counts[d] += 1;
    }
    return counts;
}

long long rational_matrix_rank(std::vector<std::vector<mpq_class>> rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    // Clear denominators row by row.
    std::vector<std::vector<mpz_class>> m;
    for (auto& row : rows) {
        mpz_class lcm = 1;
        for (const mpq_class& x : row)
            if (x != 0) {
                mpz_class den = x.get_den();
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
                lcm = lcm / g * den;
            }
        std::vector<mpz_class> r;
        r.reserve(ncols);
        for (const mpq_class& x : row) {
            mpq_class v = x * lcm;
            r.push_back(v.get_num());
        }
        m.push_back(std::move(r));
    }
    // Fraction-free (Bareiss) elimination.
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                mpz_class t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<long long>(rank);
}

}  // namespace gpb
