#include "gpb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "gpb/suites.hpp"
#include "gpb/symfunc.hpp"

namespace gpb {

int boxes_outside_columns(const Partition& mu, int k) {
    Partition t = mu.transposed();
    int s = 0;
    for (int j = k + 1; j <= t.length(); ++j) s += t.part(j);
    return s;
}

std::vector<MVPolynomial> tanisaki_generators(const Partition& mu, int n,
                                              TermOrder order, bool prune) {
    if (mu.sum() != n)
        throw invalid_argument("tanisaki_generators: mu must be a partition of n");
    // threshold(k) = k - p_{n-k}; e_d(S) is a generator for |S| = k, d > threshold(k).
    std::vector<int> thr(n + 1, 0);
    for (int k = 1; k <= n; ++k) thr[k] = k - boxes_outside_columns(mu, n - k);
    std::vector<MVPolynomial> gens;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) vars.push_back(i + 1);
        int k = static_cast<int>(vars.size());
        int lo = std::max(0, thr[k]) + 1;
        int hi = k;
        if (prune && k >= 2) {
            // e_d(S) with d > thr(k-1) + 1 follows from the size-(k-1)
            // generators via e_d(S) = e_d(S') + x e_{d-1}(S').
            hi = std::min(hi, thr[k - 1] + 1);
        }
        for (int d = lo; d <= hi; ++d)
            gens.push_back(elementary_symmetric(n, d, vars, order));
    }
    return gens;
}

namespace {

struct ReducedCandidates {
    GroebnerBasis gb;
    std::vector<long long> quotient_graded;
    long long dimension = 0;
    // Rows grouped by degree: degree -> list of coefficient vectors.
    std::map<int, std::vector<std::vector<mpq_class>>> rows_by_degree;
    std::vector<MVPolynomial> reduced;
};

ReducedCandidates reduce_candidates(const std::vector<MVPolynomial>& candidates,
                                    const Partition& mu_t_of, int n, TermOrder order) {
    ReducedCandidates out;
    out.gb = buchberger(tanisaki_generators(mu_t_of, n, order), n, order);
    std::vector<Monomial> std_monos = standard_monomials(out.gb);
    out.dimension = static_cast<long long>(std_monos.size());
    out.quotient_graded = graded_quotient_counts(out.gb);
    std::map<Monomial, int> col;
    for (std::size_t i = 0; i < std_monos.size(); ++i)
        col[std_monos[i]] = static_cast<int>(i);
    // Batch reduction: candidates are independent and the basis immutable.
    int count = static_cast<int>(candidates.size());
    std::vector<MVPolynomial> reduced(count, MVPolynomial(0));
    int workers = std::min(worker_count(), std::max(1, count));
    std::atomic<int> next{0};
    auto work = [&] {
        int i;
        while ((i = next.fetch_add(1)) < count)
            reduced[i] = normal_form(candidates[i], out.gb);
    };
    if (workers <= 1 || count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (int i = 0; i < count; ++i) {
        out.reduced.push_back(reduced[i]);
        std::vector<mpq_class> row(std_monos.size(), 0);
        for (const auto& [m, c] : reduced[i].terms()) row[col.at(m)] = c;
        out.rows_by_degree[candidates[i].degree()].push_back(std::move(row));
    }
    return out;
}

}  // namespace

CertifyReport certify_basis(const MonomialSet& monomials, const Partition& mu,
                            TermOrder order) {
    int n = mu.sum();
    if (monomials.n != n)
        throw invalid_argument("certify_basis: monomial length differs from |mu|");
    CertifyReport rep;
    rep.mu = mu;
    std::vector<MVPolynomial> candidates;
    for (const ExponentVector& e : monomials.members)
        candidates.push_back(MVPolynomial::monomial(n, e, 1, order));
    ReducedCandidates rc = reduce_candidates(candidates, mu.transposed(), n, order);
    rep.dimension = rc.dimension;
    rep.cardinality = static_cast<long long>(monomials.members.size());
    rep.quotient_graded = rc.quotient_graded;
    for (const auto& [deg, rows] : rc.rows_by_degree) {
        long long r = rational_matrix_rank(rows);
        if (static_cast<int>(rep.graded_ranks.size()) <= deg)
            rep.graded_ranks.resize(deg + 1, 0);
        rep.graded_ranks[deg] = r;
        rep.rank += r;
    }
    rep.pass = (rep.rank == rep.cardinality) && (rep.cardinality == rep.dimension);
    return rep;
}

MVPolynomial apply_antisymmetrizer(const MVPolynomial& p, const Composition& gamma) {
    if (gamma.sum() != p.nvars())
        throw invalid_argument("apply_antisymmetrizer: |gamma| must equal the variable count");
    int n = p.nvars();
    MVPolynomial out(n, p.order());
    // Iterate over the Young subgroup: independent permutations per block.
    std::vector<std::pair<int, int>> blocks;  // [start, len), 0-based
    int start = 0;
    for (int part : gamma.parts()) {
        blocks.emplace_back(start, part);
        start += part;
    }
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    auto rec = [&](auto&& self, std::size_t b, int sign) -> void {
        if (b == blocks.size()) {
            out += p.permuted_variables(sigma).scaled(sign);
            return;
        }
        auto [s, len] = blocks[b];
        std::vector<int> block(len);
        for (int i = 0; i < len; ++i) block[i] = s + i + 1;
        std::sort(block.begin(), block.end());
        do {
            int sgn = 1;
            for (int i = 0; i < len; ++i)
                for (int j = i + 1; j < len; ++j)
                    if (block[i] > block[j]) sgn = -sgn;
            for (int i = 0; i < len; ++i) sigma[s + i] = block[i];
            self(self, b + 1, sign * sgn);
        } while (std::next_permutation(block.begin(), block.end()));
        for (int i = 0; i < len; ++i) sigma[s + i] = s + i + 1;
    };
    rec(rec, 0, 1);
    return out;
}

CertifyReport certify_antisym_basis(const Partition& mu, const Composition& gamma,
                                    TermOrder order) {
    int n = mu.sum();
    if (gamma.sum() != n)
        throw invalid_argument("certify_antisym_basis: |mu| must equal |gamma|");
    CertifyReport rep;
    rep.mu = mu;
    rep.gamma = gamma;
    std::vector<AntisymWitness> wits = antisym_index_set(mu, gamma);
    std::vector<MVPolynomial> candidates;
    for (const AntisymWitness& wit : wits) {
        Word cw = charge_word(wit.w);
        candidates.push_back(
            apply_antisymmetrizer(MVPolynomial::monomial(n, cw, 1, order), gamma));
        rep.basis_polynomials.push_back(candidates.back().to_string());
    }
    ReducedCandidates rc = reduce_candidates(candidates, mu.transposed(), n, order);
    rep.dimension = rc.dimension;
    rep.cardinality = static_cast<long long>(candidates.size());
    rep.quotient_graded = rc.quotient_graded;
    for (const auto& [deg, rows] : rc.rows_by_degree) {
        long long r = rational_matrix_rank(rows);
        if (static_cast<int>(rep.graded_ranks.size()) <= deg)
            rep.graded_ranks.resize(deg + 1, 0);
        rep.graded_ranks[deg] = r;
        rep.rank += r;
    }
    QPolynomial expected = e_coeff_combinatorial(mu, gamma);
    for (int d = 0; d <= expected.degree(); ++d)
        rep.expected_graded.push_back(expected.coeff(d));
    long long target = hall_inner_product(
                           SymmetricFunction::generator(
                               SFBasis::e, Partition([&] {
                                   std::vector<int> g = gamma.parts();
                                   std::sort(g.rbegin(), g.rend());
                                   return g;
                               }())),
                           SymmetricFunction::generator(SFBasis::h, mu.transposed()))
                           .eval_one();
    std::vector<long long> graded_trim = rep.graded_ranks;
    while (!graded_trim.empty() && graded_trim.back() == 0) graded_trim.pop_back();
    rep.pass = (rep.rank == rep.cardinality) && (rep.rank == target) &&
               (graded_trim == rep.expected_graded);
    return rep;
}

}  // namespace gpb
