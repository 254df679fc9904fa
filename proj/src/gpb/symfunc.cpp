#include "gpb/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "gpb/basis.hpp"
#include "gpb/catabolism.hpp"
#include "gpb/charge.hpp"
#include "gpb/enumerate.hpp"

namespace gpb {

SymmetricFunction SymmetricFunction::generator(SFBasis basis, const Partition& la) {
    SymmetricFunction f(la.sum(), basis);
    f.add_term(la, QPolynomial::one());
    return f;
}

void SymmetricFunction::add_term(const Partition& la, const QPolynomial& c) {
    if (la.sum() != degree_)
        throw invalid_argument("symmetric function: index of wrong degree");
    auto it = coeff_.find(la);
    if (it == coeff_.end()) {
        if (!c.is_zero()) coeff_.emplace(la, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeff_.erase(it);
}

bool SymmetricFunction::operator==(const SymmetricFunction& o) const {
    return degree_ == o.degree_ && basis_ == o.basis_ && coeff_ == o.coeff_;
}

long long kostka(const Partition& la, const std::vector<int>& gamma) {
    int total = 0;
    for (int g : gamma) {
        if (g <= 0) throw invalid_argument("kostka: weight parts must be positive");
        total += g;
    }
    if (total != la.sum()) throw invalid_argument("kostka: size mismatch");
    long long by_ssyt = static_cast<long long>(enumerate_ssyt(la, gamma).size());
    // Standard-tableau route: descents confined to the proper partial sums.
    std::vector<int> psums;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < gamma.size(); ++i) {
        acc += gamma[i];
        psums.push_back(acc);
    }
    long long by_syt = 0;
    for (const Tableau& T : enumerate_syt(la)) {
        std::vector<int> des = descent_set_tableau(T);
        bool ok = std::all_of(des.begin(), des.end(), [&](int d) {
            return std::find(psums.begin(), psums.end(), d) != psums.end();
        });
        if (ok) ++by_syt;
    }
    if (by_ssyt != by_syt)
        throw internal_error("kostka: the two counting routes disagree");
    return by_ssyt;
}

QPolynomial qkostka_modified(const Partition& la, const Partition& mu) {
    if (la.sum() != mu.sum()) throw invalid_argument("qkostka: size mismatch");
    QPolynomial out;
    for (const Tableau& T : enumerate_ssyt(la, mu.parts()))
        out.add_term(cocharge_on_content_word(T.reading_word()), 1);
    return out;
}

SymmetricFunction modified_hl(const Partition& mu) {
    int n = mu.sum();
    SymmetricFunction f(n, SFBasis::s);
    const SnCatalog& cat = sn_catalog(n);
    // Standard tableaux U of size n are the transposes of the catalog's
    // insertion tableaux; ctype(U) and cocharge(U) are stored on the class.
    for (const auto& cls : cat.tableaux) {
        if (!dominates(cls.ctype_of_transpose, mu)) continue;
        f.add_term(cls.shape.transposed(), QPolynomial::q_power(cls.charge));
    }
    return f;
}

SymmetricFunction modified_hl_via_ssyt(const Partition& mu) {
    int n = mu.sum();
    SymmetricFunction f(n, SFBasis::s);
    for (const Partition& la : enumerate_partitions(n)) {
        QPolynomial k = qkostka_modified(la, mu);
        if (!k.is_zero()) f.add_term(la, k);
    }
    return f;
}

namespace {

// Kostka matrix at degree n over partitions listed in descending
// lexicographic order, which refines dominance: K[i][j] != 0 implies i <= j.
struct KostkaTable {
    std::vector<Partition> parts;           // descending lex
    std::map<Partition, int> index;
    std::vector<std::vector<long long>> K;  // K[row la][col ga]
};

const KostkaTable& kostka_table(int n) {
    static std::map<int, std::unique_ptr<KostkaTable>> cache;
    static std::shared_mutex mtx;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto tab = std::make_unique<KostkaTable>();
    tab->parts = enumerate_partitions(n);
    std::reverse(tab->parts.begin(), tab->parts.end());
    int m = static_cast<int>(tab->parts.size());
    for (int i = 0; i < m; ++i) tab->index[tab->parts[i]] = i;
    tab->K.assign(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i > j) continue;  // K_{la,ga} = 0 unless la dominates ga
            tab->K[i][j] = static_cast<long long>(
                enumerate_ssyt(tab->parts[i], tab->parts[j].parts()).size());
        }
    std::unique_lock lock(mtx);
    auto [it, inserted] = cache.try_emplace(n, std::move(tab));
    return *it->second;
}

std::vector<QPolynomial> to_vector(const SymmetricFunction& f, const KostkaTable& tab) {
    std::vector<QPolynomial> v(tab.parts.size());
    for (const auto& [la, c] : f.coeffs()) v[tab.index.at(la)] = c;
    return v;
}

SymmetricFunction from_vector(int n, SFBasis basis, const std::vector<QPolynomial>& v,
                              const KostkaTable& tab) {
    SymmetricFunction f(n, basis);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) f.add_term(tab.parts[i], v[i]);
    return f;
}

SymmetricFunction to_schur(const SymmetricFunction& f) {
    if (f.basis() == SFBasis::s) return f;
    const KostkaTable& tab = kostka_table(f.degree());
    int m = static_cast<int>(tab.parts.size());
    std::vector<QPolynomial> in = to_vector(f, tab);
    std::vector<QPolynomial> s(m);
    switch (f.basis()) {
        case SFBasis::h:
            // h_ga = sum_la K[la][ga] s_la
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j)
                    if (tab.K[i][j] && !in[j].is_zero())
                        s[i] += in[j] * tab.K[i][j];
            break;
        case SFBasis::e: {
            // e_ga = sum_la K[la^t][ga] s_la ... accumulate on la = row^t
            for (int i = 0; i < m; ++i) {
                int it = tab.index.at(tab.parts[i].transposed());
                for (int j = i; j < m; ++j)
                    if (tab.K[i][j] && !in[j].is_zero())
                        s[it] += in[j] * tab.K[i][j];
            }
            break;
        }
        case SFBasis::m: {
            // Solve K^T c_s = c_m by forward substitution along the order.
            for (int j = 0; j < m; ++j) {
                QPolynomial acc = in[j];
                for (int i = 0; i < j; ++i)
                    if (tab.K[i][j] && !s[i].is_zero())
                        acc += s[i] * (-tab.K[i][j]);
                s[j] = acc;  // K[j][j] = 1
            }
            break;
        }
        case SFBasis::s:
            break;
    }
    return from_vector(f.degree(), SFBasis::s, s, tab);
}

SymmetricFunction schur_to(const SymmetricFunction& f, SFBasis target) {
    const KostkaTable& tab = kostka_table(f.degree());
    int m = static_cast<int>(tab.parts.size());
    std::vector<QPolynomial> s = to_vector(f, tab);
    switch (target) {
        case SFBasis::s:
            return f;
        case SFBasis::m: {
            // c_m[ga] = sum_la K[la][ga] c_s[la]
            std::vector<QPolynomial> out(m);
            for (int j = 0; j < m; ++j)
                for (int i = 0; i <= j; ++i)
                    if (tab.K[i][j] && !s[i].is_zero())
                        out[j] += s[i] * tab.K[i][j];
            return from_vector(f.degree(), SFBasis::m, out, tab);
        }
        case SFBasis::h: {
            // Solve K c_h = c_s by back substitution from the bottom.
            std::vector<QPolynomial> out(m);
            for (int i = m - 1; i >= 0; --i) {
                QPolynomial acc = s[i];
                for (int j = i + 1; j < m; ++j)
                    if (tab.K[i][j] && !out[j].is_zero())
                        acc += out[j] * (-tab.K[i][j]);
                out[i] = acc;
            }
            return from_vector(f.degree(), SFBasis::h, out, tab);
        }
        case SFBasis::e: {
            SymmetricFunction om = omega(f);  // still Schur
            SymmetricFunction h = schur_to(om, SFBasis::h);
            SymmetricFunction out(f.degree(), SFBasis::e);
            for (const auto& [la, c] : h.coeffs()) out.add_term(la, c);
            return out;
        }
    }
    throw internal_error("schur_to: unreachable");
}

}  // namespace

SymmetricFunction convert(const SymmetricFunction& f, SFBasis target) {
    if (f.basis() == target) return f;
    return schur_to(to_schur(f), target);
}

SymmetricFunction omega(const SymmetricFunction& f) {
    if (f.basis() == SFBasis::e || f.basis() == SFBasis::h) {
        SymmetricFunction out(f.degree(),
                              f.basis() == SFBasis::e ? SFBasis::h : SFBasis::e);
        for (const auto& [la, c] : f.coeffs()) out.add_term(la, c);
        return out;
    }
    SymmetricFunction s = to_schur(f);
    SymmetricFunction out(f.degree(), SFBasis::s);
    for (const auto& [la, c] : s.coeffs()) out.add_term(la.transposed(), c);
    return out;
}

QPolynomial hall_inner_product(const SymmetricFunction& f, const SymmetricFunction& g) {
    if (f.degree() != g.degree())
        throw invalid_argument("hall_inner_product: degree mismatch");
    SymmetricFunction fs = to_schur(f), gs = to_schur(g);
    QPolynomial out;
    for (const auto& [la, c] : fs.coeffs()) {
        QPolynomial d = gs.coeff(la);
        if (!d.is_zero()) out += c * d;
    }
    return out;
}

QPolynomial e_coeff_combinatorial(const Partition& mu, const Composition& gamma) {
    int n = mu.sum();
    if (gamma.sum() != n)
        throw invalid_argument("e_coeff_combinatorial: size mismatch");
    Partition mut = mu.transposed();
    std::vector<int> psums = gamma.partial_sums_proper();
    const SnCatalog& cat = sn_catalog(n);
    std::vector<char> qualifies(cat.tableaux.size(), 0);
    for (std::size_t t = 0; t < cat.tableaux.size(); ++t)
        qualifies[t] = dominates(cat.tableaux[t].ctype_of_transpose, mut);
    QPolynomial out;
    for (const auto& rec : cat.words) {
        if (!qualifies[rec.tableau_id]) continue;
        std::vector<int> des = descent_set(rec.w);
        bool ok = std::all_of(des.begin(), des.end(), [&](int d) {
            return std::find(psums.begin(), psums.end(), d) != psums.end();
        });
        if (ok) out.add_term(rec.charge, 1);
    }
    return out;
}

long long dimension_formula(const Partition& mu) {
    long long num = 1;
    for (int i = 2; i <= mu.sum(); ++i) num *= i;
    for (int p : mu.parts())
        for (int i = 2; i <= p; ++i) num /= i;
    return num;
}

}  // namespace gpb
