#include "gpb/basis.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "gpb/catabolism.hpp"
#include "gpb/enumerate.hpp"

namespace gpb {

bool MonomialSet::contains(const ExponentVector& e) const {
    return std::binary_search(members.begin(), members.end(), e,
                              [](const ExponentVector& a, const ExponentVector& b) {
                                  return descent_compare(a, b) < 0;
                              });
}

bool MonomialSet::same_members(const MonomialSet& o) const {
    return members == o.members;  // both listed in descent order
}

std::strong_ordering descent_compare(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw invalid_argument("descent_compare: length mismatch");
    ExponentVector sa = a, sb = b;
    std::sort(sa.rbegin(), sa.rend());
    std::sort(sb.rbegin(), sb.rend());
    if (auto c = sa <=> sb; c != 0) return c;
    return a <=> b;
}

namespace {

MonomialSet finalize(int n, std::string kind, std::set<ExponentVector> raw) {
    MonomialSet out;
    out.n = n;
    out.kind = std::move(kind);
    out.members.assign(raw.begin(), raw.end());
    std::sort(out.members.begin(), out.members.end(),
              [](const ExponentVector& a, const ExponentVector& b) {
                  return descent_compare(a, b) < 0;
              });
    return out;
}

}  // namespace

MonomialSet artin_basis(int n) {
    if (n < 1) throw invalid_argument("artin_basis: n must be >= 1");
    std::set<ExponentVector> raw;
    ExponentVector cur(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            raw.insert(cur);
            return;
        }
        for (int a = 0; a <= i; ++a) {
            cur[i] = a;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    return finalize(n, "artin", std::move(raw));
}

MonomialSet descent_basis(int n) {
    if (n < 1) throw invalid_argument("descent_basis: n must be >= 1");
    std::set<ExponentVector> raw;
    for (const Permutation& w : enumerate_permutations(n))
        raw.insert(descent_word(w));
    return finalize(n, "descent", std::move(raw));
}

namespace {

void shuffles_rec(const std::vector<Word>& words, std::vector<std::size_t>& taken,
                  Word& cur, std::set<Word>& out) {
    bool done = true;
    for (std::size_t j = 0; j < words.size(); ++j) {
        if (taken[j] < words[j].size()) {
            done = false;
            cur.push_back(words[j][taken[j]]);
            taken[j] += 1;
            shuffles_rec(words, taken, cur, out);
            taken[j] -= 1;
            cur.pop_back();
        }
    }
    if (done) out.insert(cur);
}

}  // namespace

std::set<Word> shuffle_set(const std::vector<Word>& words) {
    std::set<Word> out;
    std::vector<std::size_t> taken(words.size(), 0);
    Word cur;
    shuffles_rec(words, taken, cur, out);
    return out;
}

std::set<Word> reverse_shuffle_set(const std::vector<Word>& words) {
    std::vector<Word> reversed;
    for (const Word& w : words) reversed.emplace_back(w.rbegin(), w.rend());
    return shuffle_set(reversed);
}

MonomialSet cc_shuffle_basis(const Partition& mu) {
    int n = mu.sum();
    if (n < 1) throw invalid_argument("cc_shuffle_basis: empty partition");
    std::vector<std::vector<Word>> component_sets;
    for (int i = 1; i <= mu.length(); ++i) {
        MonomialSet d = descent_basis(mu.part(i));
        component_sets.push_back(d.members);
    }
    std::set<Word> raw;
    std::vector<Word> tuple(mu.length());
    auto rec = [&](auto&& self, int block) -> void {
        if (block == mu.length()) {
            for (const Word& u : shuffle_set(tuple)) raw.insert(u);
            return;
        }
        for (const Word& z : component_sets[block]) {
            tuple[block] = z;
            self(self, block + 1);
        }
    };
    rec(rec, 0);
    return finalize(n, "shuffle", std::move(raw));
}

const SnCatalog& sn_catalog(int n) {
    if (n < 1 || n > 8)
        throw invalid_argument("catalog of S_n is built for 1 <= n <= 8");
    static std::map<int, std::unique_ptr<SnCatalog>> cache;
    static std::shared_mutex mtx;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto cat = std::make_unique<SnCatalog>();
    cat->n = n;
    for (const Partition& la : enumerate_partitions(n)) {
        std::vector<Tableau> syts = enumerate_syt(la);
        for (const Tableau& P : syts) {
            SnCatalog::TableauClass cls;
            cls.P = P;
            cls.shape = la;
            cls.ctype_of_transpose = ctype(P.transposed());
            cls.charge = charge(Permutation(P.reading_word()));
            int tid = static_cast<int>(cat->tableaux.size());
            for (const Tableau& Q : syts) {
                SnCatalog::WordRecord rec;
                rec.w = rsk_inverse(P, Q);
                rec.cw = charge_word(rec.w);
                rec.charge = charge(rec.w);
                rec.q_descents = descent_set_tableau(Q);
                rec.tableau_id = tid;
                cat->words.push_back(std::move(rec));
            }
            cat->tableaux.push_back(std::move(cls));
        }
    }
    std::unique_lock lock(mtx);
    auto [it, inserted] = cache.try_emplace(n, std::move(cat));
    return *it->second;
}

MonomialSet charge_basis(const Partition& mu) {
    int n = mu.sum();
    if (n < 1) throw invalid_argument("charge_basis: empty partition");
    Partition mut = mu.transposed();
    const SnCatalog& cat = sn_catalog(n);
    std::vector<char> qualifies(cat.tableaux.size(), 0);
    long long expected = 0;
    for (std::size_t t = 0; t < cat.tableaux.size(); ++t) {
        if (dominates(cat.tableaux[t].ctype_of_transpose, mut)) {
            qualifies[t] = 1;
            expected += hook_length_count(cat.tableaux[t].shape);
        }
    }
    std::set<ExponentVector> raw;
    for (const auto& rec : cat.words)
        if (qualifies[rec.tableau_id]) raw.insert(rec.cw);
    if (static_cast<long long>(raw.size()) != expected)
        throw internal_error("charge_basis: charge words collided across words");
    return finalize(n, "charge", std::move(raw));
}

QPolynomial hilbert_series(const MonomialSet& s) {
    QPolynomial h;
    for (const ExponentVector& e : s.members) {
        int deg = 0;
        for (int x : e) deg += x;
        h.add_term(deg, 1);
    }
    return h;
}

Permutation sort_gamma(const Permutation& w, const Composition& gamma) {
    if (gamma.sum() != w.size())
        throw invalid_argument("sort_gamma: |gamma| must equal n");
    Word cw = charge_word(w);
    std::vector<int> label_of_value(w.size() + 1);
    for (int i = 0; i < w.size(); ++i) label_of_value[w[i]] = cw[i];
    std::vector<int> v = w.values();
    int start = 0;
    for (int b = 0; b < gamma.length(); ++b) {
        int len = gamma.parts()[b];
        std::set<int> labels;
        for (int i = start; i < start + len; ++i)
            if (!labels.insert(cw[i]).second)
                throw invalid_argument(
                    "sort_gamma: repeated charge label inside a block");
        std::sort(v.begin() + start, v.begin() + start + len);
        start += len;
    }
    Permutation out(std::move(v));
    Word cw_out = charge_word(out);
    for (int i = 0; i < out.size(); ++i)
        if (label_of_value[out[i]] != cw_out[i])
            throw internal_error("sort_gamma: a charge label moved");
    return out;
}

std::vector<AntisymWitness> antisym_index_set(const Partition& mu,
                                              const Composition& gamma) {
    int n = mu.sum();
    if (gamma.sum() != n)
        throw invalid_argument("antisym_index_set: |mu| must equal |gamma|");
    Partition mut = mu.transposed();
    std::vector<int> psums = gamma.partial_sums_proper();
    const SnCatalog& cat = sn_catalog(n);
    std::vector<char> qualifies(cat.tableaux.size(), 0);
    for (std::size_t t = 0; t < cat.tableaux.size(); ++t)
        qualifies[t] = dominates(cat.tableaux[t].ctype_of_transpose, mut);
    std::vector<AntisymWitness> out;
    for (const auto& rec : cat.words) {
        if (!qualifies[rec.tableau_id]) continue;
        bool ok = std::all_of(rec.q_descents.begin(), rec.q_descents.end(),
                              [&](int d) {
                                  return std::find(psums.begin(), psums.end(), d) !=
                                         psums.end();
                              });
        if (!ok) continue;
        AntisymWitness wit;
        wit.w = rec.w;
        auto pq = rsk(rec.w);
        wit.P = pq.first;
        wit.Q = pq.second;
        wit.charge = rec.charge;
        out.push_back(std::move(wit));
    }
    std::sort(out.begin(), out.end(), [](const AntisymWitness& a, const AntisymWitness& b) {
        return a.w < b.w;
    });
    return out;
}

}  // namespace gpb
