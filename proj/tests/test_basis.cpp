#include <doctest.h>

#include <set>

#include "gpb/basis.hpp"
#include "gpb/catabolism.hpp"
#include "gpb/enumerate.hpp"
#include "gpb/symfunc.hpp"

using namespace gpb;

namespace {
Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }
Word word_of(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}
std::set<Word> members_of(const MonomialSet& s) {
    return std::set<Word>(s.members.begin(), s.members.end());
}
long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
}

TEST_CASE("artin basis") {
    CHECK(artin_basis(1).members == std::vector<Word>{{0}});
    MonomialSet a3 = artin_basis(3);
    CHECK(hilbert_series(a3) == QPolynomial({1, 2, 2, 1}));
    for (int n = 1; n <= 8; ++n)
        CHECK(static_cast<long long>(artin_basis(n).members.size()) == factorial(n));
}

TEST_CASE("descent basis") {
    std::set<Word> expected = {word_of("012"), word_of("011"), word_of("101"),
                               word_of("001"), word_of("010"), word_of("000")};
    CHECK(members_of(descent_basis(3)) == expected);
    CHECK(descent_basis(1).members == std::vector<Word>{{0}});
    for (int n = 1; n <= 7; ++n)
        CHECK(hilbert_series(descent_basis(n)) == QPolynomial::q_factorial(n));
}

TEST_CASE("shuffle sets") {
    std::set<Word> sh = shuffle_set({word_of("01"), word_of("0")});
    CHECK(sh == std::set<Word>{word_of("001"), word_of("010")});
    CHECK(shuffle_set({word_of("0120")}) == std::set<Word>{word_of("0120")});
}

TEST_CASE("reverse shuffles") {
    CHECK(reverse_shuffle_set({word_of("01"), word_of("0")}) ==
          shuffle_set({word_of("10"), word_of("0")}));
    // The worked six-letter decomposition: cc(634125) = 211001 interleaves
    // the reversed charge words of 123 and 312.
    Word cw123 = charge_word(perm({1, 2, 3}));
    Word cw312 = charge_word(perm({3, 1, 2}));
    std::set<Word> sh = reverse_shuffle_set({cw123, cw312});
    CHECK(sh.count(cocharge_word(perm({6, 3, 4, 1, 2, 5}))));
}

TEST_CASE("shuffle basis at (3,1) and the edge partitions") {
    std::set<Word> expected = {word_of("0012"), word_of("0102"), word_of("0120"),
                               word_of("0011"), word_of("0101"), word_of("1001"),
                               word_of("1010"), word_of("0110"), word_of("0001"),
                               word_of("0010"), word_of("0100"), word_of("0000")};
    CHECK(members_of(cc_shuffle_basis(Partition({3, 1}))) == expected);
    CHECK(members_of(cc_shuffle_basis(Partition({4}))) == members_of(descent_basis(4)));
    CHECK(cc_shuffle_basis(Partition({1, 1, 1})).members ==
          std::vector<Word>{{0, 0, 0}});
}

TEST_CASE("charge basis golden values") {
    std::set<Word> expected = {word_of("0012"), word_of("0102"), word_of("0120"),
                               word_of("0011"), word_of("0101"), word_of("1001"),
                               word_of("1010"), word_of("0110"), word_of("0001"),
                               word_of("0010"), word_of("0100"), word_of("0000")};
    CHECK(members_of(charge_basis(Partition({3, 1}))) == expected);
    CHECK(members_of(charge_basis(Partition({4}))) == members_of(descent_basis(4)));
    CHECK(charge_basis(Partition({1, 1, 1})).members == std::vector<Word>{{0, 0, 0}});
    CHECK(hilbert_series(charge_basis(Partition({3, 1}))) == QPolynomial({1, 3, 5, 3}));
    CHECK(hilbert_series(charge_basis(Partition({1, 1, 1, 1}))) == QPolynomial({1}));
}

TEST_CASE("charge basis is monotone in dominance") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Partition> parts = enumerate_partitions(n);
        for (const Partition& mu : parts)
            for (const Partition& la : parts) {
                if (!dominates(la.transposed(), mu.transposed())) continue;
                // mu^t dominated by la^t: the la-basis sits inside the mu-basis.
                std::set<Word> big = members_of(charge_basis(mu));
                for (const Word& w : charge_basis(la).members) CHECK(big.count(w));
            }
    }
}

TEST_CASE("charge words with exact type land in the shuffle basis") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            std::set<Word> shuffles = members_of(cc_shuffle_basis(mu));
            for (const Permutation& w : enumerate_permutations(n)) {
                if (ctype_of(reverse(w)) == mu.transposed())
                    CHECK(shuffles.count(charge_word(w)));
            }
        }
}

TEST_CASE("descent compare") {
    CHECK(descent_compare(word_of("010"), word_of("001")) > 0);
    CHECK(descent_compare(word_of("010"), word_of("010")) == 0);
    CHECK_THROWS_AS(descent_compare(word_of("01"), word_of("011")), invalid_argument);
    // Total order on D_4: trichotomy and consistency.
    MonomialSet d4 = descent_basis(4);
    for (const Word& a : d4.members)
        for (const Word& b : d4.members) {
            auto ab = descent_compare(a, b), ba = descent_compare(b, a);
            CHECK((ab == 0) == (a == b));
            CHECK((ab < 0) == (ba > 0));
        }
    CHECK(std::is_sorted(d4.members.begin(), d4.members.end(),
                         [](const Word& a, const Word& b) {
                             return descent_compare(a, b) < 0;
                         }));
}

TEST_CASE("sort_gamma") {
    CHECK(sort_gamma(perm({2, 4, 3, 1}), Composition({2, 2})) == perm({2, 4, 1, 3}));
    CHECK(sort_gamma(perm({2, 4, 1, 3}), Composition({2, 2})) == perm({2, 4, 1, 3}));
    CHECK_THROWS_AS(sort_gamma(perm({2, 1}), Composition({2})), invalid_argument);
    for (int n = 1; n <= 5; ++n)
        for (const Composition& ga : enumerate_compositions(n)) {
            std::vector<int> psums = ga.partial_sums_proper();
            for (const Permutation& w : enumerate_permutations(n)) {
                Word cw = charge_word(w);
                bool distinct = true;
                int start = 0;
                for (int part : ga.parts()) {
                    std::set<int> labels;
                    for (int i = start; i < start + part; ++i)
                        if (!labels.insert(cw[i]).second) distinct = false;
                    start += part;
                }
                if (!distinct) {
                    CHECK_THROWS_AS(sort_gamma(w, ga), invalid_argument);
                    continue;
                }
                Permutation s = sort_gamma(w, ga);
                for (int d : descent_set(s))
                    CHECK(std::find(psums.begin(), psums.end(), d) != psums.end());
                // Each value keeps its charge label.
                Word cs = charge_word(s);
                std::vector<int> label_of(n + 1);
                for (int i = 0; i < n; ++i) label_of[w[i]] = cw[i];
                for (int i = 0; i < n; ++i) CHECK(label_of[s[i]] == cs[i]);
                CHECK(dominates(ctype_of(reverse(s)), ctype_of(reverse(w))));
            }
        }
}

TEST_CASE("antisymmetric index set") {
    std::vector<AntisymWitness> wits =
        antisym_index_set(Partition({3, 1}), Composition({2, 2}));
    REQUIRE(wits.size() == 2);
    CHECK(wits[0].w == perm({2, 3, 1, 4}));
    CHECK(wits[1].w == perm({2, 4, 1, 3}));
    CHECK(wits[0].charge == 3);
    CHECK(wits[1].charge == 2);
    CHECK(wits[0].P == Tableau({{1, 3, 4}, {2}}));
    CHECK(wits[0].Q == Tableau({{1, 2, 4}, {3}}));
    // The all-ones composition leaves only the catabolizability condition.
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            Composition ones(std::vector<int>(n, 1));
            CHECK(antisym_index_set(mu, ones).size() ==
                  charge_basis(mu).members.size());
        }
}

TEST_CASE("antisymmetric index sets count Kostka numbers") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& mu : enumerate_partitions(n))
            for (const Composition& ga : enumerate_compositions(n)) {
                // One recording tableau with confined descents per kostka
                // unit, for each qualifying insertion tableau.
                long long expected = 0;
                Partition mut = mu.transposed();
                for (const auto& cls : sn_catalog(n).tableaux)
                    if (dominates(cls.ctype_of_transpose, mut))
                        expected += kostka(cls.shape, ga.parts());
                CHECK(static_cast<long long>(antisym_index_set(mu, ga).size()) ==
                      expected);
            }
}
