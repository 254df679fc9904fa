#include <doctest.h>

#include <algorithm>
#include <random>

#include "gpb/enumerate.hpp"
#include "gpb/partition.hpp"
#include "gpb/permutation.hpp"
#include "gpb/tableau.hpp"

using namespace gpb;

TEST_CASE("partition transpose") {
    CHECK(Partition({3, 1}).transposed() == Partition({2, 1, 1}));
    CHECK(Partition({1, 1, 1}).transposed() == Partition({3}));
    CHECK(Partition({3, 3}).transposed() == Partition({2, 2, 2}));
    for (const Partition& la : enumerate_partitions(9))
        CHECK(la.transposed().transposed() == la);
    CHECK_THROWS_AS(Partition({1, 2}), invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), invalid_argument);
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
}

TEST_CASE("dominance order") {
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
    CHECK(dominates(Partition({2, 2, 2}), Partition({2, 2, 2})));
    CHECK_THROWS_AS(dominates(Partition({2}), Partition({3})), invalid_argument);
}

TEST_CASE("dominance is a partial order compatible with transposition") {
    for (int n = 1; n <= 10; ++n) {
        std::vector<Partition> parts = enumerate_partitions(n);
        for (const Partition& a : parts) {
            CHECK(dominates(a, a));
            for (const Partition& b : parts) {
                bool ab = dominates(a, b), ba = dominates(b, a);
                if (ab && ba) CHECK(a == b);
                CHECK(ab == dominates(b.transposed(), a.transposed()));
                if (n > 8) continue;  // keep the cubic loop small
                for (const Partition& c : parts)
                    if (ab && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("reading word") {
    CHECK(Tableau({{1, 3, 4}, {2, 5}, {6}}).reading_word() == Word{6, 2, 5, 1, 3, 4});
    CHECK(Tableau({{1, 2, 3}}).reading_word() == Word{1, 2, 3});
    CHECK(Tableau({{1, 2, 3, 7}, {4, 5}, {6, 8}}).reading_word() ==
          Word{6, 8, 4, 5, 1, 2, 3, 7});
}

TEST_CASE("tableau transpose") {
    CHECK(Tableau({{1, 2, 3}}).transposed() == Tableau({{1}, {2}, {3}}));
    CHECK(Tableau({{1, 3}, {2}}).transposed() == Tableau({{1, 2}, {3}}));
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Partition> parts = enumerate_partitions(n);
        const Partition& la = parts[rng() % parts.size()];
        std::vector<Tableau> syt = enumerate_syt(la);
        const Tableau& T = syt[rng() % syt.size()];
        CHECK(T.transposed().transposed() == T);
        CHECK(T.transposed().shape() == la.transposed());
    }
}

TEST_CASE("tableau validation and flags") {
    CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), invalid_argument);
    CHECK(Tableau({{1, 2}, {3}}).is_standard());
    CHECK(Tableau({{1, 3}, {2}, {4}}).is_semistandard());
    CHECK_FALSE(Tableau({{2, 1}}).is_semistandard());
    CHECK_FALSE(Tableau({{1, 1}, {1}}).is_semistandard());
    CHECK(Tableau({{1, 1}, {2}}).is_semistandard());
    CHECK_FALSE(Tableau({{1, 1}, {2}}).is_standard());
}

TEST_CASE("jeu de taquin rectification") {
    // The two-piece skew produced by sliding the first row of the worked
    // catabolism example.
    SkewTableau skew({3, 3, 0}, {{2, 5}, {6}, {1, 3, 4}});
    CHECK(jdt_rectify(skew) == Tableau({{1, 2, 4, 5}, {3, 6}}));
    SkewTableau straight({0, 0}, {{1, 3}, {2, 4}});
    CHECK(jdt_rectify(straight) == Tableau({{1, 3}, {2, 4}}));
    CHECK_THROWS_AS(SkewTableau({1, 2}, {{1}, {2}}), invalid_argument);
    CHECK_THROWS_AS(SkewTableau({0}, {{2, 1}}), invalid_argument);
}

TEST_CASE("jdt agrees with insertion on random two-piece skews") {
    std::mt19937 rng(77);
    int done = 0;
    while (done < 500) {
        int n = 2 + static_cast<int>(rng() % 6);
        int a = 1 + static_cast<int>(rng() % (n - 1));
        std::vector<Partition> pa = enumerate_partitions(a);
        std::vector<Partition> pb = enumerate_partitions(n - a);
        const Partition& la = pa[rng() % pa.size()];
        const Partition& lb = pb[rng() % pb.size()];
        std::vector<Tableau> ta = enumerate_syt(la);
        std::vector<Tableau> tb = enumerate_syt(lb);
        const Tableau& lower = ta[rng() % ta.size()];
        Tableau upper_raw = tb[rng() % tb.size()];
        std::vector<std::vector<int>> upper_rows = upper_raw.rows();
        for (auto& row : upper_rows)
            for (int& x : row) x += a;
        int shift = la.part(1);
        std::vector<int> offsets(lower.num_rows(), shift);
        std::vector<std::vector<int>> rows = lower.rows();
        for (const auto& row : upper_rows) {
            offsets.push_back(0);
            rows.push_back(row);
        }
        bool ok = true;
        for (std::size_t r = 0; r + 1 < rows.size(); ++r)
            if (offsets[r] + rows[r].size() < offsets[r + 1] + rows[r + 1].size())
                ok = false;
        if (!ok) continue;
        SkewTableau skew(offsets, rows);
        CHECK(jdt_rectify(skew) == rsk_insertion(skew.reading_word()));
        ++done;
    }
}

TEST_CASE("enumeration counts and orders") {
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_syt(Partition({2, 1})).size() == 2);
    CHECK(enumerate_ssyt(Partition({2, 2}), {2, 1, 1}).size() == 1);
    for (int n = 0; n <= 6; ++n)
        CHECK(enumerate_compositions(n).size() == (n == 0 ? 1u : 1u << (n - 1)));
    std::vector<Partition> parts = enumerate_partitions(6);
    CHECK(std::is_sorted(parts.begin(), parts.end()));
    CHECK(parts.front() == Partition({1, 1, 1, 1, 1, 1}));
    CHECK(parts.back() == Partition({6}));
}

TEST_CASE("standard tableaux match the hook length formula") {
    for (int n = 1; n <= 8; ++n)
        for (const Partition& la : enumerate_partitions(n)) {
            std::vector<Tableau> syt = enumerate_syt(la);
            CHECK(static_cast<long long>(syt.size()) == hook_length_count(la));
            for (const Tableau& T : syt) CHECK(T.is_standard());
        }
}

TEST_CASE("row insertion of the reading word rebuilds the tableau") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& la : enumerate_partitions(n))
            for (const Tableau& T : enumerate_syt(la))
                CHECK(rsk_insertion(T.reading_word()) == T);
}

TEST_CASE("descent set of a standard tableau") {
    CHECK(descent_set_tableau(Tableau({{1, 2, 4}, {3}})) == std::vector<int>{2});
    CHECK(descent_set_tableau(Tableau({{1, 2, 3}})).empty());
    CHECK_THROWS_AS(descent_set_tableau(Tableau({{1, 1}, {2}})), invalid_argument);
    for (int n = 1; n <= 6; ++n)
        for (const Permutation& w : enumerate_permutations(n)) {
            auto [P, Q] = rsk(w);
            CHECK(descent_set_tableau(Q) == descent_set(w));
        }
}
