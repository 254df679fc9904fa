#include <doctest.h>

#include <map>
#include <set>

#include "gpb/charge.hpp"
#include "gpb/enumerate.hpp"

using namespace gpb;

namespace {
Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }
Word word_of(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}
}

TEST_CASE("cocharge and charge words") {
    CHECK(cocharge_word(perm({3, 5, 1, 6, 2, 4, 7})) == word_of("1202012"));
    CHECK(cocharge(perm({3, 5, 1, 6, 2, 4, 7})) == 8);
    CHECK(cocharge_word(Permutation::identity(6)) == word_of("000000"));
    CHECK(cocharge_word(perm({6, 3, 4, 1, 2, 5})) == word_of("211001"));
    CHECK(charge_word(perm({7, 4, 2, 6, 1, 5, 3})) == word_of("2102021"));
    CHECK(charge_word(perm({5, 4, 3, 2, 1})) == word_of("00000"));
    CHECK(charge_word(perm({2, 4, 1, 3})) == word_of("0101"));
}

TEST_CASE("charge plus cocharge is n choose 2") {
    for (int n = 1; n <= 7; ++n)
        for (const Permutation& w : enumerate_permutations(n))
            CHECK(charge(w) + cocharge(w) == n * (n - 1) / 2);
}

TEST_CASE("charge via the major index of the reversed inverse") {
    for (const Permutation& w : enumerate_permutations(6))
        CHECK(charge(w) == maj(reverse(inverse(w))));
}

TEST_CASE("cocharge word classification") {
    CHECK(is_cocharge_word(word_of("1202012")));
    CHECK_FALSE(is_cocharge_word(word_of("02")));
    CHECK_FALSE(is_cocharge_word(word_of("1")));
    CHECK(is_cocharge_word(word_of("0")));
    CHECK_FALSE(is_cocharge_word(Word{}));
    CHECK_THROWS_AS(is_cocharge_word(Word{-1, 0}), invalid_argument);
}

TEST_CASE("canonical inverse of a cocharge word") {
    CHECK(cocharge_word_inverse(word_of("000")) == perm({1, 2, 3}));
    CHECK(cocharge_word_inverse(word_of("10")) == perm({2, 1}));
    CHECK_THROWS_AS(cocharge_word_inverse(word_of("02")), invalid_argument);
    for (const Permutation& w : enumerate_permutations(6)) {
        Word z = cocharge_word(w);
        CHECK(cocharge_word(cocharge_word_inverse(z)) == z);
    }
}

TEST_CASE("descent words") {
    CHECK(descent_word(perm({2, 1})) == Word{0, 1});
    CHECK(descent_word(Permutation::identity(4)) == Word{0, 0, 0, 0});
    std::set<Word> d3;
    for (const Permutation& w : enumerate_permutations(3)) d3.insert(descent_word(w));
    std::set<Word> expected = {word_of("012"), word_of("011"), word_of("101"),
                               word_of("001"), word_of("010"), word_of("000")};
    CHECK(d3 == expected);
    for (const Permutation& w : enumerate_permutations(6)) {
        Word e = descent_word(w);
        int deg = 0;
        for (int x : e) deg += x;
        CHECK(deg == maj(w));
    }
}

TEST_CASE("descent words are charge words via rev of the inverse") {
    for (int n = 1; n <= 7; ++n) {
        std::set<Word> descents, charges;
        for (const Permutation& w : enumerate_permutations(n)) {
            descents.insert(descent_word(w));
            charges.insert(charge_word(w));
            // x^{cw(sigma)} = g_w with w = rev(sigma^{-1}).
            CHECK(charge_word(w) == descent_word(reverse(inverse(w))));
        }
        CHECK(descents == charges);
    }
}

TEST_CASE("charge is constant on fibres of the insertion tableau") {
    for (int n = 1; n <= 6; ++n) {
        std::map<Tableau, int> value;
        for (const Permutation& w : enumerate_permutations(n)) {
            Tableau P = rsk(w).first;
            auto it = value.find(P);
            if (it == value.end())
                value[P] = charge(w);
            else
                CHECK(it->second == charge(w));
        }
    }
}

TEST_CASE("charge of a standard tableau is the cocharge of its transpose") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& la : enumerate_partitions(n))
            for (const Tableau& T : enumerate_syt(la))
                CHECK(charge(Permutation(T.reading_word())) ==
                      cocharge(Permutation(T.transposed().reading_word())));
}

TEST_CASE("charge of content words") {
    CHECK(charge_on_content_word(word_of("211")) == 0);
    CHECK(cocharge_on_content_word(word_of("211")) == 1);
    CHECK(cocharge_on_content_word(word_of("112")) == 0);
    CHECK(cocharge_on_content_word(word_of("1112233")) == 0);
    CHECK_THROWS_AS(charge_on_content_word(word_of("122")), invalid_argument);
    CHECK_THROWS_AS(charge_on_content_word(word_of("2")), invalid_argument);
    for (const Permutation& w : enumerate_permutations(5))
        CHECK(charge_on_content_word(w.values()) == charge(w));
}

TEST_CASE("inserting letters preserves the classification") {
    // One instance of each insertion case; the suites sweep all positions.
    Word z = cocharge_word(perm({3, 5, 1, 6, 2, 4, 7}));  // 1202012
    Word dup = z;
    dup.insert(dup.begin() + 3, 2);  // duplicate an existing positive letter
    CHECK(is_cocharge_word(dup));
    Word above = z;  // rightmost maximum is the final 2; insert a 3 left of it
    above.insert(above.begin() + 2, 3);
    CHECK(is_cocharge_word(above));
}
