#include <doctest.h>

#include "gpb/chains.hpp"
#include "gpb/enumerate.hpp"

using namespace gpb;

namespace {
Word word_of(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}
}

TEST_CASE("pair filling validation") {
    CHECK_THROWS_AS(PairFilling({{{1, 1}}, {{1, 2}, {1, 3}}}), invalid_argument);
    CHECK_THROWS_AS(PairFilling({{{1, 2}, {1, 1}}}), invalid_argument);
    CHECK_THROWS_AS(PairFilling({{{2, 1}}, {{1, 2}}}), invalid_argument);
    PairFilling ok({{{1, 1}, {1, 3}}, {{1, 2}}});
    CHECK(ok.shape() == Partition({2, 1}));
}

TEST_CASE("modified row insertion, first worked example") {
    PairFilling F({{{1, 1}, {2, 5}, {2, 7}, {3, 8}, {5, 2}},
                   {{2, 4}, {3, 2}, {3, 3}, {4, 1}}});
    auto [G, popped] = modified_row_insert(F, 2, PairEntry{2, 6});
    REQUIRE(popped.has_value());
    CHECK(*popped == PairEntry{3, 3});
    CHECK(G == PairFilling({{{1, 1}, {2, 5}, {2, 7}, {3, 8}, {5, 2}},
                            {{2, 4}, {2, 6}, {3, 2}, {4, 1}}}));
}

TEST_CASE("modified row insertion, second worked example") {
    PairFilling F({{{1, 1}, {2, 5}, {2, 7}}, {{2, 4}, {3, 2}}});
    auto [G, popped] = modified_row_insert(F, 2, PairEntry{2, 6});
    CHECK_FALSE(popped.has_value());
    CHECK(G == PairFilling({{{1, 1}, {2, 5}, {2, 7}}, {{2, 4}, {2, 6}, {3, 2}}}));
}

TEST_CASE("modified row insertion edge rules") {
    // An entry beyond the whole row pops immediately when the rows have
    // equal length, and the popped entry always dominates the inserted one.
    PairFilling F({{{1, 1}, {1, 2}}, {{2, 3}, {2, 4}}});
    auto [G, popped] = modified_row_insert(F, 2, PairEntry{3, 5});
    REQUIRE(popped.has_value());
    CHECK(*popped == PairEntry{3, 5});
    CHECK(G == F);
    CHECK_THROWS_AS(modified_row_insert(F, 1, PairEntry{1, 9}), invalid_argument);
    CHECK_THROWS_AS(modified_row_insert(F, 3, PairEntry{1, 9}), invalid_argument);
    PairFilling S({{{1, 1}, {1, 2}, {1, 3}}, {{2, 3}, {2, 4}}});
    auto [G2, popped2] = modified_row_insert(S, 2, PairEntry{3, 5});
    CHECK_FALSE(popped2.has_value());
    CHECK(G2.shape() == Partition({3, 3}));
}

TEST_CASE("popped entries dominate the inserted entry") {
    PairFilling F({{{1, 1}, {2, 5}, {2, 7}, {3, 8}, {5, 2}},
                   {{2, 4}, {3, 2}, {3, 3}, {4, 1}}});
    for (int pass = 1; pass <= 5; ++pass)
        for (int idx = 9; idx <= 12; ++idx) {
            PairEntry t{pass, idx};
            auto [G, popped] = modified_row_insert(F, 2, t);
            if (popped) CHECK_FALSE(*popped < t);
        }
}

TEST_CASE("seed filling for the worked shuffle") {
    Word z = word_of("1200112010");
    PairFilling seed = build_seed_filling(z, {{1, 2, 3, 4, 6, 7}, {5, 8, 9, 10}});
    PairFilling expected({{{1, 1}, {1, 3}, {1, 7}, {1, 8}},
                          {{1, 2}, {1, 6}, {1, 10}},
                          {{2, 5}},
                          {{2, 9}},
                          {{3, 4}}});
    CHECK(seed == expected);
    CHECK(seed.shape() == Partition({4, 3, 1, 1, 1}));
    CHECK(seed.shape() ==
          partwise_sum(blasiak_ctype(word_of("120012")).ctype,
                       blasiak_ctype(word_of("1010")).ctype));
}

TEST_CASE("seed filling errors") {
    CHECK_THROWS_AS(build_seed_filling(word_of("10"), {{1}, {2}}), invalid_argument);
    CHECK_THROWS_AS(build_seed_filling(word_of("10"), {{1, 2}, {2}}), invalid_argument);
    CHECK_THROWS_AS(build_seed_filling(word_of("10"), {{1}}), invalid_argument);
}

TEST_CASE("single-block seed is the plain insertion recording") {
    Word z = word_of("211001");
    PairFilling seed = build_seed_filling(z, {{1, 2, 3, 4, 5, 6}});
    BlasiakResult res = blasiak_ctype(z);
    CHECK(seed.shape() == res.ctype);
    int n = static_cast<int>(z.size());
    for (int r = 0; r < res.recording.num_rows(); ++r) {
        std::vector<PairEntry> expected;
        for (int i : res.recording.rows()[r])
            expected.push_back(PairEntry{res.pass_counts[i - 1], n - i + 1});
        std::sort(expected.begin(), expected.end());
        CHECK(seed.rows()[r] == expected);
    }
}

TEST_CASE("three-block seeds add shapes partwise") {
    Word z = word_of("010100");
    std::vector<std::vector<int>> blocks = {{1}, {2, 3, 4}, {5, 6}};
    PairFilling seed = build_seed_filling(z, blocks);
    Partition expected;
    for (const auto& block : blocks) {
        Word sub;
        for (int pos : block) sub.push_back(z[pos - 1]);
        expected = partwise_sum(expected, blasiak_ctype(sub).ctype);
    }
    CHECK(seed.shape() == expected);
    ChainsResult res = chains_run(z, seed, true);
    CHECK(res.ctype == blasiak_ctype(z).ctype);
    CHECK(dominates(res.ctype, seed.shape()));
}

TEST_CASE("chains run reproduces the worked trace") {
    Word z = word_of("1200112010");
    PairFilling seed = build_seed_filling(z, {{1, 2, 3, 4, 6, 7}, {5, 8, 9, 10}});
    std::vector<ChainsStep> steps;
    ChainsResult res = chains_run(z, seed, true, &steps);
    CHECK(res.ctype == Partition({4, 3, 3}));
    CHECK(res.filling == PairFilling({{{1, 1}, {1, 3}, {1, 7}, {1, 8}},
                                      {{1, 2}, {1, 5}, {1, 10}},
                                      {{1, 4}, {1, 9}, {2, 6}}}));
    for (std::size_t i = 0; i + 1 < res.shape_trace.size(); ++i)
        CHECK(dominates(res.shape_trace[i + 1], res.shape_trace[i]));
    CHECK(res.shape_trace.front() == Partition({4, 3, 1, 1, 1}));
    CHECK(res.shape_trace.back() == Partition({4, 3, 3}));
    // Fourth box step: (3,4) is deleted and (1,4) enters the third row.
    REQUIRE(steps.size() == 10);
    CHECK(steps[3].relocated);
    CHECK(steps[3].row == 3);
    CHECK(steps[3].shape == Partition({4, 3, 2, 1}));
    std::vector<std::vector<PairEntry>> after4 = {{{1, 1}, {1, 3}, {1, 7}, {1, 8}},
                                                  {{1, 2}, {1, 6}, {1, 10}},
                                                  {{1, 4}, {2, 5}},
                                                  {{2, 9}}};
    CHECK(steps[3].rows == after4);
    // Fifth box step: (2,5) is deleted, (1,5) bumps (1,6) which refills as (2,6).
    CHECK(steps[4].relocated);
    std::vector<std::vector<PairEntry>> after5 = {{{1, 1}, {1, 3}, {1, 7}, {1, 8}},
                                                  {{1, 2}, {1, 5}, {1, 10}},
                                                  {{1, 4}, {2, 6}},
                                                  {{2, 9}}};
    CHECK(steps[4].rows == after5);
    // The worked trace keeps full row and column order at every step.
    for (const ChainsStep& s : steps) {
        for (std::size_t r = 0; r < s.rows.size(); ++r)
            for (std::size_t c = 0; c < s.rows[r].size(); ++c) {
                if (c + 1 < s.rows[r].size()) CHECK(s.rows[r][c] < s.rows[r][c + 1]);
                if (r + 1 < s.rows.size() && c < s.rows[r + 1].size())
                    CHECK(s.rows[r][c] < s.rows[r + 1][c]);
            }
    }
}

TEST_CASE("chains run with the plain recording never relocates") {
    Word z = word_of("211001");
    PairFilling seed = build_seed_filling(z, {{1, 2, 3, 4, 5, 6}});
    std::vector<ChainsStep> steps;
    ChainsResult res = chains_run(z, seed, true, &steps);
    CHECK(res.ctype == Partition({2, 2, 2}));
    for (const ChainsStep& s : steps) CHECK_FALSE(s.relocated);
    for (const Partition& p : res.shape_trace) CHECK(p == Partition({2, 2, 2}));
}

TEST_CASE("chains run input validation") {
    CHECK_THROWS_AS(chains_run(word_of("02"),
                               PairFilling({{{1, 2}, {2, 1}}})),
                    invalid_argument);
    // Condition (4) failure: pass + letter != row.
    Word z = word_of("10");
    try {
        chains_run(z, PairFilling({{{1, 1}, {1, 2}}}));
        CHECK(false);
    } catch (const invalid_argument& e) {
        CHECK(std::string(e.what()).find("condition (4)") != std::string::npos);
    }
    // Condition (1) failure: an index appears twice.
    try {
        chains_run(z, PairFilling({{{1, 1}}, {{2, 1}}}));
        CHECK(false);
    } catch (const invalid_argument& e) {
        CHECK(std::string(e.what()).find("condition (1)") != std::string::npos);
    }
}
