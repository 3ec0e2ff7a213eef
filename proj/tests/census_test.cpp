#include <gtest/gtest.h>

#include <pants/census.hpp>
#include <pants/families.hpp>
#include <pants/tables.hpp>

#include <fstream>
#include <unordered_set>

#include "oracles.hpp"

using namespace pants;
using namespace std::chrono_literals;

TEST(Enumerate, LengthTwo) {
    std::vector<std::string> got;
    enumerate_words(2, [&](const ArcWord& w) { got.push_back(w.str()); });
    EXPECT_EQ(got, (std::vector<std::string>{"12", "13", "21", "23", "31", "32", "33"}));
}

TEST(Enumerate, LengthThreeHasTheSimpleArcs) {
    std::set<std::string> got;
    enumerate_words(3, [&](const ArcWord& w) { got.insert(w.str()); });
    EXPECT_TRUE(got.contains("1b1"));
    EXPECT_TRUE(got.contains("2a2"));
    EXPECT_EQ(got.size(), 16u);
}

TEST(Enumerate, CountsMatchTransferMatrix) {
    for (std::size_t wl = 2; wl <= 12; ++wl) EXPECT_EQ(count_words(wl), oracle::word_count(wl)) << wl;
    const std::uint64_t want[] = {7, 16, 48, 144, 432};
    for (std::size_t wl = 2; wl <= 6; ++wl) EXPECT_EQ(oracle::word_count(wl), want[wl - 2]);
}

// Letters compare in ASCII order, which is the order 1 < 2 < 3 < A < B < a < b.
TEST(Enumerate, StrictlyIncreasingAndValid) {
    for (std::size_t wl = 2; wl <= 9; ++wl) {
        std::string prev;
        std::unordered_set<std::string> seen;
        std::uint64_t n = 0;
        enumerate_words(wl, [&](const ArcWord& w) {
            const std::string s = w.str();
            ASSERT_LT(prev, s);
            ASSERT_TRUE(seen.insert(s).second);
            ASSERT_NO_THROW(ArcWord::parse(s));
            ASSERT_EQ(w.word_length(), wl);
            prev = s;
            ++n;
        });
        EXPECT_EQ(n, count_words(wl));
    }
}

TEST(Census, Examples) {
    const auto r4 = census(4);
    EXPECT_EQ(r4.min_i, 1u);
    EXPECT_EQ(r4.max_i, 3u);
    const auto r2 = census(2);
    EXPECT_EQ(r2.min_i, 0u);
    EXPECT_EQ(r2.max_i, 0u);
    EXPECT_EQ(r2.word_count, 7u);
    EXPECT_THROW(census(1), std::invalid_argument);
}

TEST(Census, ReproducesMinMaxTable) {
    std::ifstream in(PANTS_DATA_DIR "/min_max_by_length.csv");
    ASSERT_TRUE(in);
    const auto rows = parse_min_max(in);
    ASSERT_EQ(rows.size(), 15u);
    for (const auto& row : rows) {
        if (row.word_length > 12) continue;
        const auto r = census(row.word_length, {.jobs = 2, .budget = {}});
        EXPECT_EQ(r.min_i, row.min_i) << row.word_length;
        EXPECT_EQ(r.max_i, row.max_i) << row.word_length;
        std::uint64_t total = 0;
        for (const auto& [i, c] : r.histogram) total += c;
        EXPECT_EQ(total, r.word_count);
        EXPECT_EQ(r.word_count, oracle::word_count(row.word_length));
    }
}

TEST(Census, IndependentOfJobs) {
    const auto one = census(9, {.jobs = 1, .budget = {}});
    for (unsigned jobs : {2u, 3u, 8u}) {
        const auto many = census(9, {.jobs = jobs, .budget = {}});
        EXPECT_EQ(many, one);
        EXPECT_EQ(to_json(many).dump(), to_json(one).dump());
        EXPECT_EQ(histogram_csv(many), histogram_csv(one));
    }
}

TEST(Census, Formats) {
    const auto r = census(3);
    EXPECT_EQ(to_json(r).dump(), R"({"word_length":3,"word_count":16,"min_i":0,"max_i":1,"histogram":{"0":4,"1":12}})");
    EXPECT_EQ(histogram_csv(r), "i,count\n0,4\n1,12\n");
}

TEST(Census, BudgetExceeded) {
    EXPECT_THROW(census(16, {.jobs = 1, .budget = 1ms}), BudgetExceeded);
}

TEST(Census, ConjecturedMaximum) {
    EXPECT_EQ(conjectured_max(10), 24u);
    EXPECT_EQ(conjectured_max(5), 5u);
    EXPECT_EQ(conjectured_max(2), 0u);
    for (std::size_t wl = 2; wl <= 11; ++wl) EXPECT_TRUE(check_conjectured_max(wl)) << wl;
    CensusReport wrong = census(6);
    ++wrong.max_i;
    EXPECT_FALSE(check_conjectured_max(wrong));
}

TEST(Families, Examples) {
    EXPECT_EQ(family_text(FamilyId::F1, 2), "1BABA2");
    EXPECT_EQ(family_text(FamilyId::Z2, 0, 1), "1baa2");
    EXPECT_EQ(family_text(FamilyId::Z3, 0), "1bABabaBA3");
    EXPECT_EQ(family_text(FamilyId::Z3c, 0), "1bAbAba3");
    EXPECT_EQ(family_predicted_i(FamilyId::F2, 3), 15u);
    EXPECT_EQ(family_predicted_i(FamilyId::Z1, 0, 1), 6u);
    EXPECT_EQ(family_predicted_i(FamilyId::Z4, 0), 0u);
    EXPECT_THROW(family_text(FamilyId::Z1, 0), BadParams);
    EXPECT_THROW(family_text(FamilyId::Z2, 0, 0), BadParams);
    EXPECT_THROW(family_text(FamilyId::F1, 1, 1), BadParams);
    EXPECT_THROW(family_text(FamilyId::C2, 1), BadParams);
    for (FamilyId f : all_families) EXPECT_EQ(family_from_string(to_string(f)), f);
    EXPECT_FALSE(family_from_string("Z9"));
}

TEST(Families, ClosedFormFamilies) {
    for (std::uint64_t n = 0; n <= 30; ++n)
        for (FamilyId f : {FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4})
            EXPECT_EQ(self_intersection(family_word(f, n)), family_predicted_i(f, n)) << to_string(f) << " n=" << n;
}

TEST(Families, FirstFamilyCountsOneCrossingPerChain) {
    for (std::uint64_t n = 0; n <= 30; ++n) {
        const PairGrid g = trace(family_word(FamilyId::F1, n));
        EXPECT_EQ(g.count(CellState::counted_here), n);
    }
}

TEST(Families, LowLyingFamilies) {
    for (std::uint64_t n = 0; n <= 15; ++n) {
        for (std::uint64_t m = 1; m <= 15; ++m)
            for (FamilyId f : {FamilyId::Z1, FamilyId::Z2})
                EXPECT_EQ(self_intersection(family_word(f, n, m)), family_predicted_i(f, n, m))
                    << to_string(f) << " n=" << n << " m=" << m;
        for (FamilyId f : {FamilyId::Z3c, FamilyId::Z4, FamilyId::Z5})
            EXPECT_EQ(self_intersection(family_word(f, n)), family_predicted_i(f, n)) << to_string(f) << " n=" << n;
    }
    EXPECT_EQ(self_intersection(family_word(FamilyId::C2, 0)), 2u);
    EXPECT_EQ(self_intersection(family_word(FamilyId::C7, 0)), 7u);
}

// The published value (n+4)^2 - 2 for 1bABabaBA(bA)^n3 is two short; the
// chain algorithm and the hyperbolic model both give (n+4)^2.
TEST(Families, PublishedZ3WordIsTwoAbovePublishedValue) {
    for (std::uint64_t n = 0; n <= 15; ++n) {
        const ArcWord w = family_word(FamilyId::Z3, n);
        EXPECT_EQ(self_intersection(w), (n + 4) * (n + 4)) << n;
        EXPECT_EQ(family_predicted_i(FamilyId::Z3, n) + 2, (n + 4) * (n + 4));
    }
    EXPECT_EQ(oracle::self_intersection(family_word(FamilyId::Z3, 0)), 16u);
}
