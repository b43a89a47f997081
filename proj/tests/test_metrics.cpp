#include "oracles.hpp"

#include "perfmatrix/errors.hpp"
#include "perfmatrix/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace perfmatrix;

namespace {

CitationList list_of(std::vector<Count> counts) { return CitationList("x", std::move(counts)); }

} // namespace

TEST(CitationList, RejectsEmptyAndNegative)
{
    EXPECT_THROW(CitationList("e", {}), ValidationError);
    EXPECT_THROW(CitationList("n", {3, -1}), ValidationError);
    EXPECT_NO_THROW(CitationList("z", {0}));
}

TEST(HIndex, Examples)
{
    EXPECT_EQ(h_index(list_of({10, 8, 5, 4, 3})), 4);
    EXPECT_EQ(oracle::brute_force_h({10, 8, 5, 4, 3}), 4);
    EXPECT_EQ(h_index(list_of({0, 0, 0})), 0);
    EXPECT_EQ(h_index(list_of({1})), 1);
}

TEST(HIndex, MatchesBruteForceAndIgnoresOrder)
{
    std::mt19937_64 rng(20131);
    for (int i = 0; i < 500; ++i) {
        auto counts = oracle::random_counts(rng, 200, 300);
        const Count h = h_index(list_of(counts));
        ASSERT_EQ(h, oracle::brute_force_h(counts));
        ASSERT_EQ(h, oracle::min_rank_h(counts));
        std::shuffle(counts.begin(), counts.end(), rng);
        ASSERT_EQ(h_index(list_of(counts)), h);
    }
}

TEST(PartitionFromList, WorkedList)
{
    const Partition p = partition_from_list(list_of({10, 8, 5, 4, 3}));
    EXPECT_EQ(p.Pc, 4);
    EXPECT_EQ(p.Pt, 1);
    EXPECT_EQ(p.Pz, 0);
    EXPECT_EQ(p.Cc, 16);
    EXPECT_EQ(p.Ch, 27);
    EXPECT_EQ(p.Ce, 11);
    EXPECT_EQ(p.Ct, 3);
    EXPECT_EQ(p.C, 30);
    EXPECT_EQ(p.P, 5);
}

TEST(PartitionFromList, AllUncited)
{
    const Partition p = partition_from_list(list_of({0, 0, 0, 0}));
    EXPECT_EQ(p, (Partition{0, 0, 4, 0, 0, 0, 0, 4, 0}));
}

TEST(PartitionFromList, BoundaryTie)
{
    const Partition p = partition_from_list(list_of({1, 1}));
    EXPECT_EQ(p.Pc, 1);
    EXPECT_EQ(p.Pt, 1);
    EXPECT_EQ(p.Pz, 0);
    EXPECT_EQ(p.Cc, 1);
    EXPECT_EQ(p.Ce, 0);
    EXPECT_EQ(p.Ct, 1);
}

TEST(PartitionFromSummary, TableRows)
{
    const Partition ye = partition_from_summary({"Ye FY", 25, 9, 5, 72, 51});
    EXPECT_EQ(ye.Pc, 5);
    EXPECT_EQ(ye.Pt, 11);
    EXPECT_EQ(ye.Cc, 25);
    EXPECT_EQ(ye.Ce, 26);
    EXPECT_EQ(ye.Ct, 21);

    const Partition hh = partition_from_summary({"Univ Hamburg", 1949, 1257, 19, 3185, 1243});
    EXPECT_EQ(hh.Pt, 673);
    EXPECT_EQ(hh.Cc, 361);
    EXPECT_EQ(hh.Ce, 882);
    EXPECT_EQ(hh.Ct, 1942);
    EXPECT_EQ(hh.P, 1949);
    EXPECT_EQ(hh.C, 3185);
}

TEST(PartitionFromSummary, RejectsImpossibleRecords)
{
    try {
        partition_from_summary({"bad", 10, 0, 4, 20, 15});
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("Ch >= h^2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(partition_from_summary({"p0", 0, 0, 0, 0, 0}), ValidationError);
    EXPECT_THROW(partition_from_summary({"h>P", 3, 0, 4, 20, 16}), ValidationError);
    EXPECT_THROW(partition_from_summary({"pz", 10, 8, 3, 20, 9}), ValidationError);
    EXPECT_THROW(partition_from_summary({"ch>c", 10, 0, 3, 9, 10}), ValidationError);
    EXPECT_THROW(partition_from_summary({"h0", 10, 10, 0, 1, 0}), ValidationError);
    EXPECT_THROW(partition_from_summary({"neg", 10, -1, 3, 20, 9}), ValidationError);
}

TEST(Plausibility, Bounds)
{
    EXPECT_TRUE(plausibility_warnings(partition_from_summary({"Ye FY", 25, 9, 5, 72, 51})).empty());
    EXPECT_TRUE(plausibility_warnings(partition_from_summary({"Libr J", 8595, 8561, 3, 47, 15})).empty());

    Partition artificial;
    artificial.Pc = 2;
    artificial.Pt = 5;
    artificial.Ct = 3;
    const auto w = plausibility_warnings(artificial);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_NE(w[0].find("below tail size"), std::string::npos);

    Partition heavy_tail;
    heavy_tail.Pc = 2;
    heavy_tail.Pt = 2;
    heavy_tail.Ct = 5;
    EXPECT_EQ(plausibility_warnings(heavy_tail).size(), 1u);
}

TEST(Partition, IdentitiesAndSummaryRoundTrip)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const CitationList list("r", oracle::random_counts(rng));
        const Partition a = partition_from_list(list);
        ASSERT_EQ(a.P, a.Pc + a.Pt + a.Pz);
        ASSERT_EQ(a.C, a.Cc + a.Ct + a.Ce);
        ASSERT_EQ(a.Cc, a.Pc * a.Pc);
        ASSERT_EQ(a.Ch, a.Cc + a.Ce);
        ASSERT_GE(a.Pt, 0);
        ASSERT_GE(a.Ce, 0);
        ASSERT_GE(a.Ct, 0);
        ASSERT_EQ(partition_from_summary(summarize(list)), a);
        ASSERT_TRUE(plausibility_warnings(a).empty());
    }
}
