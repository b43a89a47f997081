#include "perfmatrix/format.hpp"

#include <gtest/gtest.h>

#include <charconv>

using namespace perfmatrix;

TEST(Format, Significant)
{
    EXPECT_EQ(format_significant(333.1234, 4), "333.1");
    EXPECT_EQ(format_significant(0.093531, 4), "0.09353");
    EXPECT_EQ(format_significant(176719.3, 4), "176719");
    EXPECT_EQ(format_significant(-2044.109, 4), "-2044");
    EXPECT_EQ(format_significant(9.99961, 4), "10.00");
    EXPECT_EQ(format_significant(0.0, 4), "0");
    EXPECT_EQ(format_significant(-0.00001, 2), "-0.000010");
    EXPECT_EQ(format_significant(13.273888, 6), "13.2739");
}

TEST(Format, FullRoundTrips)
{
    for (double v : {13.273888888888889, -2044.1093008373862, 0.1, 1e-300, 176719.0}) {
        const std::string s = format_full(v);
        double back = 0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        EXPECT_EQ(back, v) << s;
        EXPECT_EQ(s.find(','), std::string::npos);
    }
    EXPECT_EQ(format_full(-0.0), "0");
}
