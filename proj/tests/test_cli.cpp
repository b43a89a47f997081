#include "cli.hpp"

#include "perfmatrix/reference.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using perfmatrix::cli::run;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "perfmatrix");
    std::ostringstream out, err;
    Result r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path()
               / ("perfmatrix_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text)
    {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, ComputeJsonCarriesTrace)
{
    const auto in = write("joi.csv", "name,P,h,Pz,C,Ch\nJ Informetr,105,18,5,1132,574\n");
    const Result r = invoke({"compute", "--input", in, "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc.size(), 1u);
    EXPECT_NEAR(doc[0]["T"].get<double>(), 333.12, 0.005);
    EXPECT_EQ(doc[0]["h"], 18);
    EXPECT_EQ(doc[0]["sign"], "positive");
    EXPECT_TRUE(doc[0].contains("Z3"));
}

TEST_F(CliTest, ComputeCitationsSingleCitedPaper)
{
    const auto in = write("a.csv", "name,citations\nA,1\n");
    const Result r = invoke({"compute", "--input", in, "--format", "citations", "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)[0]["T"].get<double>(), 1.0);
}

TEST_F(CliTest, InvalidRowExitsOneWithLine)
{
    const auto in = write("bad.csv", "name,P,h,Pz,C,Ch\nX,10,4,0,20,15\n");
    const Result r = invoke({"compute", "--input", in});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("ValidationError"), std::string::npos) << r.err;
}

TEST_F(CliTest, SummaryAndCitationsAgree)
{
    const auto s = write("s.csv", "name,P,h,Pz,C,Ch\nA,6,4,1,30,27\n");
    const auto c = write("c.csv", "name,citations\nA,10;0;8;5;4;3\n");
    const Result a = invoke({"compute", "--input", s, "--output", "csv"});
    const Result b = invoke({"compute", "--input", c, "--format", "citations", "--output", "csv"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, OutputIsByteReproducible)
{
    for (const char* fmt : {"table", "csv", "json"}) {
        const Result a = invoke({"rank", "--reference", "--output", fmt});
        const Result b = invoke({"rank", "--reference", "--output", fmt});
        ASSERT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST_F(CliTest, MaskX3)
{
    const Result r = invoke({"compute", "--reference", "--group", "author", "--mask-x3", "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc[0]["X3"].is_null());
    EXPECT_FALSE(doc[0]["T"].is_null());
}

TEST_F(CliTest, RankLisTopTwentyMatchesPublishedOrder)
{
    const Result r = invoke({"rank", "--reference", "--group", "LIS", "--key", "T", "--top", "20",
                             "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc.size(), 20u);
    for (const auto& row : perfmatrix::reference_corpus().expected) {
        if (row.set != "journal-top" || perfmatrix::reference_corpus().entry(row.entity).group != "LIS")
            continue;
        EXPECT_EQ(doc[row.rank - 1]["name"], row.entity);
    }
}

TEST_F(CliTest, RankMultidisciplinaryByH)
{
    const Result r = invoke({"rank", "--reference", "--group", "multidisciplinary", "--key", "h",
                             "--output", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string header, first, second, third;
    std::getline(lines, header);
    std::getline(lines, first);
    std::getline(lines, second);
    std::getline(lines, third);
    EXPECT_TRUE(first.starts_with("1,Nature,"));
    EXPECT_TRUE(second.starts_with("2,Science,"));
    EXPECT_TRUE(third.starts_with("3,PNAS,"));
}

TEST_F(CliTest, RankEmptyAfterFilterIsSuccess)
{
    const auto in = write("neg.csv", "name,citations\nA,0;0\nB,0\n");
    const Result r = invoke({"rank", "--input", in, "--format", "citations", "--positive-only",
                             "--output", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST_F(CliTest, UsageErrors)
{
    EXPECT_EQ(invoke({"rank", "--reference", "--key", "Q"}).code, 2);
    EXPECT_EQ(invoke({"compute"}).code, 2);
    EXPECT_EQ(invoke({"compute", "--reference", "--input", "x.csv"}).code, 2);
    EXPECT_EQ(invoke({"compute", "--input", (dir_ / "missing.csv").string()}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"compute", "--reference", "--output", "xml"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, CorrelateTraceWithItself)
{
    const Result r = invoke({"correlate", "--reference", "--group", "LIS", "--columns", "T,T",
                             "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc.size(), 1u);
    EXPECT_NEAR(doc[0]["pearson_r"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(doc[0]["n"], 83);
}

TEST_F(CliTest, CorrelateMonotoneMetric)
{
    const auto in = write("c.csv", "name,citations\nA,1\nB,2;2\nC,3;3;3\nD,9;9;9;9\n");
    const auto metric = write("if.csv", "name,IF\nA,0.5\nB,0.7\nC,2.5\nD,40\n");
    const Result r = invoke({"correlate", "--input", in, "--format", "citations", "--columns", "T",
                             "--metric-file", metric, "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc[0]["spearman_rho"].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, CorrelateThreePointOracle)
{
    // h = 1, 2, 3 against IF = 3, 2, 4: r = 0.5
    const auto in = write("c.csv", "name,citations\nA,1\nB,2;2\nC,3;3;3\n");
    const auto metric = write("if.csv", "name,IF\nA,3\nB,2\nC,4\n");
    const Result r = invoke({"correlate", "--input", in, "--format", "citations", "--columns", "h",
                             "--metric-file", metric, "--output", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("h,IF,3,0.5"), std::string::npos) << r.out;
}

TEST_F(CliTest, CorrelateJoinAndDegenerateErrors)
{
    const auto in = write("c.csv", "name,citations\nA,1\nB,2;2\nC,3;3;3\n");
    const auto stranger = write("if.csv", "name,IF\nA,3\nZ,2\n");
    EXPECT_EQ(invoke({"correlate", "--input", in, "--format", "citations", "--metric-file", stranger}).code, 1);
    const auto flat = write("flat.csv", "name,IF\nA,1\nB,1\nC,1\n");
    const Result r = invoke({"correlate", "--input", in, "--format", "citations", "--metric-file", flat});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("DegenerateInput"), std::string::npos);
}

TEST_F(CliTest, ValidateReferencePasses)
{
    const Result a = invoke({"validate-reference"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_NE(a.out.find("OK: 337 of 337"), std::string::npos) << a.out;
    EXPECT_EQ(a.out.find("FAIL "), std::string::npos);
    EXPECT_EQ(invoke({"validate-reference"}).out, a.out);
}

TEST_F(CliTest, PlotData)
{
    const auto metric = write("if.csv", "name,IF\nJ Informetr,4.2\nScientometrics,1.9\nJ Doc,1.1\nLibr J,0.3\nGhost,9\n");
    const Result r = invoke({"plot-data", "--reference", "--metric-file", metric});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.starts_with("name,T,metric\nScientometrics,"));
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
    EXPECT_NE(r.err.find("unmatched metric entity 'Ghost'"), std::string::npos);

    const Result pos = invoke({"plot-data", "--reference", "--metric-file", metric, "--positive-only"});
    ASSERT_EQ(pos.code, 0);
    EXPECT_EQ(pos.out.find("Libr J"), std::string::npos);
    EXPECT_NE(pos.out.find("J Informetr"), std::string::npos);

    const auto none = write("none.csv", "name,IF\nGhost,1\n");
    EXPECT_EQ(invoke({"plot-data", "--reference", "--metric-file", none}).code, 1);
    EXPECT_EQ(invoke({"plot-data", "--reference"}).code, 2);
}
