#include <gpramsey/spectral.hpp>
#include <gpramsey/table.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace gpramsey;

TEST(FormatBeta, TruncatesToFiveDecimals)
{
    EXPECT_EQ(format_beta(1.0823922002923940), "1.08239");
    EXPECT_EQ(format_beta(1.2851189717883966), "1.28511");
    EXPECT_EQ(format_beta(1.0038456940683715), "1.00384");
    EXPECT_EQ(format_beta(2.5), "2.50000");
    EXPECT_EQ(format_beta(0.97), "<1");
    EXPECT_EQ(format_beta(1.0), "<1");
}

TEST(BetaTable, CsvGrid)
{
    std::ostringstream csv;
    write_table_csv(csv, beta_table(4, 6));
    EXPECT_EQ(csv.str(),
        "r/n,1,2,3,4,5,6\n"
        "2,1.08239,<1,<1,<1,<1,<1\n"
        "3,1.28511,1.11226,1.02236,<1,<1,<1\n"
        "4,1.46410,1.24686,1.12770,1.05338,1.00384,<1\n");
}

TEST(BetaTable, WorkerCountDoesNotMatter)
{
    auto one = beta_table(6, 8, 1);
    auto many = beta_table(6, 8, 5);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].colors, many[i].colors);
        EXPECT_EQ(one[i].diameter, many[i].diameter);
        EXPECT_EQ(one[i].beta, many[i].beta);
        EXPECT_EQ(one[i].lambda_max, many[i].lambda_max);
    }
}

TEST(BetaTable, JsonRecordsAtFullPrecision)
{
    auto cells = beta_table(3, 2);
    auto j = table_to_json(cells);
    ASSERT_EQ(j.size(), 4u);
    EXPECT_EQ(j[0]["r"], 2);
    EXPECT_EQ(j[0]["n"], 1);
    EXPECT_EQ(j[0]["alpha"].get<double>(), 0.5);
    EXPECT_EQ(j[0]["beta"].get<double>(), beta_quasi(2, 1).base);
    EXPECT_EQ(j[0]["lambda_max"].get<double>(), *beta_quasi(2, 1).lambda_max);
    EXPECT_TRUE(j[0]["useful"].get<bool>());
    EXPECT_FALSE(j[1]["useful"].get<bool>());
    EXPECT_LT(j[1]["beta"].get<double>(), 1.0);
    // round trip through text keeps the double exactly
    auto reparsed = nlohmann::json::parse(j.dump());
    EXPECT_EQ(reparsed[3]["beta"].get<double>(), cells[3].beta);
}
