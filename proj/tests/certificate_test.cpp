#include <gpramsey/certificate.hpp>
#include <gpramsey/error.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace gpramsey;

TEST(WitnessFormat, Layout)
{
    WitnessFile w{Family::semi(1), 3, Coloring::from_digits(2, "00110011")};
    EXPECT_EQ(format_witness(w), "{\"family\":\"semi\",\"param\":1,\"r\":2,\"k\":3,\"n_points\":8}\n00110011\n");
}

TEST(WitnessFormat, RoundTrip)
{
    for (const auto & w : {WitnessFile{Family::quasi(2), 4, Coloring::from_digits(3, "0120210")},
             WitnessFile{Family::semi(5), 2, Coloring::from_digits(36, "0az9")},
             WitnessFile{Family::quasi(0), 3, Coloring::from_digits(2, "")}}) {
        auto back = parse_witness(format_witness(w));
        EXPECT_EQ(back.family, w.family);
        EXPECT_EQ(back.k, w.k);
        EXPECT_EQ(back.coloring, w.coloring);
    }
}

TEST(WitnessFormat, ToleratesCrlfAndMissingNewline)
{
    auto w = parse_witness("{\"family\":\"quasi\",\"param\":1,\"r\":2,\"k\":3,\"n_points\":3}\r\n010\r\n");
    EXPECT_EQ(w.coloring.to_digits(), "010");
    EXPECT_EQ(parse_witness("{\"family\":\"semi\",\"param\":1,\"r\":2,\"k\":3,\"n_points\":2}\n01").coloring.n_points(), 2);
}

TEST(WitnessFormat, Rejects)
{
    const char * bad[] = {
        "",
        "not json\n0101\n",
        "[1,2]\n01\n",
        "{\"param\":1,\"r\":2,\"k\":3,\"n_points\":2}\n01\n",
        "{\"family\":\"arith\",\"param\":1,\"r\":2,\"k\":3,\"n_points\":2}\n01\n",
        "{\"family\":\"semi\",\"param\":0,\"r\":2,\"k\":3,\"n_points\":2}\n01\n",
        "{\"family\":\"semi\",\"param\":1,\"r\":2,\"k\":1,\"n_points\":2}\n01\n",
        "{\"family\":\"semi\",\"param\":1,\"r\":2,\"k\":3,\"n_points\":3}\n01\n",
        "{\"family\":\"semi\",\"param\":1,\"r\":2,\"k\":3,\"n_points\":2}\n02\n",
        "{\"family\":\"semi\",\"param\":1,\"r\":\"2\",\"k\":3,\"n_points\":2}\n01\n",
        "{\"family\":\"semi\",\"param\":1,\"r\":2,\"k\":3,\"n_points\":2}\n01\nextra\n",
    };
    for (const char * text : bad)
        EXPECT_THROW(parse_witness(text), ParseError) << text;
}

TEST(WitnessFile, DiskRoundTrip)
{
    auto path = std::filesystem::temp_directory_path() / "gpramsey_certificate_test.txt";
    WitnessFile w{Family::semi(2), 3, Coloring::from_digits(2, "00110011")};
    write_witness(path, w);
    auto back = read_witness(path);
    EXPECT_EQ(back.coloring, w.coloring);
    EXPECT_EQ(back.family, w.family);
    std::filesystem::remove(path);
    EXPECT_THROW(read_witness(path), Error);
}
