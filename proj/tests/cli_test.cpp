#include <sstream>

#include <gtest/gtest.h>

#include "sexa/cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args, const std::string& input = {})
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int status = sexa::cli::dispatch(args, {&in, out, err, false});
    return {status, out.str(), err.str()};
}

const std::string kCorpus = SEXA_CORPUS_DIR;

TEST(Cli, Arithmetic)
{
    EXPECT_EQ(cli({"mul", "20", "20"}).out, "6:40\n");
    EXPECT_EQ(cli({"mul", "1", "1"}).out, "1\n");
    EXPECT_EQ(cli({"sqrt", "3:3:45"}).out, "1:45\n");
    EXPECT_EQ(cli({"cbrt", "3:22:30"}).out, "1:30\n");
    EXPECT_EQ(cli({"square", "3:15"}).out, "10:33:45\n");
    EXPECT_EQ(cli({"half", "6:30"}).out, "3:15\n");
    EXPECT_EQ(cli({"add", "3:15e-1", "1:45e-1"}).out, "5e0\n");
    EXPECT_EQ(cli({"sub", "10:33:45e-2", "7:30e-1"}).out, "3:3:45e-2\n");
    EXPECT_EQ(cli({"mul", "3:15e0", "3:15e0"}).out, "10:33:45e0\n");
}

TEST(Cli, Reciprocal)
{
    EXPECT_EQ(cli({"recip", "4:26:40", "--trace"}).out, "4:26:40  9\n40       1:30\n13:30\n");
    EXPECT_EQ(cli({"recip", "5:3:24:26:40"}).out, "11:51:54:50:37:30\n");
    EXPECT_EQ(cli({"recip", "4:26:40", "--strategy", "largest", "--trace"}).out,
              "4:26:40  27\n2        30\n13:30\n");
    EXPECT_EQ(cli({"recip", "30e-1"}).out, "2e0\n");
    const auto r = cli({"recip", "7"});
    EXPECT_EQ(r.status, 3);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("without reciprocal"), std::string::npos);
}

TEST(Cli, Tables)
{
    EXPECT_NE(cli({"table", "mult", "9"}).out.find("7 → 1:3\n"), std::string::npos);
    const auto recip = cli({"table", "recip"}).out;
    EXPECT_EQ(std::count(recip.begin(), recip.end(), '\n'), 27);
    const auto metro = cli({"table", "metro", "L", "--from", "1 shu-si", "--to", "2 kush"}).out;
    EXPECT_EQ(std::count(metro.begin(), metro.end(), '\n'), 18);
    EXPECT_NE(metro.find("  1/3 kuš → 1:40\n"), std::string::npos);
    EXPECT_NE(metro.find("  5/6 kuš → 4:10\n"), std::string::npos);
    const auto csv = cli({"table", "metro", "L", "--from", "1 shu-si", "--to", "2 kush", "--format", "csv"}).out;
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "measurement,number");
    EXPECT_NE(csv.find("\n1 1/3 kuš,6:40\n"), std::string::npos);
    const auto squares = cli({"table", "squares"}).out;
    EXPECT_NE(squares.find("30 → 15\n"), std::string::npos);
    EXPECT_NE(cli({"table", "curriculum"}).out.find("2 multiplication table by 50\n"), std::string::npos);
    EXPECT_EQ(cli({"table", "cube-roots"}).status, 0);
    EXPECT_EQ(cli({"table", "square-roots"}).status, 0);
}

TEST(Cli, Convert)
{
    EXPECT_EQ(cli({"convert", "to-spvn", "W", "6 she"}).out, "2\n");
    EXPECT_EQ(cli({"convert", "to-spvn", "S", "2/3 sar 5 gin"}).out, "45\n");
    EXPECT_EQ(cli({"convert", "from-spvn", "Lh", "6", "--window", "\"1 kush\"..\"10 ninda\""}).out, "1/2 ninda\n");
    EXPECT_EQ(cli({"convert", "from-spvn", "S", "45", "--exponent", "-1"}).out, "2/3 sar 5 gin\n");
    EXPECT_EQ(cli({"convert", "readings", "L", "3", "--span", "4"}).out,
              "1/2 kuš 3 šu-si\n3 ninda\n3 uš\n6 danna\n");
    EXPECT_EQ(cli({"convert", "from-spvn", "Lh", "6"}).status, 2);
}

TEST(Cli, RunAndCheck)
{
    const auto r = cli({"run", kCorpus + "/ybc4663-7.tab", "--config", "A"});
    EXPECT_EQ(r.status, 0) << r.err;
    const auto five = r.out.find("= 5 ninda");
    ASSERT_NE(five, std::string::npos);
    EXPECT_NE(r.out.find("= 1 1/2 ninda", five), std::string::npos);
    EXPECT_EQ(cli({"run", kCorpus + "/ybc4663-7.tab"}).status, 2);
    EXPECT_EQ(cli({"run", kCorpus + "/nonexistent.tab"}).status, 2);
    const auto c = cli({"check", kCorpus});
    EXPECT_EQ(c.status, 0) << c.out;
    EXPECT_NE(c.out.find("9 passed, 0 failed"), std::string::npos);
}

TEST(Cli, Repl)
{
    const auto r = cli({"repl"}, "mul 9 7\nx = recip 4:26:40\nmul x 4:26:40\n# comment\n\nsqrt 2\nquit\nmul 2 2\n");
    EXPECT_EQ(r.out, "1:3\n13:30\n1\n");
    EXPECT_NE(r.err.find("NotASquare"), std::string::npos);
}

TEST(Cli, ExitStatusPerErrorKind)
{
    EXPECT_EQ(cli({"mul", "1:75", "2"}).status, 2);
    EXPECT_EQ(cli({"frobnicate"}).status, 2);
    EXPECT_EQ(cli({"mul", "2"}).status, 2);
    EXPECT_EQ(cli({"recip", "7"}).status, 3);
    EXPECT_EQ(cli({"sqrt", "2"}).status, 3);
    EXPECT_EQ(cli({"convert", "from-spvn", "Lh", "6", "--window", "1 ninda..2 ninda"}).status, 3);
    EXPECT_EQ(cli({"convert", "from-spvn", "Lh", "6", "--window", "1 shu-si..2 ninda"}).status, 3);
    EXPECT_EQ(cli({"sub", "5e0", "5e0"}).status, 3);
    EXPECT_EQ(cli({"sub", "5e0", "6e0"}).status, 3);
    EXPECT_EQ(cli({"convert", "to-spvn", "X", "1 ninda"}).status, 2);
    EXPECT_EQ(cli({"--help"}).status, 0);
}

TEST(Cli, DeterministicOutput)
{
    const std::vector<std::string> args{"table", "metro", "S", "--from", "1 she", "--to", "1 bur"};
    const auto first = cli(args).out;
    EXPECT_FALSE(first.empty());
    EXPECT_EQ(cli(args).out, first);
}

}  // namespace
