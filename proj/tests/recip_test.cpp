#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sexa/recip.hpp"
#include "sexa/tables.hpp"
#include "sexa/textio.hpp"

namespace {

using sexa::FactorStrategy;
using sexa::FloatingNumber;

FloatingNumber N(const char* s)
{
    return sexa::parse_spvn(s);
}

std::vector<std::string> texts(const std::vector<FloatingNumber>& v)
{
    std::vector<std::string> out;
    for (const auto& n : v) out.push_back(sexa::format_spvn(n));
    return out;
}

const sexa::ElementaryTable& table()
{
    return sexa::standard_table();
}

TEST(Regular, FiveSmoothOnly)
{
    EXPECT_TRUE(sexa::is_regular(N("4:26:40")));
    EXPECT_TRUE(sexa::is_regular(N("1")));
    EXPECT_FALSE(sexa::is_regular(N("7")));
    EXPECT_FALSE(sexa::is_regular(N("1:10")));
}

TEST(WedgeSuffix, LeadingDigitMayBeSmaller)
{
    EXPECT_TRUE(sexa::is_wedge_suffix(N("6:40"), N("4:26:40")));
    EXPECT_TRUE(sexa::is_wedge_suffix(N("40"), N("4:26:40")));
    EXPECT_TRUE(sexa::is_wedge_suffix(N("30"), N("4:26:40")));
    EXPECT_FALSE(sexa::is_wedge_suffix(N("50"), N("4:26:40")));
    EXPECT_FALSE(sexa::is_wedge_suffix(N("44:26:40"), N("4:26:40")));
}

TEST(TrailingCandidates, DivisorsByDescendingValue)
{
    const auto c = sexa::trailing_candidates(N("4:26:40"), table());
    ASSERT_FALSE(c.empty());
    EXPECT_EQ(c.front().value, N("2:13:20"));
    EXPECT_FALSE(c.front().wedge_suffix);
    const auto wedge = std::find_if(c.begin(), c.end(), [](const auto& t) { return t.wedge_suffix; });
    ASSERT_NE(wedge, c.end());
    EXPECT_EQ(wedge->value, N("6:40"));
    for (std::size_t i = 1; i < c.size(); ++i) {
        EXPECT_GT(sexa::to_integer(c[i - 1].value), sexa::to_integer(c[i].value));
    }
    for (const auto& t : c) EXPECT_EQ(sexa::to_integer(N("4:26:40")) % sexa::to_integer(t.value), 0);
}

TEST(Reciprocal, FourTwentySixForty)
{
    const auto r = sexa::reciprocal(N("4:26:40"), table());
    EXPECT_EQ(r.reciprocal, N("13:30"));
    EXPECT_EQ(texts(r.factorization.factors), (std::vector<std::string>{"6:40", "40"}));
    EXPECT_EQ(texts(r.factorization.reciprocals), (std::vector<std::string>{"9", "1:30"}));
    EXPECT_EQ(sexa::render_factorization(r.factorization), "4:26:40  9\n40       1:30\n13:30\n");
}

TEST(Reciprocal, IteratedExtraction)
{
    const auto r = sexa::reciprocal(N("5:3:24:26:40"), table());
    EXPECT_EQ(r.reciprocal, N("11:51:54:50:37:30"));
    EXPECT_EQ(texts(r.factorization.factors), (std::vector<std::string>{"6:40", "40", "16", "16", "16"}));
    EXPECT_EQ(texts(r.factorization.quotients),
              (std::vector<std::string>{"5:3:24:26:40", "45:30:40", "1:8:16", "4:16", "16"}));
    EXPECT_EQ(texts(r.factorization.products),
              (std::vector<std::string>{"14:3:45", "52:44:3:45", "1:19:6:5:37:30", "11:51:54:50:37:30"}));
}

TEST(Reciprocal, TableEntriesNeedNoFactoring)
{
    const auto r = sexa::reciprocal(N("1:21"), table());
    EXPECT_EQ(r.reciprocal, N("44:26:40"));
    EXPECT_EQ(r.factorization.factors.size(), 1U);
    EXPECT_EQ(sexa::reciprocal(N("6:40"), table()).reciprocal, N("9"));
    EXPECT_EQ(sexa::reciprocal(N("1"), table()).reciprocal, N("1"));
}

TEST(Reciprocal, IrregularHasNone)
{
    try {
        sexa::reciprocal(N("7"), table());
        FAIL();
    } catch (const sexa::Error& e) {
        EXPECT_EQ(e.kind(), sexa::ErrorKind::Irregular);
        EXPECT_NE(std::string(e.what()).find("without reciprocal"), std::string::npos);
    }
}

TEST(Reciprocal, LargestDivisorStrategyFactorsDifferently)
{
    const auto r = sexa::reciprocal(N("4:26:40"), table(), FactorStrategy::AnyDivisorLargest);
    EXPECT_EQ(r.reciprocal, N("13:30"));
    EXPECT_EQ(texts(r.factorization.factors), (std::vector<std::string>{"2:13:20", "2"}));
}

TEST(Reciprocal, StrategiesAgreeOnTheResult)
{
    for (const auto& v : oracle::regulars_up_to(oracle::Int(216000))) {
        const auto n = sexa::from_integer(v);
        const auto a = sexa::reciprocal(n, table(), FactorStrategy::WedgeSuffixLongest);
        const auto b = sexa::reciprocal(n, table(), FactorStrategy::AnyDivisorLargest);
        EXPECT_EQ(a.reciprocal, b.reciprocal);
        EXPECT_EQ(sexa::format_spvn(a.reciprocal), oracle::reciprocal(v));
    }
}

TEST(ReciprocalLoop, ReturnsToStart)
{
    const auto loop = sexa::reciprocal_loop(N("5:3:24:26:40"), table());
    EXPECT_EQ(loop.forward.result(), N("11:51:54:50:37:30"));
    EXPECT_EQ(loop.back.result(), N("5:3:24:26:40"));
}

TEST(Roots, SquareAndCube)
{
    EXPECT_EQ(sexa::sqrt(N("3:3:45")), N("1:45"));
    EXPECT_EQ(sexa::sqrt(N("10:33:45")), N("3:15"));
    EXPECT_EQ(sexa::sqrt(N("15")), N("30"));
    EXPECT_EQ(sexa::cbrt(N("3:22:30")), N("1:30"));
    EXPECT_EQ(sexa::cbrt(N("8")), N("2"));
    EXPECT_THROW(sexa::sqrt(N("2")), sexa::Error);
    EXPECT_THROW(sexa::cbrt(N("12:30")), sexa::Error);
    EXPECT_THROW(sexa::cbrt(N("4:5:7:30")), sexa::Error);
}

TEST(Divisible, TrailingFactorsDivide)
{
    EXPECT_TRUE(sexa::divisible(N("4:26:40"), N("6:40"), table()));
    EXPECT_TRUE(sexa::divisible(N("2"), N("2"), table()));
    EXPECT_FALSE(sexa::divisible(N("2"), N("5"), table()));
}

TEST(Divisible, IntegerDivisibilityImpliesIt)
{
    const auto values = oracle::regulars_up_to(oracle::Int(12960000));
    for (const auto& t : table().values()) {
        if (t.is_one()) continue;
        const auto tv = sexa::to_integer(t);
        for (std::size_t i = 0; i < values.size(); i += 3) {
            const auto& v = values[i];
            if (v % 60 == 0 || v % tv != 0 || v == tv) continue;
            EXPECT_TRUE(sexa::divisible(sexa::from_integer(v), t, table())) << v << " / " << t;
        }
    }
}

TEST(ElementaryTable, RejectsBadPairs)
{
    EXPECT_THROW(sexa::ElementaryTable({{N("2"), N("20")}}), sexa::Error);
}

}  // namespace
