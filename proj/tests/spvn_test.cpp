#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sexa/spvn.hpp"

namespace {

using sexa::Digit;
using sexa::ErrorKind;
using sexa::FloatingNumber;
using sexa::normalize;
using sexa::SimplerOrdering;

template <typename F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const sexa::Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Io;
}

TEST(Digit, RejectsSixtyAndAbove)
{
    EXPECT_EQ(Digit(59).value(), 59U);
    EXPECT_EQ(kind_of([] { Digit(60); }), ErrorKind::DigitOutOfRange);
}

TEST(Digit, SplitsIntoTensAndUnits)
{
    EXPECT_EQ(Digit(44).tens(), 4U);
    EXPECT_EQ(Digit(44).units(), 4U);
}

TEST(Normalize, StripsZerosAtBothEnds)
{
    EXPECT_EQ(normalize({0, 3, 0}), normalize({3}));
    EXPECT_EQ(normalize({12, 0, 0}), normalize({12}));
    EXPECT_EQ(sexa::format_spvn(normalize({3, 3, 45})), "3:3:45");
    EXPECT_EQ(sexa::format_spvn(normalize({3, 0, 45})), "3:0:45");
}

TEST(Normalize, RejectsAllZeroAndEmpty)
{
    EXPECT_EQ(kind_of([] { normalize({0, 0}); }), ErrorKind::AllZero);
    EXPECT_EQ(kind_of([] { normalize(std::span<const Digit>{}); }), ErrorKind::EmptyInput);
}

TEST(Canonical, LastDigitInUnitsPlace)
{
    EXPECT_EQ(sexa::to_integer(normalize({4, 26, 40})), 16000);
    EXPECT_EQ(sexa::from_integer(180), normalize({3}));
    EXPECT_EQ(sexa::from_integer(1), FloatingNumber{});
    EXPECT_EQ(kind_of([] { sexa::from_integer(0); }), ErrorKind::NonPositive);
}

TEST(Mul, MatchesIntegerOracle)
{
    EXPECT_EQ(sexa::mul(normalize({20}), normalize({20})), normalize({6, 40}));
    EXPECT_EQ(sexa::mul(normalize({9}), normalize({7})), normalize({1, 3}));
    EXPECT_EQ(sexa::mul(normalize({9}), normalize({20})), normalize({3}));
    EXPECT_EQ(sexa::mul(normalize({1}), normalize({1})), normalize({1}));

    auto rng = oracle::rng();
    std::uniform_int_distribution<unsigned long long> dist(1, 1ULL << 40);
    for (int i = 0; i < 2000; ++i) {
        const oracle::Int a = dist(rng);
        const oracle::Int b = dist(rng);
        const auto got = sexa::mul(sexa::from_integer(a), sexa::from_integer(b));
        EXPECT_EQ(sexa::format_spvn(got), oracle::floating(a * b));
    }
}

TEST(Mul, IsCommutativeAndAssociative)
{
    auto rng = oracle::rng();
    std::uniform_int_distribution<unsigned> dist(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        const auto a = sexa::from_integer(dist(rng));
        const auto b = sexa::from_integer(dist(rng));
        const auto c = sexa::from_integer(dist(rng));
        EXPECT_EQ(sexa::mul(a, b), sexa::mul(b, a));
        EXPECT_EQ(sexa::mul(sexa::mul(a, b), c), sexa::mul(a, sexa::mul(b, c)));
        EXPECT_EQ(sexa::mul(a, FloatingNumber{}), a);
    }
}

TEST(CompareSimpler, FewerDigitsThenSmallerValue)
{
    EXPECT_EQ(sexa::compare_simpler(normalize({40}), normalize({4, 26, 40})), SimplerOrdering::Simpler);
    EXPECT_EQ(sexa::compare_simpler(normalize({40}), normalize({50})), SimplerOrdering::Simpler);
    EXPECT_EQ(sexa::compare_simpler(normalize({50}), normalize({40})), SimplerOrdering::LessSimple);
    EXPECT_EQ(sexa::compare_simpler(normalize({7, 30}), normalize({7, 30})), SimplerOrdering::Equal);
}

TEST(CompareSimpler, IsATotalOrderOnRegularNumbers)
{
    const auto values = oracle::regulars_up_to(oracle::Int(216000));
    std::vector<FloatingNumber> numbers;
    for (const auto& v : values) {
        if (v % 60 != 0) numbers.push_back(sexa::from_integer(v));
    }
    for (std::size_t i = 0; i < numbers.size(); i += 7) {
        for (std::size_t j = 0; j < numbers.size(); j += 5) {
            const auto ab = sexa::compare_simpler(numbers[i], numbers[j]);
            const auto ba = sexa::compare_simpler(numbers[j], numbers[i]);
            EXPECT_EQ(ab == SimplerOrdering::Equal, numbers[i] == numbers[j]);
            EXPECT_EQ(ab == SimplerOrdering::Simpler, ba == SimplerOrdering::LessSimple);
            const auto li = oracle::length(sexa::to_integer(numbers[i]));
            const auto lj = oracle::length(sexa::to_integer(numbers[j]));
            if (li != lj) {
                EXPECT_EQ(ab == SimplerOrdering::Simpler, li < lj);
            }
        }
    }
}

TEST(MagnitudeLess, OrdersAsIfLeadingDigitWereUnits)
{
    EXPECT_TRUE(sexa::magnitude_less(normalize({44, 26, 40}), normalize({45})));
    EXPECT_TRUE(sexa::magnitude_less(normalize({40}), normalize({44, 26, 40})));
    EXPECT_FALSE(sexa::magnitude_less(normalize({50}), normalize({50})));
}

TEST(Format, NoPadding)
{
    EXPECT_EQ(sexa::format_spvn(normalize({11, 51, 54, 50, 37, 30})), "11:51:54:50:37:30");
    EXPECT_EQ(sexa::format_spvn(normalize({5})), "5");
    EXPECT_EQ(sexa::format_spvn(normalize({1, 3})), "1:3");
}

}  // namespace
