#include <functional>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sexa/textio.hpp"

namespace {

using sexa::ErrorKind;
using sexa::SystemKind;

std::optional<sexa::Error> error_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const sexa::Error& e) {
        return e;
    }
    return std::nullopt;
}

ErrorKind spvn_error(const char* s)
{
    auto e = error_of([&] { sexa::parse_spvn(s); });
    EXPECT_TRUE(e) << s;
    return e ? e->kind() : ErrorKind::Io;
}

ErrorKind measurement_error(const char* s, SystemKind k = SystemKind::L)
{
    auto e = error_of([&] { sexa::parse_measurement(s, k); });
    EXPECT_TRUE(e) << s;
    return e ? e->kind() : ErrorKind::Io;
}

TEST(ParseSpvn, BothSeparators)
{
    EXPECT_EQ(sexa::format_spvn(sexa::parse_spvn("44:26:40")), "44:26:40");
    EXPECT_EQ(sexa::format_spvn(sexa::parse_spvn("7.30")), "7:30");
    EXPECT_EQ(sexa::format_spvn(sexa::parse_spvn("3:0")), "3");
    EXPECT_EQ(sexa::format_spvn(sexa::parse_spvn("  3:03:45 ")), "3:3:45");
}

TEST(ParseSpvn, Errors)
{
    EXPECT_EQ(spvn_error(""), ErrorKind::EmptyInput);
    EXPECT_EQ(spvn_error("   "), ErrorKind::EmptyInput);
    EXPECT_EQ(spvn_error("1:75"), ErrorKind::DigitOutOfRange);
    EXPECT_EQ(spvn_error("75"), ErrorKind::DigitOutOfRange);
    EXPECT_EQ(spvn_error("100000000000000000000"), ErrorKind::DigitOutOfRange);
    EXPECT_EQ(spvn_error("4::26"), ErrorKind::MalformedSeparator);
    EXPECT_EQ(spvn_error(":4"), ErrorKind::MalformedSeparator);
    EXPECT_EQ(spvn_error("4:"), ErrorKind::MalformedSeparator);
    EXPECT_EQ(spvn_error("4:26.40"), ErrorKind::MalformedSeparator);
    EXPECT_EQ(spvn_error("4:2a"), ErrorKind::InvalidCharacter);
    EXPECT_EQ(spvn_error("0:0"), ErrorKind::AllZero);
}

TEST(ParseSpvn, ReportsColumn)
{
    auto e = error_of([] { sexa::parse_spvn("  1:75"); });
    ASSERT_TRUE(e);
    ASSERT_TRUE(e->where());
    EXPECT_EQ(e->where()->column, 5U);
    EXPECT_EQ(e->token(), "75");
}

TEST(ParseAnchored, ExponentSuffix)
{
    const auto a = sexa::parse_anchored("6:30e-1");
    EXPECT_EQ(sexa::format_spvn(a.digits()), "6:30");
    EXPECT_EQ(a.exponent(), -1);
    EXPECT_EQ(sexa::parse_anchored("5e+2").exponent(), 2);
    EXPECT_TRUE(error_of([] { sexa::parse_anchored("5e"); }));
    EXPECT_TRUE(error_of([] { sexa::parse_anchored("5e1x"); }));
}

TEST(ParseMeasurement, AsciiAndUnicode)
{
    EXPECT_EQ(sexa::format_measurement(sexa::parse_measurement("1/2 kush 3 shu-si", SystemKind::L)),
              "1/2 kuš 3 šu-si");
    EXPECT_EQ(sexa::parse_measurement("½ kuš 3 šu-si", SystemKind::L),
              sexa::parse_measurement("1/2 kush 3 shu-si", SystemKind::L));
    EXPECT_EQ(sexa::format_measurement(sexa::parse_measurement("1½ ninda", SystemKind::L)), "1 1/2 ninda");
    EXPECT_EQ(sexa::format_measurement(sexa::parse_measurement("2 ¼ she", SystemKind::S)), "2 1/4 še");
    EXPECT_EQ(sexa::format_measurement(sexa::parse_measurement("⅔ sar 5 gin", SystemKind::S)), "2/3 sar 5 gin");
    EXPECT_EQ(sexa::format_measurement(sexa::parse_measurement("1/2 kush", SystemKind::L), sexa::Spelling::Ascii),
              "1/2 kush");
}

TEST(ParseMeasurement, Errors)
{
    EXPECT_EQ(measurement_error("1/5 kush"), ErrorKind::BadFraction);
    EXPECT_EQ(measurement_error("3 šu-si 1 kuš"), ErrorKind::UnitOrderViolation);
    EXPECT_EQ(measurement_error("1 kuš 2 kuš"), ErrorKind::UnitOrderViolation);
    EXPECT_EQ(measurement_error("3 furlong"), ErrorKind::UnknownUnit);
    EXPECT_EQ(measurement_error("3 sar"), ErrorKind::UnknownUnit);
    EXPECT_EQ(measurement_error("kuš"), ErrorKind::MalformedMeasurement);
    EXPECT_EQ(measurement_error("3"), ErrorKind::MalformedMeasurement);
    EXPECT_EQ(measurement_error("0 kuš"), ErrorKind::MalformedMeasurement);
    EXPECT_EQ(measurement_error("1 2 kuš"), ErrorKind::MalformedMeasurement);
    EXPECT_EQ(measurement_error(""), ErrorKind::EmptyInput);
}

TEST(ParseWindow, QuotedOrBare)
{
    const auto w = sexa::parse_window("\"1 shu-si\"..\"2 ninda\"", SystemKind::Lh);
    EXPECT_EQ(sexa::format_measurement(w.low), "1 šu-si");
    EXPECT_EQ(sexa::format_measurement(w.high), "2 ninda");
    const auto bare = sexa::parse_window("1 kuš..10 ninda", SystemKind::Lh);
    EXPECT_EQ(sexa::format_measurement(bare.high), "10 ninda");
    EXPECT_TRUE(error_of([] { sexa::parse_window("1 kuš", SystemKind::Lh); }));
}

TEST(RoundTrip, RegularNumbers)
{
    for (const auto& v : oracle::regulars_up_to(oracle::Int(12960000))) {
        const auto n = sexa::from_integer(v);
        const auto text = sexa::format_spvn(n);
        EXPECT_EQ(text, oracle::floating(v));
        EXPECT_EQ(sexa::parse_spvn(text), n);
        std::string dotted = text;
        std::replace(dotted.begin(), dotted.end(), ':', '.');
        EXPECT_EQ(sexa::parse_spvn(dotted), n);
    }
}

TEST(RoundTrip, TableRows)
{
    for (auto k : {SystemKind::L, SystemKind::Lh, SystemKind::S, SystemKind::W, SystemKind::C}) {
        const auto& sys = sexa::unit_system(k);
        const sexa::MeasurementValue lo{k, {{0, 1, std::nullopt}}};
        const sexa::MeasurementValue hi{k, {{sys.units().size() - 1, 2, std::nullopt}}};
        for (const auto& [m, n] : sexa::gen_metrological_table(k, lo, hi).rows) {
            EXPECT_EQ(sexa::parse_measurement(sexa::format_measurement(m), k), m);
            EXPECT_EQ(sexa::parse_measurement(sexa::format_measurement(m, sexa::Spelling::Ascii), k), m);
            EXPECT_EQ(sexa::parse_spvn(sexa::format_spvn(n)), n);
        }
    }
}

TEST(Fuzz, ParsersAreTotal)
{
    const std::string alphabet = "0123456789:.e-+ /½kušinda šu-si\"x";
    auto rng = oracle::rng();
    std::uniform_int_distribution<std::size_t> len(0, 14);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int i = 0; i < 20000; ++i) {
        std::string s;
        for (std::size_t n = len(rng); n > 0; --n) s += alphabet[pick(rng)];
        try {
            sexa::parse_spvn(s);
        } catch (const sexa::Error& e) {
            EXPECT_TRUE(e.where()) << s;
        }
        try {
            sexa::parse_anchored(s);
        } catch (const sexa::Error&) {
        }
        try {
            sexa::parse_measurement(s, SystemKind::L);
        } catch (const sexa::Error&) {
        }
    }
}

TEST(Emit, CsvHeaderAndQuoting)
{
    const auto csv = sexa::emit_two_columns({{"a,b", "1"}, {"c", "2"}}, sexa::TableFormat::Csv, "left", "right");
    EXPECT_EQ(csv, "left,right\n\"a,b\",1\nc,2\n");
    const auto text = sexa::emit_two_columns({{"šu-si", "1"}, {"kuš", "2"}}, sexa::TableFormat::Text, "", "");
    EXPECT_EQ(text, "šu-si → 1\n  kuš → 2\n");
}

TEST(Diagnostic, CarriesPositionAndToken)
{
    auto e = error_of([] { sexa::parse_measurement("1 kuš 3 furlong", SystemKind::L); });
    ASSERT_TRUE(e);
    const auto d = sexa::diagnostic_of(*e);
    EXPECT_EQ(d.position.column, 10U);  // byte column
    EXPECT_EQ(d.token, "furlong");
}

}  // namespace
