#pragma once

// Text forms shared by the command line and corpus files:
//   floating numbers   "44:26:40" (also "44.26.40" on input)
//   anchored numbers   "6:30e-1"
//   measurements       "1/2 kush 3 shu-si", "2 1/4 še", "⅔ sar 5 gin"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sexa/abacus.hpp"
#include "sexa/metrology.hpp"
#include "sexa/spvn.hpp"

namespace sexa {

struct ParseDiagnostic {
    SourcePosition position;
    std::string message;
    std::string token;
};

inline ParseDiagnostic diagnostic_of(const Error& e)
{
    return {e.where().value_or(SourcePosition{}), e.what(), e.token()};
}

namespace detail {

inline bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

inline std::pair<std::size_t, std::string_view> trim(std::string_view s)
{
    std::size_t b = 0;
    while (b < s.size() && is_space(s[b])) ++b;
    std::size_t e = s.size();
    while (e > b && is_space(s[e - 1])) --e;
    return {b, s.substr(b, e - b)};
}

inline SourcePosition advance(SourcePosition origin, std::size_t offset)
{
    origin.column += offset;
    return origin;
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, SourcePosition where,
                              std::string_view token)
{
    throw Error(kind, message, where, std::string(token));
}

}  // namespace detail

inline FloatingNumber parse_spvn(std::string_view text, SourcePosition origin = {})
{
    using detail::fail;
    const auto [offset, s] = detail::trim(text);
    const SourcePosition start = detail::advance(origin, offset);
    if (s.empty()) {
        fail(ErrorKind::EmptyInput, "expected a sexagesimal number", start, s);
    }
    const bool colon = s.find(':') != std::string_view::npos;
    const bool point = s.find('.') != std::string_view::npos;
    if (colon && point) {
        fail(ErrorKind::MalformedSeparator, "mixed ':' and '.' separators", start, s);
    }
    const char sep = point ? '.' : ':';
    std::vector<Digit> digits;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = std::min(s.find(sep, pos), s.size());
        const std::string_view piece = s.substr(pos, next - pos);
        const SourcePosition at = detail::advance(start, pos);
        if (piece.empty()) {
            fail(ErrorKind::MalformedSeparator, "empty digit between separators", at, s);
        }
        for (std::size_t i = 0; i < piece.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(piece[i]))) {
                fail(ErrorKind::InvalidCharacter, "unexpected character in number",
                     detail::advance(at, i), piece.substr(i, 1));
            }
        }
        std::size_t lead = 0;
        while (lead + 1 < piece.size() && piece[lead] == '0') ++lead;
        unsigned value = 0;
        if (piece.size() - lead > 2 ||
            (std::from_chars(piece.data() + lead, piece.data() + piece.size(), value), value >= kBase)) {
            fail(ErrorKind::DigitOutOfRange, "digit " + std::string(piece) + " is not in 0..59", at, piece);
        }
        digits.emplace_back(value);
        if (next == s.size()) break;
        pos = next + 1;
    }
    try {
        return normalize(std::span<const Digit>(digits));
    } catch (const Error& e) {
        fail(e.kind(), e.what(), start, s);
    }
}

inline AnchoredNumber parse_anchored(std::string_view text, SourcePosition origin = {})
{
    const auto [offset, s] = detail::trim(text);
    const SourcePosition start = detail::advance(origin, offset);
    const std::size_t e = s.rfind('e');
    if (e == std::string_view::npos) {
        detail::fail(ErrorKind::SyntaxError, "anchored number needs 'e<exponent>'", start, s);
    }
    const std::string_view exp = s.substr(e + 1);
    std::int64_t exponent = 0;
    const char* first = exp.data();
    if (!exp.empty() && exp.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, exp.data() + exp.size(), exponent);
    if (exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size()) {
        detail::fail(ErrorKind::InvalidCharacter, "bad exponent", detail::advance(start, e + 1), exp);
    }
    const std::string_view mantissa = s.substr(0, e);
    const auto n = parse_spvn(mantissa, start);
    // Trailing zero digits are dropped by normalization; they move the anchor.
    std::size_t end = mantissa.size();
    while (end > 0) {
        const std::size_t cut = mantissa.find_last_of(":.", end - 1);
        const std::size_t from = cut == std::string_view::npos ? 0 : cut + 1;
        const std::string_view piece = mantissa.substr(from, end - from);
        if (piece.find_first_not_of('0') != std::string_view::npos) break;
        ++exponent;
        if (cut == std::string_view::npos) break;
        end = cut;
    }
    return anchor(n, exponent);
}

/// True when the text has the "<digits>e<exponent>" shape.
inline bool looks_anchored(std::string_view s)
{
    return s.find('e') != std::string_view::npos;
}

namespace detail {

struct Glyph {
    std::string_view text;
    Fraction value;
};

inline constexpr Glyph kFractionGlyphs[] = {
    {"½", {1, 2}}, {"⅓", {1, 3}}, {"⅔", {2, 3}}, {"¼", {1, 4}}, {"⅙", {1, 6}}, {"⅚", {5, 6}},
};

struct CountToken {
    BigInt whole = 0;
    std::optional<Fraction> fraction;
};

inline bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Decimal digits to an integer; leading zeros never select another base.
inline BigInt decimal(std::string_view s)
{
    BigInt v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

// Parses "3", "1/2", "½" or "2½". Nullopt when the token is not numeric.
inline std::optional<CountToken> parse_count(std::string_view tok, SourcePosition at)
{
    for (const auto& g : kFractionGlyphs) {
        if (tok.size() >= g.text.size() && tok.substr(tok.size() - g.text.size()) == g.text) {
            const auto head = tok.substr(0, tok.size() - g.text.size());
            if (head.empty()) return CountToken{0, g.value};
            if (all_digits(head)) return CountToken{decimal(head), g.value};
        }
    }
    if (all_digits(tok)) return CountToken{decimal(tok), std::nullopt};
    const std::size_t slash = tok.find('/');
    if (slash != std::string_view::npos && all_digits(tok.substr(0, slash)) &&
        all_digits(tok.substr(slash + 1))) {
        unsigned num = 0;
        unsigned den = 0;
        auto n = tok.substr(0, slash);
        auto d = tok.substr(slash + 1);
        const bool ok_num = std::from_chars(n.data(), n.data() + n.size(), num).ec == std::errc{};
        const bool ok_den = std::from_chars(d.data(), d.data() + d.size(), den).ec == std::errc{};
        const Fraction f{num, den};
        if (!ok_num || !ok_den || !is_allowed(f)) {
            fail(ErrorKind::BadFraction, "fraction " + std::string(tok) + " is not one of 1/6 1/4 1/3 1/2 2/3 5/6",
                 at, tok);
        }
        return CountToken{0, f};
    }
    return std::nullopt;
}

}  // namespace detail

inline MeasurementValue parse_measurement(std::string_view text, SystemKind system, SourcePosition origin = {})
{
    using detail::fail;
    const auto& sys = unit_system(system);
    MeasurementValue m{system, {}};
    std::optional<detail::CountToken> pending;
    SourcePosition pending_at = origin;
    std::size_t pos = 0;
    bool any = false;
    while (true) {
        while (pos < text.size() && detail::is_space(text[pos])) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !detail::is_space(text[end])) ++end;
        const std::string_view tok = text.substr(pos, end - pos);
        const SourcePosition at = detail::advance(origin, pos);
        any = true;
        if (auto count = detail::parse_count(tok, at)) {
            if (!pending) {
                pending = count;
                pending_at = at;
            } else if (!pending->fraction && count->whole == 0 && count->fraction) {
                pending->fraction = count->fraction;  // "1 1/2"
            } else {
                fail(ErrorKind::MalformedMeasurement, "two counts without a unit between them", at, tok);
            }
        } else {
            const auto unit = sys.find_unit(tok);
            if (!unit) {
                fail(ErrorKind::UnknownUnit, "unknown unit '" + std::string(tok) + "' in table " +
                     std::string(letter(system)), at, tok);
            }
            if (!pending) {
                fail(ErrorKind::MalformedMeasurement, "unit without a count", at, tok);
            }
            if (pending->whole == 0 && !pending->fraction) {
                fail(ErrorKind::MalformedMeasurement, "counts must be positive", pending_at, tok);
            }
            if (!m.terms.empty() && *unit >= m.terms.back().unit) {
                fail(ErrorKind::UnitOrderViolation, "units must be written largest first", at, tok);
            }
            m.terms.push_back({*unit, pending->whole, pending->fraction});
            pending.reset();
        }
        pos = end;
    }
    if (!any) {
        fail(ErrorKind::EmptyInput, "expected a measurement", origin, text);
    }
    if (pending) {
        fail(ErrorKind::MalformedMeasurement, "count without a unit", pending_at, text);
    }
    return m;
}

enum class Spelling { Unicode, Ascii };

inline std::string format_measurement(const MeasurementValue& m, Spelling spelling = Spelling::Unicode)
{
    const auto& sys = unit_system(m.system);
    std::string out;
    for (const auto& t : m.terms) {
        if (!out.empty()) out += ' ';
        if (t.whole > 0) {
            out += t.whole.str();
            if (t.fraction) out += ' ';
        }
        if (t.fraction) {
            out += std::to_string(t.fraction->num) + "/" + std::to_string(t.fraction->den);
        }
        const auto& unit = sys.unit(t.unit);
        out += ' ';
        out += (spelling == Spelling::Ascii && !unit.aliases.empty()) ? unit.aliases.front() : unit.name;
    }
    return out;
}

/// "<m>..<m>", the window syntax of the command line and corpus files.
inline WindowHint parse_window(std::string_view text, SystemKind system, SourcePosition origin = {})
{
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        detail::fail(ErrorKind::SyntaxError, "window must be written \"<low>\"..\"<high>\"", origin, text);
    }
    auto unquote = [](std::string_view s) {
        auto [off, t] = detail::trim(s);
        if (t.size() >= 2 && t.front() == '"' && t.back() == '"') {
            return std::pair{off + 1, t.substr(1, t.size() - 2)};
        }
        return std::pair{off, t};
    };
    const auto [lo_off, lo] = unquote(text.substr(0, dots));
    const auto [hi_off, hi] = unquote(text.substr(dots + 2));
    return {parse_measurement(lo, system, detail::advance(origin, lo_off)),
            parse_measurement(hi, system, detail::advance(origin, dots + 2 + hi_off))};
}

inline std::ostream& operator<<(std::ostream& os, const MeasurementValue& m)
{
    return os << format_measurement(m);
}

enum class TableFormat { Text, Csv };

namespace detail {

/// Display width of UTF-8 text (code points).
inline std::size_t display_width(std::string_view s)
{
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0U) != 0x80U) ++n;
    }
    return n;
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

/// Text: left column right-aligned, then " → " and the right column.
/// CSV: header line, then one line per row.
inline std::string emit_two_columns(const std::vector<std::pair<std::string, std::string>>& rows,
                                    TableFormat format, std::string_view left_header,
                                    std::string_view right_header)
{
    std::string out;
    if (format == TableFormat::Csv) {
        out += std::string(left_header) + "," + std::string(right_header) + "\n";
        for (const auto& [l, r] : rows) {
            out += detail::csv_field(l) + "," + detail::csv_field(r) + "\n";
        }
        return out;
    }
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, detail::display_width(row.first));
    for (const auto& [l, r] : rows) {
        out.append(width - detail::display_width(l), ' ');
        out += l + " → " + r + "\n";
    }
    return out;
}

inline std::string emit_reciprocal_table(const ElementaryTable& t, TableFormat format)
{
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [a, b] : t.pairs()) rows.emplace_back(format_spvn(a), format_spvn(b));
    return emit_two_columns(rows, format, "entry", "reciprocal");
}

inline std::string emit_multiplication_table(const MultiplicationTable& t, TableFormat format)
{
    if (format == TableFormat::Csv) {
        std::string out = "head,multiplier,product\n";
        for (const auto& [m, p] : t.rows) {
            out += format_spvn(t.head) + "," + std::to_string(m) + "," + format_spvn(p) + "\n";
        }
        return out;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [m, p] : t.rows) rows.emplace_back(std::to_string(m), format_spvn(p));
    return emit_two_columns(rows, format, "multiplier", "product");
}

inline std::string emit_numeric_table(const NumericTable& t, TableFormat format)
{
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [a, b] : t.rows) rows.emplace_back(format_spvn(a), format_spvn(b));
    return emit_two_columns(rows, format, "number", "value");
}

inline std::string emit_metrological_table(const MetrologicalTable& t, TableFormat format)
{
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [m, n] : t.rows) rows.emplace_back(format_measurement(m), format_spvn(n));
    return emit_two_columns(rows, format, "measurement", "number");
}

}  // namespace sexa
