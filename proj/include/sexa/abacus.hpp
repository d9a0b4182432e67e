#pragma once

// Anchored sexagesimal numbers: a digit string whose rightmost digit is
// placed at a chosen power of 60. Fixing that place is what makes addition
// and subtraction meaningful. Products never depend on the anchors beyond a
// shift, so the digits of every multiplicative result are those of the
// floating computation.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "sexa/recip.hpp"
#include "sexa/tables.hpp"

namespace sexa {

class AnchoredNumber {
public:
    AnchoredNumber(FloatingNumber digits, std::int64_t exponent)
        : digits_(std::move(digits)), exponent_(exponent)
    {
    }

    const FloatingNumber& digits() const noexcept { return digits_; }
    /// Power of 60 carried by the rightmost digit.
    std::int64_t exponent() const noexcept { return exponent_; }
    /// Power of 60 carried by the leftmost digit.
    std::int64_t leading_exponent() const noexcept
    {
        return exponent_ + static_cast<std::int64_t>(digits_.size()) - 1;
    }

    friend bool operator==(const AnchoredNumber&, const AnchoredNumber&) = default;

    /// Digits least significant first, with `exponent()` as the place of column 0.
    detail::Columns columns() const { return digits_.columns(); }

    /// Renormalizes raw columns whose column 0 sits at 60^exponent.
    static AnchoredNumber from_columns(detail::Columns c, std::int64_t exponent)
    {
        std::size_t stripped = 0;
        auto digits = FloatingNumber::from_columns(std::move(c), &stripped);
        return {std::move(digits), exponent + static_cast<std::int64_t>(stripped)};
    }

private:
    FloatingNumber digits_;
    std::int64_t exponent_;
};

inline AnchoredNumber anchor(const FloatingNumber& n, std::int64_t exponent)
{
    return {n, exponent};
}

namespace detail {

// Both operands written on a common column grid whose column 0 is the lower
// of the two anchors.
struct Aligned {
    Columns a;
    Columns b;
    std::int64_t exponent;
};

inline Aligned align(const AnchoredNumber& a, const AnchoredNumber& b)
{
    const std::int64_t low = std::min(a.exponent(), b.exponent());
    return {shift_up(a.columns(), static_cast<std::size_t>(a.exponent() - low)),
            shift_up(b.columns(), static_cast<std::size_t>(b.exponent() - low)), low};
}

}  // namespace detail

inline AnchoredNumber add(const AnchoredNumber& a, const AnchoredNumber& b)
{
    auto g = detail::align(a, b);
    return AnchoredNumber::from_columns(detail::add_columns(g.a, g.b), g.exponent);
}

inline AnchoredNumber sub(const AnchoredNumber& a, const AnchoredNumber& b)
{
    auto g = detail::align(a, b);
    const int cmp = detail::compare_columns(g.a, g.b);
    if (cmp == 0) {
        throw Error(ErrorKind::ZeroResult, "difference is zero, which has no notation");
    }
    if (cmp < 0) {
        throw Error(ErrorKind::NegativeResult, "subtrahend is larger than minuend");
    }
    return AnchoredNumber::from_columns(detail::sub_columns(g.a, g.b), g.exponent);
}

inline AnchoredNumber mul_anchored(const AnchoredNumber& a, const AnchoredNumber& b)
{
    return AnchoredNumber::from_columns(detail::mul_columns(a.columns(), b.columns()),
                                        a.exponent() + b.exponent());
}

/// Multiplication by 30 placed one column below the unit, the reciprocal of 2.
inline AnchoredNumber half(const AnchoredNumber& a)
{
    return mul_anchored(a, anchor(from_integer(30), -1));
}

/// The reciprocal placed so that the pair multiplies to 1 in the unit column.
inline AnchoredNumber recip_anchored(const AnchoredNumber& a,
                                     const ElementaryTable& table = standard_table())
{
    const auto r = reciprocal(a.digits(), table).reciprocal;
    // V(a) * V(r) is exactly 60^k; the stripped zero count is k.
    std::size_t k = 0;
    FloatingNumber::from_columns(detail::mul_columns(a.digits().columns(), r.columns()), &k);
    return {r, -a.exponent() - static_cast<std::int64_t>(k)};
}

inline AnchoredNumber sqrt_anchored(const AnchoredNumber& a)
{
    // V * 60^e with e odd is rewritten as (V * 60) * 60^(e-1).
    BigInt v = to_integer(a.digits());
    std::int64_t e = a.exponent();
    if (e % 2 != 0) {
        v *= kBase;
        e -= 1;
    }
    const BigInt r = detail::integer_root(v, 2);
    if (r * r != v) {
        throw Error(ErrorKind::NotASquare, "anchored value is not a perfect square");
    }
    return AnchoredNumber::from_columns(detail::integer_to_columns(r), e / 2);
}

/// A named choice of anchors for the given numbers of a procedure.
struct Configuration {
    std::string name;
    std::map<std::string, std::int64_t> exponents;

    std::optional<std::int64_t> exponent_of(const std::string& given) const
    {
        auto it = exponents.find(given);
        if (it == exponents.end()) return std::nullopt;
        return it->second;
    }
};

/// "<digits>e<exponent>", e.g. "6:30e-1".
inline std::string format_anchored(const AnchoredNumber& a)
{
    return format_spvn(a.digits()) + "e" + std::to_string(a.exponent());
}

inline std::ostream& operator<<(std::ostream& os, const AnchoredNumber& a)
{
    return os << format_anchored(a);
}

/// Column diagram with the unit column marked U, one line per number.
inline std::string render_columns(const std::vector<std::pair<std::string, AnchoredNumber>>& rows)
{
    if (rows.empty()) return {};
    std::int64_t low = rows.front().second.exponent();
    std::int64_t high = rows.front().second.leading_exponent();
    std::size_t label_width = 0;
    for (const auto& [label, n] : rows) {
        low = std::min(low, n.exponent());
        high = std::max(high, n.leading_exponent());
        label_width = std::max(label_width, label.size());
    }
    low = std::min<std::int64_t>(low, 0);
    high = std::max<std::int64_t>(high, 0);
    auto cell = [](const std::string& s) {
        std::string out(3 - std::min<std::size_t>(s.size(), 3), ' ');
        return out + s;
    };
    std::string out(label_width, ' ');
    for (std::int64_t col = high; col >= low; --col) {
        out += cell(col == 0 ? "U" : "");
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
    for (const auto& [label, n] : rows) {
        out += label;
        out.append(label_width - label.size(), ' ');
        const auto& d = n.digits().digits();
        for (std::int64_t col = high; col >= low; --col) {
            const std::int64_t idx = n.leading_exponent() - col;
            if (idx >= 0 && idx < static_cast<std::int64_t>(d.size())) {
                out += cell(std::to_string(d[static_cast<std::size_t>(idx)].value()));
            } else {
                out += cell("");
            }
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

}  // namespace sexa
