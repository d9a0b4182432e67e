#pragma once

// Floating sexagesimal place value numbers.
//
// A FloatingNumber is a digit string in base 60 whose unit position is not
// recorded: 1, 60 and 1/60 are the same number. Every value is kept in the
// normalized form of its class (no leading or trailing zero digit), so digit
// equality is class equality. The canonical integer representative puts the
// last digit at 60^0.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sexa/error.hpp"

namespace sexa {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned kBase = 60;

class Digit {
public:
    constexpr Digit() = default;
    constexpr explicit Digit(unsigned value) : value_(static_cast<std::uint8_t>(value))
    {
        if (value >= kBase) {
            throw Error(ErrorKind::DigitOutOfRange,
                        "digit " + std::to_string(value) + " is not in 0..59");
        }
    }

    constexpr unsigned value() const noexcept { return value_; }
    // A digit is written with angle wedges (tens) and vertical wedges (units).
    constexpr unsigned tens() const noexcept { return value_ / 10U; }
    constexpr unsigned units() const noexcept { return value_ % 10U; }

    friend constexpr auto operator<=>(Digit, Digit) = default;

private:
    std::uint8_t value_ = 0;
};

namespace detail {

// Unnormalized digit strings, least significant digit first. Used by the
// column algorithms below and by the anchored (abacus) arithmetic.
using Columns = std::vector<std::uint8_t>;

inline void trim_high(Columns& c)
{
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
    }
}

/// Number of zero columns at the low end.
inline std::size_t low_zeros(const Columns& c)
{
    std::size_t n = 0;
    while (n < c.size() && c[n] == 0) {
        ++n;
    }
    return n;
}

inline int compare_columns(const Columns& a, const Columns& b)
{
    if (a.size() != b.size()) {
        return a.size() < b.size() ? -1 : 1;
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? -1 : 1;
        }
    }
    return 0;
}

inline Columns add_columns(const Columns& a, const Columns& b)
{
    Columns out(std::max(a.size(), b.size()) + 1, 0);
    unsigned carry = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        unsigned sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out[i] = static_cast<std::uint8_t>(sum % kBase);
        carry = sum / kBase;
    }
    trim_high(out);
    return out;
}

/// a - b; requires a >= b.
inline Columns sub_columns(const Columns& a, const Columns& b)
{
    Columns out(a.size(), 0);
    int borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int diff = static_cast<int>(a[i]) - borrow - (i < b.size() ? static_cast<int>(b[i]) : 0);
        borrow = 0;
        if (diff < 0) {
            diff += static_cast<int>(kBase);
            borrow = 1;
        }
        out[i] = static_cast<std::uint8_t>(diff);
    }
    trim_high(out);
    return out;
}

inline Columns mul_columns(const Columns& a, const Columns& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
        }
    }
    Columns out(acc.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        std::uint64_t v = acc[i] + carry;
        out[i] = static_cast<std::uint8_t>(v % kBase);
        carry = v / kBase;
    }
    std::size_t i = acc.size();
    while (carry != 0) {
        if (i >= out.size()) out.push_back(0);
        out[i++] = static_cast<std::uint8_t>(carry % kBase);
        carry /= kBase;
    }
    trim_high(out);
    return out;
}

/// Shift towards higher places by `places` columns (multiplication by 60^places).
inline Columns shift_up(const Columns& a, std::size_t places)
{
    if (a.empty()) return a;
    Columns out(places, 0);
    out.insert(out.end(), a.begin(), a.end());
    return out;
}

inline BigInt columns_to_integer(const Columns& c)
{
    BigInt v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        v = v * kBase + c[i];
    }
    return v;
}

/// Base-60 expansion of a non-negative integer.
inline Columns integer_to_columns(BigInt v)
{
    Columns out;
    while (v > 0) {
        out.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(v % kBase)));
        v /= kBase;
    }
    return out;
}

}  // namespace detail

class FloatingNumber {
public:
    /// The number 1 (equivalently 60, 1/60, ...).
    FloatingNumber() : digits_{Digit(1)} {}

    const std::vector<Digit>& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    Digit leading() const noexcept { return digits_.front(); }
    Digit last() const noexcept { return digits_.back(); }
    bool is_one() const noexcept { return digits_.size() == 1 && digits_[0].value() == 1; }

    /// Digits least significant first.
    detail::Columns columns() const
    {
        detail::Columns c;
        c.reserve(digits_.size());
        for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
            c.push_back(static_cast<std::uint8_t>(it->value()));
        }
        return c;
    }

    friend bool operator==(const FloatingNumber&, const FloatingNumber&) = default;

    /// Strips zeros at both ends. Throws AllZero when nothing remains.
    static FloatingNumber from_columns(detail::Columns c, std::size_t* stripped_low = nullptr)
    {
        detail::trim_high(c);
        const std::size_t low = detail::low_zeros(c);
        if (low == c.size()) {
            throw Error(ErrorKind::AllZero, "sexagesimal place value notation has no zero number");
        }
        if (stripped_low) *stripped_low = low;
        FloatingNumber n;
        n.digits_.clear();
        n.digits_.reserve(c.size() - low);
        for (std::size_t i = c.size(); i-- > low;) {
            n.digits_.push_back(Digit(c[i]));
        }
        return n;
    }

private:
    std::vector<Digit> digits_;
};

/// The normalized member of the class of `raw` (most significant first).
inline FloatingNumber normalize(std::span<const Digit> raw)
{
    if (raw.empty()) {
        throw Error(ErrorKind::EmptyInput, "a number needs at least one digit");
    }
    detail::Columns c;
    c.reserve(raw.size());
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        c.push_back(static_cast<std::uint8_t>(it->value()));
    }
    return FloatingNumber::from_columns(std::move(c));
}

inline FloatingNumber normalize(std::initializer_list<unsigned> raw)
{
    std::vector<Digit> digits;
    digits.reserve(raw.size());
    for (unsigned d : raw) digits.emplace_back(d);
    return normalize(std::span<const Digit>(digits));
}

inline BigInt to_integer(const FloatingNumber& a)
{
    BigInt v = 0;
    for (Digit d : a.digits()) {
        v = v * kBase + d.value();
    }
    return v;
}

inline FloatingNumber from_integer(const BigInt& v)
{
    if (v <= 0) {
        throw Error(ErrorKind::NonPositive, "only positive integers have a sexagesimal reading");
    }
    return FloatingNumber::from_columns(detail::integer_to_columns(v));
}

inline FloatingNumber mul(const FloatingNumber& a, const FloatingNumber& b)
{
    return FloatingNumber::from_columns(detail::mul_columns(a.columns(), b.columns()));
}

inline FloatingNumber square(const FloatingNumber& a)
{
    return mul(a, a);
}

enum class SimplerOrdering { Simpler, Equal, LessSimple };

/// Fewer digits is simpler; with equal digit counts, the smaller canonical
/// integer is simpler.
inline SimplerOrdering compare_simpler(const FloatingNumber& a, const FloatingNumber& b)
{
    if (a.size() != b.size()) {
        return a.size() < b.size() ? SimplerOrdering::Simpler : SimplerOrdering::LessSimple;
    }
    const auto& da = a.digits();
    const auto& db = b.digits();
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (da[i] != db[i]) {
            return da[i] < db[i] ? SimplerOrdering::Simpler : SimplerOrdering::LessSimple;
        }
    }
    return SimplerOrdering::Equal;
}

/// Orders numbers as if the leading digit sat in the units place (so every
/// number lies in [1, 60)). This is the order of the curriculum's
/// multiplication-table heads: 50, 45, 44:26:40, 40, ...
inline bool magnitude_less(const FloatingNumber& a, const FloatingNumber& b)
{
    return std::lexicographical_compare(a.digits().begin(), a.digits().end(),
                                        b.digits().begin(), b.digits().end());
}

/// Colon-separated decimal digits without padding: "1:3", "44:26:40".
inline std::string format_spvn(const FloatingNumber& n)
{
    std::string out;
    for (std::size_t i = 0; i < n.digits().size(); ++i) {
        if (i != 0) out += ':';
        out += std::to_string(n.digits()[i].value());
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const FloatingNumber& n)
{
    return os << format_spvn(n);
}

}  // namespace sexa
