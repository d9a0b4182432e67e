#pragma once

// Measurement values, the metrological tables that map them to abstract
// (floating) numbers, and the reverse reading, which needs an estimate of
// the order of magnitude because the number side of a table is cyclic.
//
// Quantities are held as exact rationals in the system's base unit:
//   L  ninda     Lh  kuš     W  gin     S  sar     C  sila
// The base unit's number is 1 with its last digit at 60^0, so the abstract
// number of a measurement is just the sexagesimal digit string of its value.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sexa/abacus.hpp"
#include "sexa/spvn.hpp"

namespace sexa {

using Rational = boost::multiprecision::cpp_rational;

enum class SystemKind { C, W, S, L, Lh };

inline constexpr std::string_view letter(SystemKind k)
{
    switch (k) {
    case SystemKind::C: return "C";
    case SystemKind::W: return "W";
    case SystemKind::S: return "S";
    case SystemKind::L: return "L";
    case SystemKind::Lh: return "Lh";
    }
    return "?";
}

inline std::optional<SystemKind> parse_system(std::string_view s)
{
    if (s == "C") return SystemKind::C;
    if (s == "W") return SystemKind::W;
    if (s == "S" || s == "V") return SystemKind::S;
    if (s == "L") return SystemKind::L;
    if (s == "Lh") return SystemKind::Lh;
    return std::nullopt;
}

struct Fraction {
    unsigned num = 0;
    unsigned den = 1;

    Rational value() const { return Rational(num, den); }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Fractions that may follow (or replace) a whole count.
inline const std::vector<Fraction>& allowed_fractions()
{
    static const std::vector<Fraction> f{{1, 6}, {1, 4}, {1, 3}, {1, 2}, {2, 3}, {5, 6}};
    return f;
}

inline bool is_allowed(const Fraction& f)
{
    const auto& all = allowed_fractions();
    return std::find(all.begin(), all.end(), f) != all.end();
}

struct UnitDef {
    std::string name;                  // canonical spelling
    std::vector<std::string> aliases;  // ASCII and variant spellings
    Rational value;                    // in base units
    std::vector<Fraction> fractions;   // written below one whole unit
    std::vector<Fraction> mixed;       // written after a whole count below fine_limit
    unsigned fine_limit = 0;           // whole counts below this also take `mixed`
};

class UnitSystem {
public:
    UnitSystem(SystemKind kind, std::vector<UnitDef> units) : kind_(kind), units_(std::move(units))
    {
        for (std::size_t i = 1; i < units_.size(); ++i) {
            const Rational f = units_[i].value / units_[i - 1].value;
            if (denominator(f) != 1 || f <= 1) {
                throw Error(ErrorKind::InexactFraction, "unit factors must be integers above 1");
            }
        }
    }

    SystemKind kind() const noexcept { return kind_; }
    /// Smallest unit first.
    const std::vector<UnitDef>& units() const noexcept { return units_; }
    const UnitDef& unit(std::size_t i) const { return units_.at(i); }

    /// Number of units i-1 in one unit i.
    BigInt factor(std::size_t i) const { return numerator(Rational(units_.at(i).value / units_.at(i - 1).value)); }

    std::optional<std::size_t> find_unit(std::string_view name) const
    {
        for (std::size_t i = 0; i < units_.size(); ++i) {
            if (units_[i].name == name) return i;
            for (const auto& a : units_[i].aliases) {
                if (a == name) return i;
            }
        }
        return std::nullopt;
    }

private:
    SystemKind kind_;
    std::vector<UnitDef> units_;
};

namespace detail {

inline const std::vector<Fraction>& kus_fractions()
{
    static const std::vector<Fraction> f{{1, 3}, {1, 2}, {2, 3}, {5, 6}};
    return f;
}

inline const std::vector<Fraction>& thirds_and_half()
{
    static const std::vector<Fraction> f{{1, 3}, {1, 2}, {2, 3}};
    return f;
}

inline std::vector<UnitDef> length_ladder(const Rational& ninda)
{
    return {
        {"šu-si", {"shu-si", "szu-si", "su-si"}, ninda / 360, {}, {}, 0},
        {"kuš", {"kush", "kusz", "kus"}, ninda / 12, kus_fractions(), thirds_and_half(), 2},
        {"ninda", {"nindan"}, ninda, {{1, 2}}, {{1, 2}}, 2},
        {"uš", {"ush", "usz", "us"}, ninda * 60, {}, {}, 0},
        {"danna", {}, ninda * 1800, {}, {}, 0},
    };
}

inline UnitSystem make_system(SystemKind kind)
{
    switch (kind) {
    case SystemKind::L:
        return UnitSystem(kind, length_ladder(Rational(1)));
    case SystemKind::Lh:
        return UnitSystem(kind, length_ladder(Rational(12)));
    case SystemKind::W:
        return UnitSystem(kind, {
            {"še", {"she", "sze", "se"}, Rational(1, 180), {}, {}, 0},
            {"gin", {"gin2", "gín"}, Rational(1), kus_fractions(), thirds_and_half(), 2},
            {"ma-na", {"mana"}, Rational(60), kus_fractions(), thirds_and_half(), 2},
            {"gu", {"gun", "gu2", "gú"}, Rational(3600), {}, {}, 0},
        });
    case SystemKind::S:
        return UnitSystem(kind, {
            {"še", {"she", "sze", "se"}, Rational(1, 10800), {}, {}, 0},
            {"gin", {"gin2", "gín"}, Rational(1, 60), kus_fractions(), thirds_and_half(), 2},
            {"sar", {}, Rational(1), kus_fractions(), thirds_and_half(), 2},
            {"gan", {"iku"}, Rational(100), {{1, 4}, {1, 2}}, {{1, 4}, {1, 2}}, 2},
            {"eše", {"eshe", "esze", "ese"}, Rational(600), {}, {}, 0},
            {"bur", {"bur3"}, Rational(1800), {}, {}, 0},
        });
    case SystemKind::C:
        return UnitSystem(kind, {
            {"sila", {"sila3", "silà", "silā"}, Rational(1), {}, {}, 0},
            {"ban", {"ban2"}, Rational(10), {}, {}, 0},
            {"bariga", {"barig"}, Rational(60), {}, {}, 0},
            {"gur", {}, Rational(300), {}, {}, 0},
        });
    }
    throw Error(ErrorKind::UnknownUnit, "unknown metrological system");
}

}  // namespace detail

inline const UnitSystem& unit_system(SystemKind kind)
{
    static const UnitSystem systems[] = {
        detail::make_system(SystemKind::C), detail::make_system(SystemKind::W),
        detail::make_system(SystemKind::S), detail::make_system(SystemKind::L),
        detail::make_system(SystemKind::Lh),
    };
    return systems[static_cast<int>(kind)];
}

struct MeasurementTerm {
    std::size_t unit = 0;  // index into UnitSystem::units()
    BigInt whole = 0;
    std::optional<Fraction> fraction;

    Rational count() const { return Rational(whole) + (fraction ? fraction->value() : Rational(0)); }
    friend bool operator==(const MeasurementTerm&, const MeasurementTerm&) = default;
};

/// A quantity such as "1/2 kuš 3 šu-si": terms in strictly descending unit
/// order, each a positive whole count, an allowed fraction, or both.
struct MeasurementValue {
    SystemKind system = SystemKind::L;
    std::vector<MeasurementTerm> terms;

    friend bool operator==(const MeasurementValue&, const MeasurementValue&) = default;
};

inline void validate(const MeasurementValue& m)
{
    const auto& sys = unit_system(m.system);
    if (m.terms.empty()) {
        throw Error(ErrorKind::MalformedMeasurement, "a measurement needs at least one term");
    }
    for (std::size_t i = 0; i < m.terms.size(); ++i) {
        const auto& t = m.terms[i];
        if (t.unit >= sys.units().size()) {
            throw Error(ErrorKind::UnknownUnit, "unit index out of range");
        }
        if (i > 0 && t.unit >= m.terms[i - 1].unit) {
            throw Error(ErrorKind::UnitOrderViolation, "units must be written largest first");
        }
        if (t.fraction && !is_allowed(*t.fraction)) {
            throw Error(ErrorKind::BadFraction, "fraction not in the allowed set");
        }
        if (t.whole < 0 || (t.whole == 0 && !t.fraction)) {
            throw Error(ErrorKind::MalformedMeasurement, "counts must be positive");
        }
    }
}

/// Exact value in base units.
inline Rational value_of(const MeasurementValue& m)
{
    const auto& sys = unit_system(m.system);
    Rational v = 0;
    for (const auto& t : m.terms) {
        v += t.count() * sys.unit(t.unit).value;
    }
    return v;
}

/// V * 60^e for a positive rational whose denominator is regular.
inline AnchoredNumber rational_to_anchored(const Rational& q)
{
    if (q <= 0) {
        throw Error(ErrorKind::NonPositive, "only positive quantities have a reading");
    }
    BigInt den = denominator(q);
    BigInt rest = den;
    for (unsigned p : {2U, 3U, 5U}) {
        while (rest % p == 0) rest /= p;
    }
    if (rest != 1) {
        throw Error(ErrorKind::InexactFraction, "quantity has no finite sexagesimal expansion");
    }
    BigInt num = numerator(q);
    std::int64_t e = 0;
    while (num % den != 0) {
        num *= kBase;
        --e;
    }
    num /= den;
    return AnchoredNumber::from_columns(detail::integer_to_columns(num), e);
}

inline Rational anchored_value(const AnchoredNumber& a)
{
    Rational v(to_integer(a.digits()));
    if (a.exponent() >= 0) {
        for (std::int64_t i = 0; i < a.exponent(); ++i) v *= kBase;
    } else {
        for (std::int64_t i = 0; i < -a.exponent(); ++i) v /= kBase;
    }
    return v;
}

inline AnchoredNumber to_anchored(const MeasurementValue& m)
{
    validate(m);
    return rational_to_anchored(value_of(m));
}

/// The abstract number a metrological table assigns to a measurement.
inline FloatingNumber to_number(const MeasurementValue& m)
{
    return to_anchored(m).digits();
}

namespace detail {

inline BigInt floor_div(const Rational& a, const Rational& b)
{
    const Rational q = a / b;
    return numerator(q) / denominator(q);
}

}  // namespace detail

/// Canonical spelling of a quantity, as the tables write it: largest units
/// first, each with a whole count and at most one of its usual fractions; the
/// smallest unit may take any allowed fraction. Nullopt when no spelling
/// reaches the quantity exactly.
inline std::optional<MeasurementValue> spell(const Rational& q, SystemKind system)
{
    if (q <= 0) return std::nullopt;
    const auto& sys = unit_system(system);
    MeasurementValue m{system, {}};
    Rational rest = q;
    for (std::size_t i = sys.units().size(); i-- > 0;) {
        const auto& u = sys.unit(i);
        const BigInt whole = detail::floor_div(rest, u.value);
        rest -= Rational(whole) * u.value;
        std::optional<Fraction> frac;
        if (i > 0) {
            for (auto it = u.fractions.rbegin(); it != u.fractions.rend(); ++it) {
                if (it->value() * u.value <= rest) {
                    frac = *it;
                    break;
                }
            }
            if (frac) rest -= frac->value() * u.value;
        } else if (rest != 0) {
            const Rational f = rest / u.value;
            for (const auto& allowed : allowed_fractions()) {
                if (allowed.value() == f) frac = allowed;
            }
            if (!frac) return std::nullopt;
            rest = 0;
        }
        if (whole > 0 || frac) {
            m.terms.push_back({i, whole, frac});
        }
    }
    return m;
}

struct ExponentHint {
    std::int64_t exponent = 0;  // place of the number's last digit, in base units
};

struct WindowHint {
    MeasurementValue low;
    MeasurementValue high;
};

using MagnitudeHint = std::variant<ExponentHint, WindowHint>;

/// Representatives V(n) * 60^p lying in [low, high].
inline std::vector<Rational> representatives_in(const FloatingNumber& n, const Rational& low,
                                                const Rational& high)
{
    std::vector<Rational> out;
    if (high < low) return out;
    Rational q(to_integer(n));
    while (q > low) q /= kBase;
    while (q < low) q *= kBase;
    for (; q <= high; q *= kBase) {
        out.push_back(q);
    }
    return out;
}

inline MeasurementValue from_number(const FloatingNumber& n, SystemKind system, const MagnitudeHint& hint)
{
    if (const auto* e = std::get_if<ExponentHint>(&hint)) {
        auto m = spell(anchored_value(anchor(n, e->exponent)), system);
        if (!m) throw Error(ErrorKind::NoReading, "no measurement corresponds at that order of magnitude");
        return *m;
    }
    const auto& w = std::get<WindowHint>(hint);
    if (w.low.system != system || w.high.system != system) {
        throw Error(ErrorKind::UnknownUnit, "window is in a different metrological system");
    }
    std::vector<MeasurementValue> readings;
    for (const auto& q : representatives_in(n, value_of(w.low), value_of(w.high))) {
        if (auto m = spell(q, system)) readings.push_back(std::move(*m));
    }
    if (readings.empty()) {
        throw Error(ErrorKind::NoReading, "no measurement in the window corresponds to the number");
    }
    if (readings.size() > 1) {
        throw Error(ErrorKind::Ambiguous, std::to_string(readings.size()) + " readings fall in the window");
    }
    return readings.front();
}

/// One reading per x60 cycle of the table, starting with the cycle that
/// begins at one of the smallest unit. Cycles without an exact spelling are
/// skipped.
inline std::vector<MeasurementValue> enumerate_readings(const FloatingNumber& n, SystemKind system,
                                                        unsigned span)
{
    if (span < 1) {
        throw Error(ErrorKind::NonPositive, "span must be at least one cycle");
    }
    const Rational smallest = unit_system(system).unit(0).value;
    Rational q(to_integer(n));
    while (q >= smallest) q /= kBase;
    while (q < smallest) q *= kBase;
    std::vector<MeasurementValue> out;
    for (unsigned k = 0; k < span; ++k, q *= kBase) {
        if (auto m = spell(q, system)) out.push_back(std::move(*m));
    }
    return out;
}

struct MetrologicalTable {
    SystemKind system = SystemKind::L;
    std::vector<std::pair<MeasurementValue, FloatingNumber>> rows;
};

namespace detail {

// Quantities a table lists for unit i: its fractions, then whole counts with
// the mixed fractions below fine_limit, then whole counts. Generated up to
// `until` (exclusive) or `cap` (inclusive), whichever is lower.
inline std::vector<Rational> unit_rows(const UnitDef& u, const Rational& until, const Rational& cap)
{
    std::vector<Rational> out;
    auto push = [&](const Rational& v) {
        if (v < until && v <= cap) out.push_back(v);
    };
    for (const auto& f : u.fractions) push(f.value() * u.value);
    for (BigInt c = 1;; ++c) {
        const Rational base = Rational(c) * u.value;
        if (base >= until || base > cap) break;
        push(base);
        if (c < u.fine_limit) {
            for (const auto& f : u.mixed) push((Rational(c) + f.value()) * u.value);
        }
    }
    return out;
}

inline Rational first_row(const UnitDef& u)
{
    return u.fractions.empty() ? u.value : u.fractions.front().value() * u.value;
}

}  // namespace detail

/// Rows of the canonical table whose quantity lies in [from, to].
inline MetrologicalTable gen_metrological_table(SystemKind system, const MeasurementValue& from,
                                                const MeasurementValue& to)
{
    validate(from);
    validate(to);
    const Rational lo = value_of(from);
    const Rational hi = value_of(to);
    if (hi < lo) {
        throw Error(ErrorKind::MalformedMeasurement, "table range ends before it starts");
    }
    const auto& sys = unit_system(system);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < sys.units().size(); ++i) {
        const Rational until = i + 1 < sys.units().size() ? detail::first_row(sys.unit(i + 1)) : hi + 1;
        for (auto& v : detail::unit_rows(sys.unit(i), until, hi)) {
            if (v >= lo) values.push_back(std::move(v));
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    MetrologicalTable t{system, {}};
    for (const auto& v : values) {
        if (auto m = spell(v, system)) {
            t.rows.emplace_back(*m, rational_to_anchored(v).digits());
        }
    }
    return t;
}

/// Volume number from a surface number and a height (table Lh) number: a
/// volume unit is a surface unit one kuš thick, so table S reads the product.
inline FloatingNumber volume_from_surface(const FloatingNumber& surface_number, const FloatingNumber& height_number)
{
    return mul(surface_number, height_number);
}

}  // namespace sexa
