#pragma once

// Regular numbers and reciprocal extraction by trailing-part factorization.
//
// The algorithm peels off a regular factor that shows in the last digits of
// the number, multiplies by that factor's tabulated reciprocal, and repeats
// until the quotient is itself in the elementary table. The reciprocal is the
// product of the tabulated reciprocals of all factors.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sexa/spvn.hpp"

namespace sexa {

/// Reciprocal pairs learnt by heart. Looked up in both directions.
class ElementaryTable {
public:
    using Pair = std::pair<FloatingNumber, FloatingNumber>;

    explicit ElementaryTable(std::vector<Pair> pairs) : pairs_(std::move(pairs))
    {
        for (const auto& [entry, reciprocal] : pairs_) {
            if (!mul(entry, reciprocal).is_one()) {
                throw Error(ErrorKind::Irregular, "table pair does not multiply to 1");
            }
            add_value(entry);
            add_value(reciprocal);
        }
        std::sort(values_.begin(), values_.end(),
                  [](const auto& a, const auto& b) { return to_integer(a) > to_integer(b); });
    }

    const std::vector<Pair>& pairs() const noexcept { return pairs_; }

    /// Every number appearing in either column, by descending canonical value.
    const std::vector<FloatingNumber>& values() const noexcept { return values_; }

    std::optional<FloatingNumber> lookup(const FloatingNumber& n) const
    {
        for (const auto& [entry, reciprocal] : pairs_) {
            if (entry == n) return reciprocal;
            if (reciprocal == n) return entry;
        }
        return std::nullopt;
    }

private:
    void add_value(const FloatingNumber& v)
    {
        if (std::find(values_.begin(), values_.end(), v) == values_.end()) {
            values_.push_back(v);
        }
    }

    std::vector<Pair> pairs_;
    std::vector<FloatingNumber> values_;
};

enum class FactorStrategy {
    WedgeSuffixLongest,  // largest divisor visible in the trailing digits, else largest divisor
    AnyDivisorLargest,
};

inline bool is_regular(const FloatingNumber& n)
{
    BigInt v = to_integer(n);
    for (unsigned p : {2U, 3U, 5U}) {
        while (v % p == 0) v /= p;
    }
    return v == 1;
}

/// t's digits close n, except that t's leading digit may be any value not
/// above the digit of n in that place (6:40 is read inside ...26:40).
inline bool is_wedge_suffix(const FloatingNumber& t, const FloatingNumber& n)
{
    const auto& td = t.digits();
    const auto& nd = n.digits();
    if (td.size() > nd.size()) return false;
    const std::size_t offset = nd.size() - td.size();
    if (td[0] > nd[offset]) return false;
    return std::equal(td.begin() + 1, td.end(), nd.begin() + static_cast<std::ptrdiff_t>(offset) + 1);
}

struct TrailingCandidate {
    FloatingNumber value;
    bool wedge_suffix = false;
};

/// Table numbers (other than 1) that divide the canonical integer of n,
/// by descending canonical value.
inline std::vector<TrailingCandidate> trailing_candidates(const FloatingNumber& n,
                                                          const ElementaryTable& table)
{
    const BigInt v = to_integer(n);
    std::vector<TrailingCandidate> out;
    for (const auto& t : table.values()) {
        if (t.is_one()) continue;
        if (v % to_integer(t) == 0) {
            out.push_back({t, is_wedge_suffix(t, n)});
        }
    }
    return out;
}

struct Factorization {
    FloatingNumber source;
    /// Table numbers whose product is `source`; the last one is the final quotient.
    std::vector<FloatingNumber> factors;
    /// quotients[0] = source, quotients[i] = source / (factors[0] ... factors[i-1]).
    std::vector<FloatingNumber> quotients;
    /// Tabulated reciprocal of each factor.
    std::vector<FloatingNumber> reciprocals;
    /// Running products of `reciprocals`, accumulated from the last factor upwards.
    /// The final element is the reciprocal of `source`.
    std::vector<FloatingNumber> products;

    const FloatingNumber& result() const { return products.back(); }
};

namespace detail {

inline const TrailingCandidate* choose_factor(const std::vector<TrailingCandidate>& candidates,
                                              FactorStrategy strategy)
{
    if (candidates.empty()) return nullptr;
    if (strategy == FactorStrategy::WedgeSuffixLongest) {
        for (const auto& c : candidates) {
            if (c.wedge_suffix) return &c;
        }
    }
    return &candidates.front();
}

}  // namespace detail

struct ReciprocalResult {
    FloatingNumber reciprocal;
    Factorization factorization;
};

inline ReciprocalResult reciprocal(const FloatingNumber& n, const ElementaryTable& table,
                                   FactorStrategy strategy = FactorStrategy::WedgeSuffixLongest)
{
    if (!is_regular(n)) {
        throw Error(ErrorKind::Irregular, "without reciprocal (igi nu)");
    }
    Factorization f{n, {}, {n}, {}, {}};
    FloatingNumber current = n;
    while (!table.lookup(current)) {
        const auto candidates = trailing_candidates(current, table);
        const TrailingCandidate* pick = detail::choose_factor(candidates, strategy);
        if (pick == nullptr) {
            // Unreachable for regular numbers with a table containing 2, 3 and 5.
            throw Error(ErrorKind::NoProgress, "no table number divides the quotient");
        }
        f.factors.push_back(pick->value);
        current = from_integer(to_integer(current) / to_integer(pick->value));
        f.quotients.push_back(current);
    }
    f.factors.push_back(current);
    for (const auto& factor : f.factors) {
        f.reciprocals.push_back(*table.lookup(factor));
    }
    FloatingNumber acc = f.reciprocals.back();
    if (f.reciprocals.size() == 1) {
        f.products.push_back(acc);
    }
    for (std::size_t i = f.reciprocals.size() - 1; i-- > 0;) {
        acc = mul(acc, f.reciprocals[i]);
        f.products.push_back(acc);
    }
    return {acc, std::move(f)};
}

struct ReciprocalLoop {
    Factorization forward;
    Factorization back;
};

/// Inverts n, then inverts the result again, which gives n back.
inline ReciprocalLoop reciprocal_loop(const FloatingNumber& n, const ElementaryTable& table,
                                      FactorStrategy strategy = FactorStrategy::WedgeSuffixLongest)
{
    auto there = reciprocal(n, table, strategy);
    auto back = reciprocal(there.reciprocal, table, strategy);
    return {std::move(there.factorization), std::move(back.factorization)};
}

/// Two-column layout of a reciprocal extraction: each quotient beside the
/// reciprocal of the factor taken from it, then the running products.
inline std::string render_factorization(const Factorization& f)
{
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t width = 0;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        rows.emplace_back(format_spvn(f.quotients[i]), format_spvn(f.reciprocals[i]));
        width = std::max(width, rows.back().first.size());
    }
    std::string out;
    for (const auto& [left, right] : rows) {
        out += left;
        out.append(width - left.size() + 2, ' ');
        out += right;
        out += '\n';
    }
    for (const auto& p : f.products) {
        out += format_spvn(p);
        out += '\n';
    }
    return out;
}

namespace detail {

/// floor(v^(1/k)) for v >= 0.
inline BigInt integer_root(const BigInt& v, unsigned k)
{
    if (v < 2) return v;
    // Newton iteration from an upper bound.
    const auto bits = boost::multiprecision::msb(v) + 1;
    BigInt x = BigInt(1) << static_cast<unsigned>((bits + k - 1) / k);
    while (true) {
        BigInt power = 1;
        for (unsigned i = 0; i + 1 < k; ++i) power *= x;
        BigInt y = ((k - 1) * x + v / power) / k;
        if (y >= x) break;
        x = y;
    }
    return x;
}

inline BigInt ipow(const BigInt& base, unsigned k)
{
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= base;
    return r;
}

/// Root of some representative V(n)*60^p, p in 0..k-1, when one is an exact k-th power.
inline std::optional<FloatingNumber> floating_root(const FloatingNumber& n, unsigned k)
{
    BigInt v = to_integer(n);
    for (unsigned p = 0; p < k; ++p) {
        const BigInt r = integer_root(v, k);
        if (ipow(r, k) == v) return from_integer(r);
        v *= kBase;
    }
    return std::nullopt;
}

}  // namespace detail

inline FloatingNumber sqrt(const FloatingNumber& n)
{
    if (auto r = detail::floating_root(n, 2)) return *r;
    throw Error(ErrorKind::NotASquare, "no representative is a perfect square");
}

inline FloatingNumber cbrt(const FloatingNumber& n)
{
    if (auto r = detail::floating_root(n, 3)) return *r;
    throw Error(ErrorKind::NotACube, "no representative is a perfect cube");
}

/// a is divisible by b when a times the reciprocal of b is simpler than a.
inline bool divisible(const FloatingNumber& a, const FloatingNumber& b, const ElementaryTable& table)
{
    const auto inv = reciprocal(b, table).reciprocal;
    return compare_simpler(mul(a, inv), a) == SimplerOrdering::Simpler;
}

}  // namespace sexa
