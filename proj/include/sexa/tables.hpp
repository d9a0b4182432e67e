#pragma once

// The numerical tables of the elementary curriculum.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sexa/recip.hpp"

namespace sexa {

namespace detail {

inline FloatingNumber spvn_digits(std::initializer_list<unsigned> d)
{
    return normalize(d);
}

}  // namespace detail

/// The standard reciprocal table, in tablet order (obverse then reverse).
inline ElementaryTable gen_reciprocal_table()
{
    using detail::spvn_digits;
    std::vector<ElementaryTable::Pair> pairs{
        {spvn_digits({2}), spvn_digits({30})},
        {spvn_digits({3}), spvn_digits({20})},
        {spvn_digits({4}), spvn_digits({15})},
        {spvn_digits({5}), spvn_digits({12})},
        {spvn_digits({6}), spvn_digits({10})},
        {spvn_digits({8}), spvn_digits({7, 30})},
        {spvn_digits({9}), spvn_digits({6, 40})},
        {spvn_digits({10}), spvn_digits({6})},
        {spvn_digits({12}), spvn_digits({5})},
        {spvn_digits({15}), spvn_digits({4})},
        {spvn_digits({16}), spvn_digits({3, 45})},
        {spvn_digits({18}), spvn_digits({3, 20})},
        {spvn_digits({20}), spvn_digits({3})},
        {spvn_digits({24}), spvn_digits({2, 30})},
        {spvn_digits({25}), spvn_digits({2, 24})},
        {spvn_digits({27}), spvn_digits({2, 13, 20})},
        {spvn_digits({30}), spvn_digits({2})},
        {spvn_digits({32}), spvn_digits({1, 52, 30})},
        {spvn_digits({36}), spvn_digits({1, 40})},
        {spvn_digits({40}), spvn_digits({1, 30})},
        {spvn_digits({45}), spvn_digits({1, 20})},
        {spvn_digits({48}), spvn_digits({1, 15})},
        {spvn_digits({50}), spvn_digits({1, 12})},
        {spvn_digits({54}), spvn_digits({1, 6, 40})},
        {spvn_digits({1}), spvn_digits({1})},
        {spvn_digits({1, 4}), spvn_digits({56, 15})},
        {spvn_digits({1, 21}), spvn_digits({44, 26, 40})},
    };
    return ElementaryTable(std::move(pairs));
}

/// Shared immutable instance of the standard table.
inline const ElementaryTable& standard_table()
{
    static const ElementaryTable table = gen_reciprocal_table();
    return table;
}

struct MultiplicationTable {
    FloatingNumber head;
    std::vector<std::pair<unsigned, FloatingNumber>> rows;
};

/// Multipliers 1..20 then 30, 40, 50. Rows past 20 follow the usual tablet
/// format; the attested example breaks off at 20.
inline const std::vector<unsigned>& multiplication_multipliers()
{
    static const std::vector<unsigned> m = [] {
        std::vector<unsigned> v;
        for (unsigned i = 1; i <= 20; ++i) v.push_back(i);
        v.insert(v.end(), {30, 40, 50});
        return v;
    }();
    return m;
}

inline MultiplicationTable gen_multiplication_table(const FloatingNumber& head)
{
    MultiplicationTable t{head, {}};
    for (unsigned m : multiplication_multipliers()) {
        t.rows.emplace_back(m, mul(head, from_integer(m)));
    }
    return t;
}

/// Two-column numerical table (squares and root listings).
struct NumericTable {
    std::string name;
    std::vector<std::pair<FloatingNumber, FloatingNumber>> rows;
};

inline NumericTable gen_squares_table()
{
    NumericTable t{"squares", {}};
    for (unsigned n = 1; n < kBase; ++n) {
        const auto x = from_integer(n);
        t.rows.emplace_back(x, square(x));
    }
    return t;
}

inline NumericTable gen_square_roots_table()
{
    NumericTable t{"square roots", {}};
    for (const auto& [n, sq] : gen_squares_table().rows) {
        t.rows.emplace_back(sq, n);
    }
    return t;
}

inline NumericTable gen_cube_roots_table()
{
    NumericTable t{"cube roots", {}};
    for (unsigned n = 1; n < kBase; ++n) {
        const auto x = from_integer(n);
        t.rows.emplace_back(mul(square(x), x), x);
    }
    return t;
}

struct ReciprocalTableId {
    friend bool operator==(const ReciprocalTableId&, const ReciprocalTableId&) = default;
};
struct MultiplicationTableId {
    FloatingNumber head;
    friend bool operator==(const MultiplicationTableId&, const MultiplicationTableId&) = default;
};
struct SquaresTableId {
    friend bool operator==(const SquaresTableId&, const SquaresTableId&) = default;
};
struct SquareRootsTableId {
    friend bool operator==(const SquareRootsTableId&, const SquareRootsTableId&) = default;
};
struct CubeRootsTableId {
    friend bool operator==(const CubeRootsTableId&, const CubeRootsTableId&) = default;
};

using TableId = std::variant<ReciprocalTableId, MultiplicationTableId, SquaresTableId,
                             SquareRootsTableId, CubeRootsTableId>;

inline std::string describe(const TableId& id)
{
    struct Visitor {
        std::string operator()(const ReciprocalTableId&) const { return "reciprocal table"; }
        std::string operator()(const MultiplicationTableId& m) const
        {
            return "multiplication table by " + format_spvn(m.head);
        }
        std::string operator()(const SquaresTableId&) const { return "squares"; }
        std::string operator()(const SquareRootsTableId&) const { return "square roots"; }
        std::string operator()(const CubeRootsTableId&) const { return "cube roots"; }
    };
    return std::visit(Visitor{}, id);
}

/// The 38 multiplication-table heads, in curriculum (descending) order.
inline std::vector<FloatingNumber> multiplication_heads()
{
    using detail::spvn_digits;
    // 16:40 and 12:30 stand where the transmitted list is corrupt.
    return {
        spvn_digits({50}),      spvn_digits({45}),    spvn_digits({44, 26, 40}),
        spvn_digits({40}),      spvn_digits({36}),    spvn_digits({30}),
        spvn_digits({25}),      spvn_digits({24}),    spvn_digits({22, 30}),
        spvn_digits({20}),      spvn_digits({18}),    spvn_digits({16, 40}),
        spvn_digits({16}),      spvn_digits({15}),    spvn_digits({12, 30}),
        spvn_digits({12}),      spvn_digits({10}),    spvn_digits({9}),
        spvn_digits({8, 20}),   spvn_digits({8}),     spvn_digits({7, 30}),
        spvn_digits({7, 12}),   spvn_digits({7}),     spvn_digits({6, 40}),
        spvn_digits({6}),       spvn_digits({5}),     spvn_digits({4, 30}),
        spvn_digits({4}),       spvn_digits({3, 45}), spvn_digits({3, 20}),
        spvn_digits({3}),       spvn_digits({2, 30}), spvn_digits({2, 24}),
        spvn_digits({2}),       spvn_digits({1, 40}), spvn_digits({1, 30}),
        spvn_digits({1, 20}),   spvn_digits({1, 15}),
    };
}

inline std::vector<TableId> curriculum()
{
    std::vector<TableId> out{ReciprocalTableId{}};
    for (auto& head : multiplication_heads()) {
        out.emplace_back(MultiplicationTableId{std::move(head)});
    }
    out.emplace_back(SquaresTableId{});
    out.emplace_back(SquareRootsTableId{});
    out.emplace_back(CubeRootsTableId{});
    return out;
}

}  // namespace sexa
