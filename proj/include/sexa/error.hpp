#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sexa {

enum class ErrorKind {
    // arithmetic
    AllZero,
    NonPositive,
    Irregular,
    NoProgress,
    NotASquare,
    NotACube,
    InexactFraction,
    NoReading,
    Ambiguous,
    ZeroResult,
    NegativeResult,
    // text
    EmptyInput,
    DigitOutOfRange,
    MalformedSeparator,
    InvalidCharacter,
    UnknownUnit,
    UnitOrderViolation,
    BadFraction,
    MalformedMeasurement,
    // scripts
    SyntaxError,
    UnknownName,
    UnknownOp,
    UnknownConfig,
    MissingConfig,
    MissingAnchor,
    // environment
    Io,
};

constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::Irregular: return "Irregular";
    case ErrorKind::NoProgress: return "NoProgress";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::NotACube: return "NotACube";
    case ErrorKind::InexactFraction: return "InexactFraction";
    case ErrorKind::NoReading: return "NoReading";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::ZeroResult: return "ZeroResult";
    case ErrorKind::NegativeResult: return "NegativeResult";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorKind::MalformedSeparator: return "MalformedSeparator";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::UnknownUnit: return "UnknownUnit";
    case ErrorKind::UnitOrderViolation: return "UnitOrderViolation";
    case ErrorKind::BadFraction: return "BadFraction";
    case ErrorKind::MalformedMeasurement: return "MalformedMeasurement";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::UnknownOp: return "UnknownOp";
    case ErrorKind::UnknownConfig: return "UnknownConfig";
    case ErrorKind::MissingConfig: return "MissingConfig";
    case ErrorKind::MissingAnchor: return "MissingAnchor";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

/// True for failures of the arithmetic itself, as opposed to malformed input.
constexpr bool is_arithmetic(ErrorKind kind)
{
    return kind <= ErrorKind::NegativeResult;
}

/// Position of a diagnostic inside a text input, 1-based.
struct SourcePosition {
    std::size_t line = 1;
    std::size_t column = 1;
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    Error(ErrorKind kind, const std::string& message, SourcePosition where, std::string token = {})
        : std::runtime_error(message), kind_(kind), where_(where), token_(std::move(token))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::optional<SourcePosition>& where() const noexcept { return where_; }
    const std::string& token() const noexcept { return token_; }

    /// "line:col: Kind: message" when positioned, "Kind: message" otherwise.
    std::string describe() const
    {
        std::string out;
        if (where_) {
            out += std::to_string(where_->line) + ":" + std::to_string(where_->column) + ": ";
        }
        out += to_string(kind_);
        out += ": ";
        out += what();
        return out;
    }

private:
    ErrorKind kind_;
    std::optional<SourcePosition> where_;
    std::string token_;
};

}  // namespace sexa
