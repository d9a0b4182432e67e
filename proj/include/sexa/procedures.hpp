#pragma once

// Tablet procedures as scripts: givens converted to abstract numbers, a chain
// of operations on those numbers, and answers read back as measurements.
//
// File format, one statement per line, '#' starts a comment:
//   tablet "<id>"
//   given <table> <name> "<measurement>" expect <spvn> [attested <spvn>]
//   given-spvn <name> <spvn>
//   config <name>: <given>=e<int>, ...
//   step <op> <a> [<b>] expect <spvn|anchored> [attested <...>] [as <name>]
//   answer <name> [<table> window "<m>".."<m>" expect "<m>"]
// A step without `as` binds its result to `_`.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sexa/abacus.hpp"
#include "sexa/metrology.hpp"
#include "sexa/recip.hpp"
#include "sexa/textio.hpp"

namespace sexa {

enum class Op { Mul, Recip, DivRecip, Half, Square, Sqrt, Add, Sub };

inline constexpr std::string_view op_name(Op op)
{
    switch (op) {
    case Op::Mul: return "mul";
    case Op::Recip: return "recip";
    case Op::DivRecip: return "divrecip";
    case Op::Half: return "half";
    case Op::Square: return "square";
    case Op::Sqrt: return "sqrt";
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    }
    return "?";
}

inline constexpr std::size_t arity(Op op)
{
    switch (op) {
    case Op::Mul:
    case Op::DivRecip:
    case Op::Add:
    case Op::Sub: return 2;
    default: return 1;
    }
}

/// Canonical names and the verbs of the translations.
inline std::optional<Op> parse_op(std::string_view s)
{
    static const std::pair<std::string_view, Op> names[] = {
        {"mul", Op::Mul},          {"raise", Op::Mul},          {"cross", Op::Mul},
        {"multiply", Op::Mul},     {"recip", Op::Recip},        {"detach", Op::Recip},
        {"loosen", Op::Recip},     {"divrecip", Op::DivRecip},  {"half", Op::Half},
        {"break", Op::Half},       {"square", Op::Square},      {"cross-itself", Op::Square},
        {"sqrt", Op::Sqrt},        {"take", Op::Sqrt},          {"add", Op::Add},
        {"append", Op::Add},       {"sub", Op::Sub},            {"tear-out", Op::Sub},
        {"cut-off", Op::Sub},
    };
    for (const auto& [name, op] : names) {
        if (name == s) return op;
    }
    return std::nullopt;
}

using Literal = std::variant<FloatingNumber, AnchoredNumber>;

inline std::string format_literal(const Literal& v)
{
    if (const auto* a = std::get_if<AnchoredNumber>(&v)) return format_anchored(*a);
    return format_spvn(std::get<FloatingNumber>(v));
}

inline const FloatingNumber& digits_of(const Literal& v)
{
    if (const auto* a = std::get_if<AnchoredNumber>(&v)) return a->digits();
    return std::get<FloatingNumber>(v);
}

struct MeasuredGiven {
    SystemKind system;
    MeasurementValue value;
    FloatingNumber expect;
    std::optional<FloatingNumber> attested;
};

struct Given {
    std::string name;
    SourcePosition position;
    std::variant<MeasuredGiven, FloatingNumber> source;
};

struct Step {
    Op op;
    std::vector<std::string> operands;
    Literal expect;
    std::optional<Literal> attested;
    std::string result = "_";
    SourcePosition position;
};

struct ReverseReading {
    SystemKind system;
    WindowHint window;
    MeasurementValue expect;
};

struct Answer {
    std::string name;
    std::optional<ReverseReading> reading;
    SourcePosition position;
};

struct ProcedureScript {
    std::string id;
    std::vector<Given> givens;
    std::vector<Configuration> configurations;
    std::vector<Step> steps;
    std::vector<Answer> answers;

    const Configuration* find_configuration(std::string_view name) const
    {
        for (const auto& c : configurations) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }

    bool needs_configuration() const
    {
        return std::any_of(steps.begin(), steps.end(),
                           [](const Step& s) { return s.op == Op::Add || s.op == Op::Sub; });
    }
};

namespace detail {

struct Token {
    std::string text;
    bool quoted = false;
    std::size_t column = 1;
};

inline std::vector<Token> tokenize(std::string_view line, std::size_t line_no)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (c == '"') {
            const std::size_t close = line.find('"', i + 1);
            if (close == std::string_view::npos) {
                throw Error(ErrorKind::SyntaxError, "unterminated string", {line_no, i + 1}, "\"");
            }
            out.push_back({std::string(line.substr(i + 1, close - i - 1)), true, i + 2});
            i = close + 1;
            continue;
        }
        if (line.substr(i, 2) == "..") {
            out.push_back({"..", false, i + 1});
            i += 2;
            continue;
        }
        std::size_t end = i;
        while (end < line.size() && !is_space(line[end]) && line[end] != '"' && line.substr(end, 2) != "..") {
            ++end;
        }
        out.push_back({std::string(line.substr(i, end - i)), false, i + 1});
        i = end;
    }
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_length)
        : tokens_(std::move(tokens)), line_(line_no), end_column_(line_length + 1)
    {
    }

    bool done() const { return pos_ >= tokens_.size(); }

    SourcePosition here() const
    {
        return {line_, done() ? end_column_ : tokens_[pos_].column};
    }

    const Token& next(std::string_view expected)
    {
        if (done()) {
            throw Error(ErrorKind::SyntaxError, "expected " + std::string(expected), here());
        }
        return tokens_[pos_++];
    }

    const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }

    bool accept(std::string_view keyword)
    {
        if (!done() && !tokens_[pos_].quoted && tokens_[pos_].text == keyword) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_keyword(std::string_view keyword)
    {
        const SourcePosition at = here();
        const Token& t = next("'" + std::string(keyword) + "'");
        if (t.quoted || t.text != keyword) {
            throw Error(ErrorKind::SyntaxError, "expected '" + std::string(keyword) + "'", at, t.text);
        }
    }

    const Token& quoted(std::string_view what)
    {
        const SourcePosition at = here();
        const Token& t = next(what);
        if (!t.quoted) throw Error(ErrorKind::SyntaxError, "expected quoted " + std::string(what), at, t.text);
        return t;
    }

    const Token& word(std::string_view what)
    {
        const SourcePosition at = here();
        const Token& t = next(what);
        if (t.quoted) throw Error(ErrorKind::SyntaxError, "expected " + std::string(what), at, t.text);
        return t;
    }

    SourcePosition position_of(const Token& t) const { return {line_, t.column}; }

    void finish()
    {
        if (!done()) {
            throw Error(ErrorKind::SyntaxError, "unexpected trailing input", here(), tokens_[pos_].text);
        }
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t end_column_;
};

inline SystemKind system_token(LineParser& p)
{
    const Token& t = p.word("table letter");
    if (auto s = parse_system(t.text)) return *s;
    throw Error(ErrorKind::UnknownUnit, "unknown table '" + t.text + "'", p.position_of(t), t.text);
}

inline Literal literal_token(LineParser& p)
{
    const Token& t = p.word("number");
    if (looks_anchored(t.text)) return parse_anchored(t.text, p.position_of(t));
    return parse_spvn(t.text, p.position_of(t));
}

inline bool valid_name(std::string_view s)
{
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    });
}

inline std::string name_token(LineParser& p, std::string_view what)
{
    const Token& t = p.word(what);
    if (!valid_name(t.text)) {
        throw Error(ErrorKind::SyntaxError, "bad name '" + t.text + "'", p.position_of(t), t.text);
    }
    return t.text;
}

inline Configuration parse_config_line(std::string_view rest, std::size_t line_no, std::size_t offset)
{
    const std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorKind::SyntaxError, "config needs '<name>:'", {line_no, offset + 1});
    }
    Configuration c;
    c.name = std::string(trim(rest.substr(0, colon)).second);
    if (!valid_name(c.name)) {
        throw Error(ErrorKind::SyntaxError, "bad configuration name", {line_no, offset + 1}, c.name);
    }
    std::size_t pos = colon + 1;
    while (pos <= rest.size()) {
        const std::size_t comma = std::min(rest.find(',', pos), rest.size());
        const auto [lead, entry] = trim(rest.substr(pos, comma - pos));
        const SourcePosition at{line_no, offset + pos + lead + 1};
        const std::size_t eq = entry.find("=e");
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::SyntaxError, "expected <given>=e<exponent>", at, std::string(entry));
        }
        const std::string name(trim(entry.substr(0, eq)).second);
        const auto exp = entry.substr(eq + 2);
        std::int64_t e = 0;
        const auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), e);
        if (exp.empty() || ec != std::errc{} || ptr != exp.data() + exp.size() || !valid_name(name)) {
            throw Error(ErrorKind::SyntaxError, "expected <given>=e<exponent>", at, std::string(entry));
        }
        c.exponents[name] = e;
        pos = comma + 1;
    }
    return c;
}

}  // namespace detail

inline ProcedureScript parse_script(std::string_view text)
{
    using namespace detail;
    ProcedureScript script;
    std::vector<std::string> defined;
    auto is_defined = [&](const std::string& n) {
        return std::find(defined.begin(), defined.end(), n) != defined.end();
    };
    auto define = [&](const std::string& n) {
        if (!is_defined(n)) defined.push_back(n);
    };
    bool have_id = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = nl + 1;
        ++line_no;
        auto tokens = tokenize(line, line_no);
        if (tokens.empty()) continue;
        const std::string keyword = tokens.front().text;
        const std::size_t kw_column = tokens.front().column;
        if (keyword == "config") {
            const std::size_t offset = kw_column - 1 + keyword.size();
            std::string_view rest = line.substr(offset);
            if (const auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
            auto c = parse_config_line(rest, line_no, offset);
            if (script.find_configuration(c.name)) {
                throw Error(ErrorKind::SyntaxError, "duplicate configuration", {line_no, kw_column}, c.name);
            }
            script.configurations.push_back(std::move(c));
            continue;
        }
        LineParser p(std::move(tokens), line_no, line.size());
        p.next("statement");
        const SourcePosition at{line_no, kw_column};
        if (keyword == "tablet") {
            if (have_id) throw Error(ErrorKind::SyntaxError, "tablet declared twice", at, keyword);
            script.id = p.quoted("tablet id").text;
            have_id = true;
        } else if (keyword == "given") {
            const SystemKind system = system_token(p);
            const std::string name = name_token(p, "given name");
            const Token& m = p.quoted("measurement");
            MeasuredGiven g{system, parse_measurement(m.text, system, p.position_of(m)), FloatingNumber{}, {}};
            p.expect_keyword("expect");
            g.expect = digits_of(literal_token(p));
            if (p.accept("attested")) g.attested = digits_of(literal_token(p));
            script.givens.push_back({name, at, std::move(g)});
            define(name);
        } else if (keyword == "given-spvn") {
            const std::string name = name_token(p, "given name");
            const Token& t = p.word("number");
            script.givens.push_back({name, at, parse_spvn(t.text, p.position_of(t))});
            define(name);
        } else if (keyword == "step") {
            const Token& op_tok = p.word("operation");
            const auto op = parse_op(op_tok.text);
            if (!op) {
                throw Error(ErrorKind::UnknownOp, "unknown operation '" + op_tok.text + "'",
                            p.position_of(op_tok), op_tok.text);
            }
            Step s{*op, {}, FloatingNumber{}, {}, "_", at};
            for (std::size_t i = 0; i < arity(*op); ++i) {
                const Token& t = p.word("operand");
                if (!is_defined(t.text)) {
                    throw Error(ErrorKind::UnknownName, "'" + t.text + "' is not defined yet",
                                p.position_of(t), t.text);
                }
                s.operands.push_back(t.text);
            }
            p.expect_keyword("expect");
            s.expect = literal_token(p);
            if (p.accept("attested")) s.attested = literal_token(p);
            if (p.accept("as")) s.result = name_token(p, "result name");
            define(s.result);
            script.steps.push_back(std::move(s));
        } else if (keyword == "answer") {
            const Token& t = p.word("answer name");
            if (!is_defined(t.text)) {
                throw Error(ErrorKind::UnknownName, "'" + t.text + "' is not defined", p.position_of(t), t.text);
            }
            Answer a{t.text, std::nullopt, at};
            if (!p.done()) {
                const SystemKind system = system_token(p);
                p.expect_keyword("window");
                const Token& lo = p.quoted("window start");
                p.expect_keyword("..");
                const Token& hi = p.quoted("window end");
                p.expect_keyword("expect");
                const Token& ex = p.quoted("expected measurement");
                a.reading = ReverseReading{
                    system,
                    {parse_measurement(lo.text, system, p.position_of(lo)),
                     parse_measurement(hi.text, system, p.position_of(hi))},
                    parse_measurement(ex.text, system, p.position_of(ex))};
            }
            script.answers.push_back(std::move(a));
        } else {
            throw Error(ErrorKind::SyntaxError, "unknown statement '" + keyword + "'", at, keyword);
        }
        p.finish();
    }
    if (!have_id) {
        throw Error(ErrorKind::SyntaxError, "missing tablet declaration", {line_no == 0 ? 1 : line_no, 1});
    }
    for (const auto& c : script.configurations) {
        for (const auto& [name, e] : c.exponents) {
            const bool known = std::any_of(script.givens.begin(), script.givens.end(),
                                           [&](const Given& g) { return g.name == name; });
            if (!known) {
                throw Error(ErrorKind::UnknownName, "configuration " + c.name + " anchors unknown given '" +
                            name + "'", {1, 1}, name);
            }
        }
    }
    return script;
}

enum class RecordKind { Given, Step, Answer };

struct TraceRecord {
    RecordKind kind;
    std::size_t line = 0;
    std::string label;     // e.g. "mul length width" or "given depth 1/2 ninda (Lh)"
    std::string computed;  // text of the computed value
    std::string expected;  // empty when nothing is expected
    bool match = true;
    std::optional<std::string> note;
    std::optional<FloatingNumber> digits;    // computed abstract number, for givens and steps
    std::optional<std::int64_t> exponent;    // anchor of the computed value, when anchored
    std::optional<MeasurementValue> reading; // answers read back as measurements
};

struct Trace {
    std::string tablet;
    std::optional<std::string> configuration;
    std::vector<TraceRecord> records;

    bool passed() const
    {
        return std::all_of(records.begin(), records.end(), [](const TraceRecord& r) { return r.match; });
    }
};

namespace detail {

using Value = Literal;

inline std::string scribal_note(const std::string& attested)
{
    return "scribal error: tablet has " + attested;
}

inline bool literal_matches(const Literal& expect, const Value& computed)
{
    if (const auto* a = std::get_if<AnchoredNumber>(&expect)) {
        if (const auto* c = std::get_if<AnchoredNumber>(&computed)) return *a == *c;
        return a->digits() == digits_of(computed);
    }
    return std::get<FloatingNumber>(expect) == digits_of(computed);
}

inline Value apply(Op op, const std::vector<Value>& in)
{
    const bool anchored = std::holds_alternative<AnchoredNumber>(in.front());
    if (anchored) {
        auto a = [&](std::size_t i) { return std::get<AnchoredNumber>(in[i]); };
        switch (op) {
        case Op::Mul: return mul_anchored(a(0), a(1));
        case Op::Recip: return recip_anchored(a(0));
        case Op::DivRecip: return mul_anchored(a(0), recip_anchored(a(1)));
        case Op::Half: return half(a(0));
        case Op::Square: return mul_anchored(a(0), a(0));
        case Op::Sqrt: return sqrt_anchored(a(0));
        case Op::Add: return add(a(0), a(1));
        case Op::Sub: return sub(a(0), a(1));
        }
    }
    auto f = [&](std::size_t i) { return std::get<FloatingNumber>(in[i]); };
    const auto& table = standard_table();
    switch (op) {
    case Op::Mul: return mul(f(0), f(1));
    case Op::Recip: return reciprocal(f(0), table).reciprocal;
    case Op::DivRecip: return mul(f(0), reciprocal(f(1), table).reciprocal);
    case Op::Half: return mul(f(0), from_integer(30));
    case Op::Square: return square(f(0));
    case Op::Sqrt: return sqrt(f(0));
    case Op::Add:
    case Op::Sub: break;
    }
    throw Error(ErrorKind::MissingConfig, "addition and subtraction need a configuration");
}

inline std::string describe_given(const Given& g)
{
    if (const auto* m = std::get_if<MeasuredGiven>(&g.source)) {
        return "given " + g.name + " " + format_measurement(m->value) + " (" + std::string(letter(m->system)) + ")";
    }
    return "given " + g.name;
}

}  // namespace detail

/// Executes a script. With a configuration every value is anchored; without
/// one the arithmetic is floating and additive steps are rejected.
inline Trace run(const ProcedureScript& script, const std::optional<std::string>& config = std::nullopt)
{
    using detail::Value;
    const Configuration* cfg = nullptr;
    if (config) {
        cfg = script.find_configuration(*config);
        if (!cfg) throw Error(ErrorKind::UnknownConfig, "no configuration named '" + *config + "'");
    } else if (script.needs_configuration()) {
        throw Error(ErrorKind::MissingConfig,
                    "addition and subtraction need a configuration; declared: " +
                    [&] {
                        std::string names;
                        for (const auto& c : script.configurations) names += (names.empty() ? "" : ", ") + c.name;
                        return names.empty() ? std::string("none") : names;
                    }());
    }

    Trace trace{script.id, config, {}};
    std::map<std::string, Value> env;
    auto record_value = [](TraceRecord& r, const Value& v) {
        r.computed = format_literal(v);
        r.digits = digits_of(v);
        if (const auto* a = std::get_if<AnchoredNumber>(&v)) r.exponent = a->exponent();
    };

    for (const auto& g : script.givens) {
        TraceRecord r{RecordKind::Given, g.position.line, detail::describe_given(g), {}, {}, true, {}, {}, {}, {}};
        FloatingNumber n;
        try {
            if (const auto* m = std::get_if<MeasuredGiven>(&g.source)) {
                n = to_number(m->value);
                r.expected = format_spvn(m->expect);
                r.match = n == m->expect;
                if (m->attested && *m->attested != m->expect) r.note = detail::scribal_note(format_spvn(*m->attested));
            } else {
                n = std::get<FloatingNumber>(g.source);
            }
        } catch (const Error& e) {
            throw Error(e.kind(), e.what(), g.position, g.name);
        }
        Value v = n;
        if (cfg) {
            const auto e = cfg->exponent_of(g.name);
            if (!e) {
                throw Error(ErrorKind::MissingAnchor,
                            "configuration " + cfg->name + " gives no place for '" + g.name + "'", g.position, g.name);
            }
            v = anchor(n, *e);
        }
        record_value(r, v);
        env.insert_or_assign(g.name, v);
        trace.records.push_back(std::move(r));
    }

    for (const auto& s : script.steps) {
        std::vector<Value> in;
        std::string label(op_name(s.op));
        for (const auto& name : s.operands) {
            in.push_back(env.at(name));
            label += " " + name;
        }
        Value out = FloatingNumber{};
        try {
            out = detail::apply(s.op, in);
        } catch (const Error& e) {
            throw Error(e.kind(), std::string(e.what()) + " (in " + label + ")", s.position, label);
        }
        TraceRecord r{RecordKind::Step, s.position.line, label, {}, format_literal(s.expect),
                      detail::literal_matches(s.expect, out), {}, {}, {}, {}};
        if (s.attested && !detail::literal_matches(*s.attested, s.expect)) {
            r.note = detail::scribal_note(format_literal(*s.attested));
        }
        record_value(r, out);
        env.insert_or_assign(s.result, out);
        trace.records.push_back(std::move(r));
    }

    for (const auto& a : script.answers) {
        const Value& v = env.at(a.name);
        const FloatingNumber& n = digits_of(v);
        TraceRecord r{RecordKind::Answer, a.position.line, "answer " + a.name, {}, {}, true, {}, n, {}, {}};
        if (!a.reading) {
            r.computed = format_literal(v);
        } else {
            MeasurementValue m;
            try {
                m = from_number(n, a.reading->system, a.reading->window);
            } catch (const Error& e) {
                throw Error(e.kind(), e.what(), a.position, a.name);
            }
            r.label += " (" + std::string(letter(a.reading->system)) + ")";
            r.computed = format_measurement(m);
            r.expected = format_measurement(a.reading->expect);
            r.match = value_of(m) == value_of(a.reading->expect);
            if (to_number(m) != n) {
                r.match = false;
                r.note = "reading does not convert back to " + format_spvn(n);
            }
            r.reading = std::move(m);
        }
        trace.records.push_back(std::move(r));
    }
    return trace;
}

/// Area of a disk from its perimeter: the square times 5, the reciprocal of 12.
inline FloatingNumber disk_area(const FloatingNumber& perimeter)
{
    return mul(square(perimeter), from_integer(5));
}

inline std::string render_trace(const Trace& t)
{
    std::ostringstream os;
    os << "tablet " << t.tablet;
    if (t.configuration) os << " [config " << *t.configuration << "]";
    os << '\n';
    std::size_t width = 0;
    std::size_t line_width = 0;
    for (const auto& r : t.records) {
        width = std::max(width, detail::display_width(r.label));
        line_width = std::max(line_width, std::to_string(r.line).size());
    }
    for (const auto& r : t.records) {
        const auto line = std::to_string(r.line);
        os << "  " << std::string(line_width - line.size(), ' ') << line << ": " << r.label
           << std::string(width - detail::display_width(r.label), ' ')
           << "  = " << r.computed;
        if (!r.expected.empty()) os << (r.match ? "  ok" : "  MISMATCH, expected " + r.expected);
        if (r.note) os << "  (" << *r.note << ")";
        os << '\n';
    }
    os << (t.passed() ? "pass" : "FAIL") << '\n';
    return os.str();
}

struct TabletRun {
    std::string file;
    std::string tablet;
    std::optional<std::string> configuration;
    std::optional<Trace> trace;
    std::optional<std::string> error;  // parse or arithmetic failure

    bool passed() const { return !error && trace && trace->passed(); }
};

struct CorpusSummary {
    std::vector<TabletRun> runs;  // sorted by tablet id, then configuration
    std::vector<std::string> warnings;

    bool passed() const
    {
        return std::all_of(runs.begin(), runs.end(), [](const TabletRun& r) { return r.passed(); });
    }
};

inline std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

// Every declared configuration, or a single floating run when none is declared.
inline std::vector<TabletRun> run_file(const std::filesystem::path& file)
{
    std::vector<TabletRun> out;
    ProcedureScript script;
    try {
        script = parse_script(read_file(file));
    } catch (const Error& e) {
        out.push_back({file.filename().string(), file.filename().string(), std::nullopt, std::nullopt, e.describe()});
        return out;
    }
    std::vector<std::optional<std::string>> configs;
    for (const auto& c : script.configurations) configs.emplace_back(c.name);
    if (configs.empty()) configs.emplace_back(std::nullopt);
    for (const auto& c : configs) {
        TabletRun r{file.filename().string(), script.id, c, std::nullopt, std::nullopt};
        try {
            r.trace = run(script, c);
        } catch (const Error& e) {
            r.error = e.describe();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

/// Runs every *.tab file of a directory under each of its configurations.
inline CorpusSummary verify_corpus(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir)) {
        throw Error(ErrorKind::Io, dir.string() + " is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".tab") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<std::future<std::vector<TabletRun>>> jobs;
    for (const auto& f : files) jobs.push_back(std::async(std::launch::async, detail::run_file, f));
    CorpusSummary summary;
    for (auto& j : jobs) {
        for (auto& r : j.get()) summary.runs.push_back(std::move(r));
    }
    std::stable_sort(summary.runs.begin(), summary.runs.end(), [](const TabletRun& a, const TabletRun& b) {
        return std::tie(a.tablet, a.configuration) < std::tie(b.tablet, b.configuration);
    });
    if (files.empty()) summary.warnings.push_back("no corpus files in " + dir.string());
    return summary;
}

inline std::string render_summary(const CorpusSummary& s)
{
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : s.runs) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.tablet;
        if (r.configuration) os << " [config " << *r.configuration << "]";
        os << '\n';
        if (r.error) os << "  " << r.file << ": " << *r.error << '\n';
        if (r.trace) {
            for (const auto& rec : r.trace->records) {
                if (!rec.match) {
                    os << "  " << r.file << ":" << rec.line << ": " << rec.label << " = " << rec.computed
                       << ", expected " << rec.expected << '\n';
                }
                if (rec.note) os << "  " << r.file << ":" << rec.line << ": note: " << *rec.note << '\n';
            }
        }
        if (!r.passed()) ++failed;
    }
    os << s.runs.size() - failed << " passed, " << failed << " failed\n";
    return os.str();
}

}  // namespace sexa
