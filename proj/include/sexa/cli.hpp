#pragma once

// Command-line front end. Results go to `out`, diagnostics to `err`.
// Exit status: 0 success, 1 verification failure, 2 usage or parse error,
// 3 arithmetic error.

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sexa/abacus.hpp"
#include "sexa/metrology.hpp"
#include "sexa/procedures.hpp"
#include "sexa/recip.hpp"
#include "sexa/tables.hpp"
#include "sexa/textio.hpp"

namespace sexa::cli {

enum ExitStatus : int { kSuccess = 0, kVerificationFailure = 1, kUsage = 2, kArithmetic = 3 };

inline int exit_status(ErrorKind kind)
{
    return is_arithmetic(kind) ? kArithmetic : kUsage;
}

struct Streams {
    std::istream* in = nullptr;
    std::ostream& out;
    std::ostream& err;
    bool interactive = false;
};

namespace detail {

inline TableFormat parse_format(const std::string& s)
{
    return s == "csv" ? TableFormat::Csv : TableFormat::Text;
}

inline SystemKind system_arg(const std::string& s)
{
    if (auto k = parse_system(s)) return *k;
    throw Error(ErrorKind::UnknownUnit, "unknown table '" + s + "' (expected L, Lh, S, W or C)", {1, 1}, s);
}

inline std::string unary(const std::string& name, const std::string& arg)
{
    if (looks_anchored(arg)) {
        const auto a = parse_anchored(arg);
        if (name == "square") return format_anchored(mul_anchored(a, a));
        if (name == "sqrt") return format_anchored(sqrt_anchored(a));
        if (name == "half") return format_anchored(half(a));
        return format_spvn(cbrt(a.digits()));
    }
    const auto n = parse_spvn(arg);
    if (name == "square") return format_spvn(square(n));
    if (name == "sqrt") return format_spvn(sqrt(n));
    if (name == "half") return format_spvn(mul(n, from_integer(30)));
    return format_spvn(cbrt(n));
}

inline std::string binary(const std::string& name, const std::string& a, const std::string& b)
{
    if (name == "add" || name == "sub" || looks_anchored(a) || looks_anchored(b)) {
        if (!looks_anchored(a) || !looks_anchored(b)) {
            throw Error(ErrorKind::MissingAnchor, name + " needs anchored operands such as 6:30e-1", {1, 1},
                        looks_anchored(a) ? b : a);
        }
        const auto x = parse_anchored(a);
        const auto y = parse_anchored(b);
        if (name == "add") return format_anchored(add(x, y));
        if (name == "sub") return format_anchored(sub(x, y));
        return format_anchored(mul_anchored(x, y));
    }
    return format_spvn(mul(parse_spvn(a), parse_spvn(b)));
}

inline std::vector<std::string> split_words(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    bool any = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            any = true;
        } else if (!quoted && (c == ' ' || c == '\t')) {
            if (any) out.push_back(cur);
            cur.clear();
            any = false;
        } else {
            cur += c;
            any = true;
        }
    }
    if (any) out.push_back(cur);
    return out;
}

}  // namespace detail

int dispatch(const std::vector<std::string>& args, Streams io);

namespace detail {

inline int repl(Streams io)
{
    std::map<std::string, std::string> names;
    std::string line;
    int status = kSuccess;
    while (true) {
        if (io.interactive) io.out << "sexa> " << std::flush;
        if (!std::getline(*io.in, line)) break;
        auto words = split_words(line);
        if (words.empty() || words.front().starts_with('#')) continue;
        if (words.front() == "quit" || words.front() == "exit") break;
        std::string target;
        if (words.size() >= 3 && words[1] == "=") {
            target = words[0];
            words.erase(words.begin(), words.begin() + 2);
        }
        for (auto& w : words) {
            if (auto it = names.find(w); it != names.end()) w = it->second;
        }
        if (!words.empty() && (words.front() == "repl")) {
            io.err << "repl: already running\n";
            status = kUsage;
            continue;
        }
        std::ostringstream out;
        status = dispatch(words, {nullptr, out, io.err, false});
        io.out << out.str();
        if (!target.empty() && status == kSuccess) {
            const auto text = out.str();
            names[target] = text.substr(0, text.find('\n'));
        }
    }
    return status;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int dispatch(const std::vector<std::string>& args, Streams io)
{
    CLI::App app{"Floating sexagesimal arithmetic, tables, metrology and tablet procedures", "sexa"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sexa 1.0");

    std::vector<std::string> operands;
    auto* mul_cmd = app.add_subcommand("mul", "product of two numbers");
    mul_cmd->add_option("operands", operands)->expected(2)->required();
    struct Unary {
        std::string name;
        std::string help;
        CLI::App* cmd = nullptr;
    };
    std::vector<Unary> unaries{{"square", "square of a number"}, {"sqrt", "square root"},
                               {"cbrt", "cube root"}, {"half", "multiply by 30, the reciprocal of 2"}};
    std::string operand;
    for (auto& u : unaries) {
        u.cmd = app.add_subcommand(u.name, u.help);
        u.cmd->add_option("n", operand)->required();
    }
    auto* add_cmd = app.add_subcommand("add", "sum of two anchored numbers");
    add_cmd->add_option("operands", operands)->expected(2)->required();
    auto* sub_cmd = app.add_subcommand("sub", "difference of two anchored numbers");
    sub_cmd->add_option("operands", operands)->expected(2)->required();

    auto* recip_cmd = app.add_subcommand("recip", "reciprocal by trailing-part factorization");
    bool trace = false;
    std::string strategy = "wedge";
    recip_cmd->add_option("n", operand)->required();
    recip_cmd->add_flag("--trace", trace, "show the factor columns and running products");
    recip_cmd->add_option("--strategy", strategy, "factor choice")
        ->check(CLI::IsMember({"wedge", "largest"}))
        ->capture_default_str();

    std::string format = "text";
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv"}));
    };
    auto* table_cmd = app.add_subcommand("table", "generate a curriculum table");
    table_cmd->require_subcommand(1);
    auto* t_recip = table_cmd->add_subcommand("recip", "standard reciprocal table");
    auto* t_mult = table_cmd->add_subcommand("mult", "multiplication table");
    std::string head;
    t_mult->add_option("head", head)->required();
    auto* t_squares = table_cmd->add_subcommand("squares", "squares of 1..59");
    auto* t_sqrt = table_cmd->add_subcommand("square-roots", "square roots of the squares");
    auto* t_cbrt = table_cmd->add_subcommand("cube-roots", "cube roots of the cubes");
    auto* t_curr = table_cmd->add_subcommand("curriculum", "order of the tables");
    auto* t_metro = table_cmd->add_subcommand("metro", "metrological table");
    std::string system;
    std::string from;
    std::string to;
    t_metro->add_option("system", system)->required();
    t_metro->add_option("--from", from)->required();
    t_metro->add_option("--to", to)->required();
    for (auto* c : {t_recip, t_mult, t_squares, t_sqrt, t_cbrt, t_metro}) add_format(c);

    auto* convert_cmd = app.add_subcommand("convert", "between measurements and abstract numbers");
    convert_cmd->require_subcommand(1);
    auto* c_to = convert_cmd->add_subcommand("to-spvn", "measurement to abstract number");
    std::string measurement;
    c_to->add_option("system", system)->required();
    c_to->add_option("measurement", measurement)->required();
    auto* c_from = convert_cmd->add_subcommand("from-spvn", "abstract number to measurement");
    std::string window;
    std::int64_t exponent = 0;
    c_from->add_option("system", system)->required();
    c_from->add_option("n", operand)->required();
    auto* window_opt = c_from->add_option("--window", window, "inclusive range \"<m>\"..\"<m>\"");
    auto* exponent_opt = c_from->add_option("--exponent", exponent, "place of the last digit");
    window_opt->excludes(exponent_opt);
    auto* c_readings = convert_cmd->add_subcommand("readings", "one reading per cycle of the table");
    unsigned span = 4;
    c_readings->add_option("system", system)->required();
    c_readings->add_option("n", operand)->required();
    c_readings->add_option("--span", span, "number of cycles")->capture_default_str();

    auto* run_cmd = app.add_subcommand("run", "run a tablet procedure and print its trace");
    std::string path;
    std::string config;
    run_cmd->add_option("file", path)->required();
    auto* config_opt = run_cmd->add_option("--config", config, "configuration of the anchors");
    auto* check_cmd = app.add_subcommand("check", "verify every tablet of a corpus directory");
    check_cmd->add_option("dir", path)->required();
    auto* repl_cmd = app.add_subcommand("repl", "read commands from standard input");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, io.out, io.err);
        return code == 0 ? kSuccess : kUsage;
    }

    auto& out = io.out;
    try {
        if (mul_cmd->parsed()) {
            out << detail::binary("mul", operands[0], operands[1]) << '\n';
        } else if (add_cmd->parsed()) {
            out << detail::binary("add", operands[0], operands[1]) << '\n';
        } else if (sub_cmd->parsed()) {
            out << detail::binary("sub", operands[0], operands[1]) << '\n';
        } else if (recip_cmd->parsed()) {
            const auto s = strategy == "largest" ? FactorStrategy::AnyDivisorLargest : FactorStrategy::WedgeSuffixLongest;
            if (looks_anchored(operand)) {
                out << format_anchored(recip_anchored(parse_anchored(operand))) << '\n';
            } else {
                const auto r = reciprocal(parse_spvn(operand), standard_table(), s);
                out << (trace ? render_factorization(r.factorization) : format_spvn(r.reciprocal) + "\n");
            }
        } else if (table_cmd->parsed()) {
            const auto f = detail::parse_format(format);
            if (t_recip->parsed()) {
                out << emit_reciprocal_table(standard_table(), f);
            } else if (t_mult->parsed()) {
                out << emit_multiplication_table(gen_multiplication_table(parse_spvn(head)), f);
            } else if (t_squares->parsed()) {
                out << emit_numeric_table(gen_squares_table(), f);
            } else if (t_sqrt->parsed()) {
                out << emit_numeric_table(gen_square_roots_table(), f);
            } else if (t_cbrt->parsed()) {
                out << emit_numeric_table(gen_cube_roots_table(), f);
            } else if (t_curr->parsed()) {
                std::size_t i = 0;
                for (const auto& id : curriculum()) out << ++i << ' ' << describe(id) << '\n';
            } else if (t_metro->parsed()) {
                const auto k = detail::system_arg(system);
                out << emit_metrological_table(
                    gen_metrological_table(k, parse_measurement(from, k), parse_measurement(to, k)), f);
            }
        } else if (convert_cmd->parsed()) {
            const auto k = detail::system_arg(system);
            if (c_to->parsed()) {
                out << format_spvn(to_number(parse_measurement(measurement, k))) << '\n';
            } else if (c_from->parsed()) {
                if (window_opt->count() == 0 && exponent_opt->count() == 0) {
                    io.err << "from-spvn needs --window or --exponent\n";
                    return kUsage;
                }
                const MagnitudeHint hint = window_opt->count() > 0 ? MagnitudeHint{parse_window(window, k)}
                                                                   : MagnitudeHint{ExponentHint{exponent}};
                out << format_measurement(from_number(parse_spvn(operand), k, hint)) << '\n';
            } else if (c_readings->parsed()) {
                for (const auto& m : enumerate_readings(parse_spvn(operand), k, span)) {
                    out << format_measurement(m) << '\n';
                }
            }
        } else if (run_cmd->parsed()) {
            const auto script = parse_script(read_file(path));
            const auto t = run(script, config_opt->count() > 0 ? std::optional<std::string>(config) : std::nullopt);
            out << render_trace(t);
            return t.passed() ? kSuccess : kVerificationFailure;
        } else if (check_cmd->parsed()) {
            const auto summary = verify_corpus(path);
            for (const auto& w : summary.warnings) io.err << "warning: " << w << '\n';
            out << render_summary(summary);
            return summary.passed() ? kSuccess : kVerificationFailure;
        } else if (repl_cmd->parsed()) {
            if (io.in == nullptr) {
                io.err << "repl: no input stream\n";
                return kUsage;
            }
            return detail::repl(io);
        } else {
            for (const auto& u : unaries) {
                if (u.cmd->parsed()) out << detail::unary(u.name, operand) << '\n';
            }
        }
    } catch (const Error& e) {
        io.err << e.describe() << '\n';
        return exit_status(e.kind());
    }
    return kSuccess;
}

}  // namespace sexa::cli
