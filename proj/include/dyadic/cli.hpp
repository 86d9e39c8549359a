#ifndef DYADIC_CLI_HPP
#define DYADIC_CLI_HPP

// Command dispatch for the dgrid tool.

#include "dyadic/adjacency.hpp"
#include "dyadic/far.hpp"
#include "dyadic/grid.hpp"
#include "dyadic/json.hpp"
#include "dyadic/mei_cover.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyadic::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_validation = 2;

struct CliResult {
    int exit_code = exit_ok;
    std::string output;
    std::string error;
};

/// Bad user input: reported with exit code 2 and the offending token.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& token, const std::string& why)
        : std::runtime_error("invalid argument '" + token + "': " + why)
    {
    }
};

namespace detail {

inline BigInt max_denominator()
{
    if (const char* env = std::getenv("DG_MAX_DENOM")) {
        if (auto v = dyadic::detail::parse_integer(env); v && *v > 0) {
            return *v;
        }
        throw ValidationError(env, "DG_MAX_DENOM must be a positive integer");
    }
    return BigInt(1000000000);
}

template <typename F>
auto validated(const std::string& token, F&& parse) -> decltype(parse())
{
    try {
        return parse();
    } catch (const std::exception& e) {
        throw ValidationError(token, e.what());
    }
}

inline Rational parse_rational(const std::string& token)
{
    Rational r = validated(token, [&] { return Rational::parse(token); });
    if (r.denominator() > max_denominator()) {
        throw ValidationError(token, "denominator exceeds DG_MAX_DENOM");
    }
    return r;
}

/// "shift|location", e.g. "1/3|:1,0".
inline GridRep parse_grid(const std::string& token, const Base& base)
{
    const auto bar = token.find('|');
    if (bar == std::string::npos) {
        throw ValidationError(token, "grid literal must look like shift|pre:period");
    }
    Rational shift = parse_rational(token.substr(0, bar));
    DigitSequence location =
        validated(token, [&] { return DigitSequence::parse(std::string_view(token).substr(bar + 1), base); });
    return {base, std::move(shift), std::move(location)};
}

/// "l,r" or "[l,r)".
inline Query parse_query(const std::string& token)
{
    std::string body = token;
    if (body.size() >= 2 && body.front() == '[' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
    }
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
        throw ValidationError(token, "query literal must look like left,right");
    }
    Rational lo = parse_rational(body.substr(0, comma));
    Rational hi = parse_rational(body.substr(comma + 1));
    return validated(token, [&] { return Query(lo, hi); });
}

/// "a..b"
inline GenerationRange parse_scales(const std::string& token)
{
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
        throw ValidationError(token, "scale range must look like a..b");
    }
    auto to_int = [&](const std::string& part) {
        return validated(token, [&] {
            std::size_t used = 0;
            const long long v = std::stoll(part, &used);
            if (used != part.size()) {
                throw std::invalid_argument("trailing characters");
            }
            return static_cast<std::int64_t>(v);
        });
    };
    GenerationRange range{to_int(token.substr(0, dots)), to_int(token.substr(dots + 2))};
    if (range.lo > range.hi) {
        throw ValidationError(token, "empty scale range");
    }
    return range;
}

inline DigitStream parse_stream(const std::string& token, const Base& base)
{
    if (token == "growing-zero-runs") {
        return growing_zero_runs(base);
    }
    if (token == "bounded-zero-runs") {
        return bounded_zero_runs(base);
    }
    if (token.starts_with("constant:")) {
        auto d = dyadic::detail::parse_integer(std::string_view(token).substr(9));
        if (!d || *d >= base.value()) {
            throw ValidationError(token, "constant digit must lie in [0, n)");
        }
        return constant_stream(base, d->convert_to<Digit>());
    }
    throw ValidationError(token, "unknown stream (growing-zero-runs, bounded-zero-runs, constant:<d>)");
}

/// Two-column text block with keys padded to a common width.
class Table {
public:
    Table& row(std::string key, std::string value)
    {
        rows_.emplace_back(std::move(key), std::move(value));
        return *this;
    }

    std::string str() const
    {
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) {
            width = std::max(width, k.size());
        }
        std::string out;
        for (const auto& [k, v] : rows_) {
            out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
        }
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string digits_text(const Digits& d)
{
    return "[" + dyadic::detail::join_digits(d) + "]";
}

inline std::string render(const json& j, bool as_json, const Table& table)
{
    return as_json ? j.dump() + "\n" : table.str();
}

} // namespace detail

/// Runs one command; argv excludes the program name.
inline CliResult run(const std::vector<std::string>& argv)
{
    using namespace detail;

    CLI::App app{"Exact analysis of general dyadic grids", "dgrid"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::uint32_t base_value = 2;
    bool as_json = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--base", base_value, "grid base n >= 2")->capture_default_str();
        sub->add_flag("--json", as_json, "emit JSON");
    };

    std::string delta_text;
    std::string stream_text;
    std::size_t depth = 10000;
    auto* far_cmd = app.add_subcommand("far", "farness certificate of a rational shift");
    far_cmd->add_option("delta", delta_text, "rational p/q");
    far_cmd->add_option("--stream", stream_text, "digit stream for bounded tie analysis");
    far_cmd->add_option("--depth", depth, "digits scanned with --stream")->capture_default_str();
    add_common(far_cmd);

    std::string x_text;
    auto* expand_cmd = app.add_subcommand("expand", "base-n expansion of a value in [0,1)");
    expand_cmd->add_option("x", x_text, "rational p/q")->required();
    add_common(expand_cmd);

    std::string g1_text;
    std::string g2_text;
    auto* adjacent_cmd = app.add_subcommand("adjacent", "decide adjacency of two grids");
    adjacent_cmd->add_option("g1", g1_text, "grid shift|pre:period")->required();
    adjacent_cmd->add_option("g2", g2_text, "grid shift|pre:period")->required();
    add_common(adjacent_cmd);

    std::string q_text;
    auto* cover_cmd = app.add_subcommand("cover", "smallest covering cell across two grids");
    cover_cmd->add_option("query", q_text, "interval left,right")->required();
    cover_cmd->add_option("g1", g1_text, "grid shift|pre:period")->required();
    cover_cmd->add_option("g2", g2_text, "grid shift|pre:period")->required();
    add_common(cover_cmd);

    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string scales_text = "-5..20";
    auto* estimate_cmd = app.add_subcommand("estimate", "empirical cover constant");
    estimate_cmd->add_option("g1", g1_text, "grid shift|pre:period")->required();
    estimate_cmd->add_option("g2", g2_text, "grid shift|pre:period")->required();
    estimate_cmd->add_option("--trials", trials)->capture_default_str();
    estimate_cmd->add_option("--seed", seed)->capture_default_str();
    estimate_cmd->add_option("--scales", scales_text, "generation range a..b")->capture_default_str();
    add_common(estimate_cmd);

    std::uint32_t witness_depth = 1;
    auto* witness_cmd = app.add_subcommand("witness", "adversarial query for a non-far shift");
    witness_cmd->add_option("delta", delta_text, "rational p/q")->required();
    witness_cmd->add_option("-N", witness_depth, "ratio exponent")->capture_default_str();
    add_common(witness_cmd);

    auto* canonicalize_cmd = app.add_subcommand("canonicalize", "representation with shift in [0,1)");
    canonicalize_cmd->add_option("g", g1_text, "grid shift|pre:period")->required();
    add_common(canonicalize_cmd);

    CliResult result;
    std::ostringstream out;
    std::ostringstream err;
    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        result.exit_code = app.exit(e, out, err);
        if (result.exit_code != 0) {
            result.exit_code = exit_validation;
        }
        result.output = out.str();
        result.error = err.str();
        return result;
    }

    try {
        const Base base = validated(std::to_string(base_value), [&] { return Base(base_value); });

        if (far_cmd->parsed()) {
            if (!stream_text.empty()) {
                if (depth == 0) {
                    throw ValidationError("0", "--depth must be positive");
                }
                const auto r = bounded_tie_analysis(parse_stream(stream_text, base), depth);
                json j = {{"stream", stream_text},
                          {"base", base.value()},
                          {"depth", depth},
                          {"t_lower_bound", r.t_lower_bound},
                          {"verdict", to_string(r.verdict)}};
                Table t;
                t.row("stream", stream_text)
                    .row("base", std::to_string(base.value()))
                    .row("depth", std::to_string(depth))
                    .row("t_lower_bound", std::to_string(r.t_lower_bound))
                    .row("verdict", to_string(r.verdict));
                result.output = render(j, as_json, t);
            } else {
                if (delta_text.empty()) {
                    throw ValidationError("far", "expected a rational delta or --stream");
                }
                const auto cert = certificate(parse_rational(delta_text), base);
                Table t;
                t.row("delta", cert.delta.to_string())
                    .row("base", std::to_string(base.value()))
                    .row("is_far", yes_no(cert.is_far))
                    .row("T", cert.tie.infinite() ? "infinite" : std::to_string(*cert.tie.length))
                    .row("d", cert.d_value ? cert.d_value->to_string() : "-")
                    .row("C", cert.c_value ? cert.c_value->to_string() : "-")
                    .row("bound_ok", yes_no(cert.bound_ok));
                if (cert.tie.witness) {
                    const auto& w = *cert.tie.witness;
                    t.row("witness", "a_" + std::to_string(w.start) + "..a_" + std::to_string(w.end) + " = " +
                                         std::to_string(w.digit));
                }
                result.output = render(to_json(cert), as_json, t);
            }
        } else if (expand_cmd->parsed()) {
            const auto e = expand(parse_rational(x_text), base);
            Table t;
            t.row("value", e.value().to_string())
                .row("base", std::to_string(base.value()))
                .row("preperiod", digits_text(e.preperiod()))
                .row("period", digits_text(e.period()));
            result.output = render(to_json(e), as_json, t);
        } else if (adjacent_cmd->parsed()) {
            const auto r = is_adjacent(parse_grid(g1_text, base), parse_grid(g2_text, base));
            std::string points;
            for (const auto& p : r.profile.limit_points) {
                points += (points.empty() ? "" : ", ") + p.to_string();
            }
            Table t;
            t.row("adjacent", yes_no(r.adjacent))
                .row("shift_gap", r.shift_gap.to_string())
                .row("shift_gap_far", yes_no(r.shift_gap_far))
                .row("c1", r.profile.c1.to_string())
                .row("c2", r.profile.c2.to_string())
                .row("limit_points", "{" + points + "}")
                .row("failing_condition", to_string(r.failing_condition));
            result.output = render(to_json(r), as_json, t);
        } else if (cover_cmd->parsed()) {
            const Query q = parse_query(q_text);
            const auto c = cover(q, parse_grid(g1_text, base), parse_grid(g2_text, base));
            if (!c) {
                throw std::domain_error("no cell of either grid contains the query");
            }
            Table t;
            t.row("left", c->interval.left().to_string())
                .row("right", c->interval.right().to_string())
                .row("generation", std::to_string(c->interval.generation()))
                .row("source", to_string(c->source))
                .row("ratio", c->ratio.to_string());
            result.output = render(to_json(*c), as_json, t);
        } else if (estimate_cmd->parsed()) {
            if (trials == 0) {
                throw ValidationError("0", "--trials must be positive");
            }
            const auto s = cover_constant_estimate(parse_grid(g1_text, base), parse_grid(g2_text, base), trials,
                                                   parse_scales(scales_text), seed);
            Table t;
            t.row("max_ratio", s.max_ratio ? s.max_ratio->to_string() : "unbounded")
                .row("argmax_query", s.argmax_query ? "[" + s.argmax_query->left().to_string() + ", " +
                                                          s.argmax_query->right().to_string() + ")"
                                                    : "-")
                .row("trials", std::to_string(s.trials))
                .row("uncovered", std::to_string(s.uncovered));
            result.output = render(to_json(s), as_json, t);
        } else if (witness_cmd->parsed()) {
            if (witness_depth == 0) {
                throw ValidationError("0", "-N must be positive");
            }
            const auto w = adversarial_witness(parse_rational(delta_text), base, witness_depth);
            Table t;
            t.row("m0", std::to_string(w.m0))
                .row("k0", w.k0.str())
                .row("left", w.query.left().to_string())
                .row("right", w.query.right().to_string());
            result.output = render(to_json(w), as_json, t);
        } else if (canonicalize_cmd->parsed()) {
            const auto g = canonicalize(parse_grid(g1_text, base));
            Table t;
            t.row("base", std::to_string(base.value()))
                .row("shift", g.shift().to_string())
                .row("location", g.location().to_string());
            result.output = render(to_json(g), as_json, t);
        }
    } catch (const ValidationError& e) {
        result.exit_code = exit_validation;
        result.error = std::string(e.what()) + "\n";
    } catch (const std::domain_error& e) {
        result.exit_code = exit_domain;
        result.error = std::string("domain error: ") + e.what() + "\n";
    }
    return result;
}

} // namespace dyadic::cli

#endif // DYADIC_CLI_HPP
