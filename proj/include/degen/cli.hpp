#pragma once

/**
 * @file cli.hpp
 * @brief The `degen` command-line surface: tables, single evaluations,
 * identity verification, and the identity catalogue.
 *
 * Exit codes: 0 success / all identities pass, 1 verification failure,
 * 2 usage error. Records go to stdout (JSON lines or CSV), diagnostics to
 * stderr. Output is a pure function of the arguments.
 */

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "degenerate.hpp"
#include "io.hpp"
#include "verifier.hpp"

namespace degen::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

enum class Format { json, csv };

enum class Family { s1, s2, r_s2, s2_deg, s2_ext, bell, bell_deg, bell_ext };

inline constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilies{{
    {Family::s1, "s1"},
    {Family::s2, "s2"},
    {Family::r_s2, "r_s2"},
    {Family::s2_deg, "s2_deg"},
    {Family::s2_ext, "s2_ext"},
    {Family::bell, "bell"},
    {Family::bell_deg, "bell_deg"},
    {Family::bell_ext, "bell_ext"},
}};

inline std::string_view family_name(Family f) { return kFamilies[static_cast<std::size_t>(f)].second; }

inline std::optional<Family> parse_family(std::string_view s) {
    for (auto const& [f, name] : kFamilies)
        if (name == s) return f;
    return std::nullopt;
}

inline bool uses_k(Family f) { return f != Family::bell && f != Family::bell_deg && f != Family::bell_ext; }
inline bool uses_r(Family f) { return f == Family::r_s2 || f == Family::s2_ext || f == Family::bell_ext; }
inline bool uses_lambda(Family f) {
    return f == Family::s2_deg || f == Family::s2_ext || f == Family::bell_deg || f == Family::bell_ext;
}
inline bool is_bell(Family f) { return !uses_k(f); }

/// One emitted value. `value` is a rational string, a λ-polynomial array, or
/// an x-polynomial array, depending on the family and λ mode.
struct OutputRecord {
    Family family = Family::s2;
    long n = 0;
    std::optional<long> k;
    std::optional<long> r;
    std::optional<std::string> lambda;
    std::optional<std::string> x;
    json value;

    friend bool operator==(OutputRecord const&, OutputRecord const&) = default;
};

inline json to_json(OutputRecord const& rec) {
    json j{{"family", std::string(family_name(rec.family))}, {"n", rec.n}};
    if (rec.k) j["k"] = *rec.k;
    if (rec.r) j["r"] = *rec.r;
    if (rec.lambda) j["lambda"] = *rec.lambda;
    if (rec.x) j["x"] = *rec.x;
    j["value"] = rec.value;
    return j;
}

inline OutputRecord record_from_json(json const& j) {
    OutputRecord rec;
    auto fam = parse_family(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown family in record");
    rec.family = *fam;
    rec.n = j.at("n").get<long>();
    if (j.contains("k")) rec.k = j["k"].get<long>();
    if (j.contains("r")) rec.r = j["r"].get<long>();
    if (j.contains("lambda")) rec.lambda = j["lambda"].get<std::string>();
    if (j.contains("x")) rec.x = j["x"].get<std::string>();
    rec.value = j.at("value");
    return rec;
}

inline constexpr std::string_view kCsvHeader = "family,n,k,r,lambda,x,value";

namespace detail {

inline std::string csv_quote(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::vector<std::string> csv_split(std::string_view line) {
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char const c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cells.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cells.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.emplace_back();
        } else {
            cells.back() += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
    return cells;
}

}  // namespace detail

/// CSV cell encoding: polynomial values are JSON arrays inside a quoted cell.
inline std::string to_csv(OutputRecord const& rec) {
    auto opt = [](auto const& v) { return v ? std::to_string(*v) : std::string(); };
    std::string value = rec.value.is_string() ? rec.value.get<std::string>() : rec.value.dump();
    return std::string(family_name(rec.family)) + "," + std::to_string(rec.n) + "," + opt(rec.k) + "," +
           opt(rec.r) + "," + rec.lambda.value_or("") + "," + rec.x.value_or("") + "," + detail::csv_quote(value);
}

inline OutputRecord record_from_csv(std::string_view line) {
    auto cells = detail::csv_split(line);
    if (cells.size() != 7) throw std::invalid_argument("CSV record needs 7 cells");
    OutputRecord rec;
    auto fam = parse_family(cells[0]);
    if (!fam) throw std::invalid_argument("unknown family in record");
    rec.family = *fam;
    rec.n = std::stol(cells[1]);
    if (!cells[2].empty()) rec.k = std::stol(cells[2]);
    if (!cells[3].empty()) rec.r = std::stol(cells[3]);
    if (!cells[4].empty()) rec.lambda = cells[4];
    if (!cells[5].empty()) rec.x = cells[5];
    rec.value = !cells[6].empty() && cells[6].front() == '[' ? json::parse(cells[6]) : json(cells[6]);
    return rec;
}

/// Largest n accepted by any command: $DEGEN_MAX_N, else the library default.
inline long max_n_from_env() {
    char const* env = std::getenv("DEGEN_MAX_N");
    if (!env || !*env) return kDefaultGridMaxN;
    std::size_t used = 0;
    long v = -1;
    try {
        v = std::stol(env, &used);
    } catch (std::exception const&) {
    }
    if (used != std::string_view(env).size() || v < 0)
        throw std::invalid_argument("DEGEN_MAX_N must be a nonnegative integer");
    return v;
}

namespace detail {

template <ScalarRing T>
class FamilyEvaluator {
public:
    FamilyEvaluator(T lambda, std::optional<std::string> label) : deg_(std::move(lambda)), label_(std::move(label)) {}

    /// Value of a scalar family at (n, k, r).
    json scalar(Family f, long n, long k, long r) const {
        switch (f) {
        case Family::s1: return encode(s1(n, k));
        case Family::s2: return encode(s2(n, k));
        case Family::r_s2: return encode(r_s2(n, k, r));
        case Family::s2_deg: return encode(deg_.s2_deg(n, k));
        case Family::s2_ext: return encode(deg_.s2_ext_value(n, k, r, Method::series));
        default: break;
        }
        throw std::logic_error("not a scalar family");
    }

    XPolynomial<T> bell(Family f, long n, long r) const {
        switch (f) {
        case Family::bell_deg: return deg_.bell_deg_poly(n).poly;
        case Family::bell_ext: return deg_.bell_ext_poly(n, r).poly;
        default: break;
        }
        throw std::logic_error("not a Bell family");
    }

    OutputRecord record(Family f, long n, std::optional<long> k, long r, std::optional<Rational> const& x) const {
        OutputRecord rec;
        rec.family = f;
        rec.n = n;
        if (uses_k(f)) rec.k = k;
        if (uses_r(f)) rec.r = r;
        if (uses_lambda(f)) rec.lambda = label_;
        if (is_bell(f)) {
            if (x) rec.x = x->to_string();
            if (f == Family::bell) {
                // Classical Bell polynomials are rational in every λ mode.
                auto const poly = bell_poly(n);
                rec.value = x ? encode(poly.eval(*x)) : encode(poly);
            } else {
                auto const poly = bell(f, n, r);
                rec.value = x ? encode(poly.eval(T(*x))) : encode(poly);
            }
        } else {
            rec.value = scalar(f, n, *k, r);
        }
        return rec;
    }

private:
    DegenerateNumbers<T> deg_;
    std::optional<std::string> label_;
};

/// Calls fn with a FamilyEvaluator for the requested λ mode.
template <typename Fn>
decltype(auto) with_evaluator(LambdaChoice const& lambda, Fn&& fn) {
    if (lambda) return fn(FamilyEvaluator<Rational>(*lambda, lambda->to_string()));
    return fn(FamilyEvaluator<LambdaPoly>(LambdaPoly::lambda(), std::string("symbolic")));
}

inline void emit(std::ostream& out, Format fmt, OutputRecord const& rec) {
    if (fmt == Format::json) out << to_json(rec).dump() << '\n';
    else out << to_csv(rec) << '\n';
}

inline std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

struct TableRequest {
    Family family = Family::s2;
    long n_max = 10;
    long r = 0;
    LambdaChoice lambda = Rational(0);
    Format format = Format::json;
};

/// Full triangle (or Bell sequence) up to n_max, rows n ascending then k ascending.
inline int cmd_table(TableRequest const& req, std::ostream& out, std::ostream& err) {
    try {
        long const cap = max_n_from_env();
        if (req.n_max < 0 || req.n_max > cap) {
            err << "degen: --n-max must be in [0, " << cap << "]\n";
            return kUsageError;
        }
        if (req.r < 0 || req.r > cap) {
            err << "degen: --r must be in [0, " << cap << "]\n";
            return kUsageError;
        }
        if (req.format == Format::csv) out << kCsvHeader << '\n';
        detail::with_evaluator(req.lambda, [&](auto const& ev) {
            for (long n = 0; n <= req.n_max; ++n) {
                if (is_bell(req.family)) {
                    detail::emit(out, req.format, ev.record(req.family, n, std::nullopt, req.r, std::nullopt));
                    continue;
                }
                for (long k = 0; k <= n; ++k)
                    detail::emit(out, req.format, ev.record(req.family, n, k, req.r, std::nullopt));
            }
            return 0;
        });
        return kOk;
    } catch (std::exception const& e) {
        err << "degen: " << e.what() << '\n';
        return kUsageError;
    }
}

struct EvalRequest {
    Family family = Family::s2;
    std::optional<long> n;
    std::optional<long> k;
    std::optional<long> r;
    LambdaChoice lambda = Rational(0);
    std::optional<Rational> x;
    Format format = Format::json;
};

inline int cmd_eval(EvalRequest const& req, std::ostream& out, std::ostream& err) {
    auto usage = [&](std::string const& msg) {
        err << "degen: " << msg << '\n';
        return kUsageError;
    };
    try {
        std::string const fam(family_name(req.family));
        if (!req.n) return usage("--n is required");
        if (uses_k(req.family) && !req.k) return usage("--k is required for family " + fam);
        if (req.x && !is_bell(req.family)) return usage("--x applies only to Bell families");
        long const cap = max_n_from_env();
        long const n = *req.n, r = req.r.value_or(0);
        if (n < 0 || n > cap) return usage("--n must be in [0, " + std::to_string(cap) + "]");
        if (r < 0 || r > cap) return usage("--r must be in [0, " + std::to_string(cap) + "]");
        if (req.k) {
            long const k = *req.k;
            if (k < 0) return usage("--k must be nonnegative");
            // S_{2,r}(n+r,k+r|λ) is defined (as zero) for k > n; the other triangles are not.
            if (k > n && req.family != Family::s2_ext) return usage("family " + fam + " needs k <= n");
            if (k > cap + 2) return usage("--k out of range");
        }
        auto rec = detail::with_evaluator(
            req.lambda, [&](auto const& ev) { return ev.record(req.family, n, req.k, r, req.x); });
        if (req.format == Format::csv) out << kCsvHeader << '\n';
        detail::emit(out, req.format, rec);
        return kOk;
    } catch (std::exception const& e) {
        return usage(e.what());
    }
}

struct VerifyRequest {
    std::vector<std::string> ids{"all"};
    Grid grid;
    Format format = Format::json;
    bool timing = false;
};

using SuiteRunner = std::function<std::vector<VerificationReport>(SuiteConfig const&)>;

inline int cmd_verify(VerifyRequest const& req, std::ostream& out, std::ostream& err,
                      SuiteRunner const& runner = run_suite) {
    SuiteConfig cfg;
    cfg.grid = req.grid;
    try {
        cfg.max_n = max_n_from_env();
        cfg.grid.validate(cfg.max_n);
    } catch (std::exception const& e) {
        err << "degen: " << e.what() << '\n';
        return kUsageError;
    }
    for (auto const& name : req.ids) {
        if (name == "all") {
            for (auto const& info : kIdentityCatalogue) cfg.ids.push_back(info.id);
            continue;
        }
        auto id = parse_identity(name);
        if (!id) {
            err << "degen: unknown identity '" << name << "'; valid ids: all";
            for (auto const& info : kIdentityCatalogue) err << ' ' << info.name;
            err << '\n';
            return kUsageError;
        }
        cfg.ids.push_back(*id);
    }

    auto const reports = runner(cfg);
    bool all_pass = true;
    if (req.format == Format::csv) out << "identity,checked,failures,status\n";
    for (auto const& rep : reports) {
        all_pass = all_pass && rep.passed();
        if (req.format == Format::json)
            out << rep.to_json(req.timing).dump() << '\n';
        else
            out << identity_name(rep.identity) << ',' << rep.checked << ',' << rep.failures.size() << ','
                << rep.status() << '\n';
        if (!rep.passed())
            err << "degen: " << identity_name(rep.identity) << " " << rep.status()
                << (rep.error ? ": " + *rep.error : "") << '\n';
    }
    return all_pass ? kOk : kVerificationFailed;
}

inline int cmd_list(std::ostream& out) {
    for (auto const& info : list_identities()) {
        json j{{"id", std::string(info.name)},
               {"location", std::string(info.location)},
               {"statement", std::string(info.statement)},
               {"numeric", info.numeric}};
        out << j.dump() << '\n';
    }
    return kOk;
}

enum class SeriesKind { dlog, binom, degexp };

struct SeriesRequest {
    SeriesKind kind = SeriesKind::degexp;
    long order = 6;
    LambdaChoice lambda = std::nullopt;
    Rational a{1};
};

/// Debug dump of one building-block series as a JSON array (index = power of t).
inline int cmd_series(SeriesRequest const& req, std::ostream& out, std::ostream& err) {
    if (req.order < 0 || req.order > max_n_from_env()) {
        err << "degen: --order out of range\n";
        return kUsageError;
    }
    auto build = [&](auto lambda) {
        using T = decltype(lambda);
        auto const order = static_cast<std::size_t>(req.order);
        switch (req.kind) {
        case SeriesKind::dlog: return encode(ps_dlog(order, lambda));
        case SeriesKind::binom: return encode(ps_binom_lambda(T(req.a), lambda, order));
        case SeriesKind::degexp: break;
        }
        return encode(ps_degenerate_exp_m1(lambda, order) + TruncatedSeries<T>::one(order));
    };
    out << (req.lambda ? build(*req.lambda) : build(LambdaPoly::lambda())).dump() << '\n';
    return kOk;
}

/// Parses argv and dispatches to a subcommand.
inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact degenerate Stirling numbers, Bell polynomials, and identity verification", "degen"};
    app.require_subcommand(1);

    std::string family, lambda_text, format_text = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    auto parse_format = [&] { return format_text == "csv" ? Format::csv : Format::json; };
    std::vector<std::string> family_names;
    for (auto const& [f, name] : kFamilies) family_names.emplace_back(name);

    TableRequest table;
    auto* table_cmd = app.add_subcommand("table", "Emit a full table up to --n-max");
    table_cmd->add_option("--family", family, "Number family")->required()->check(CLI::IsMember(family_names));
    table_cmd->add_option("--n-max", table.n_max, "Largest n")->capture_default_str();
    table_cmd->add_option("--r", table.r, "Shift r for r_s2, s2_ext, bell_ext")->capture_default_str();
    table_cmd->add_option("--lambda", lambda_text, "Rational p/q or 'symbolic' (default 0)");
    add_format(table_cmd);

    EvalRequest eval;
    long eval_n = 0, eval_k = 0, eval_r = 0;
    std::string x_text;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a single value");
    eval_cmd->add_option("--family", family, "Number family")->required()->check(CLI::IsMember(family_names));
    auto* n_opt = eval_cmd->add_option("--n", eval_n, "Index n");
    auto* k_opt = eval_cmd->add_option("--k", eval_k, "Index k");
    auto* r_opt = eval_cmd->add_option("--r", eval_r, "Shift r");
    eval_cmd->add_option("--lambda", lambda_text, "Rational p/q or 'symbolic' (default 0)");
    eval_cmd->add_option("--x", x_text, "Evaluate a Bell polynomial at this rational");
    add_format(eval_cmd);

    VerifyRequest verify;
    std::string ids_text = "all", lambdas_text, xs_text;
    auto* verify_cmd = app.add_subcommand("verify", "Verify identities over a parameter grid");
    verify_cmd->add_option("--ids", ids_text, "Comma-separated identity ids, or 'all'")->capture_default_str();
    verify_cmd->add_option("--n-max", verify.grid.n_max, "Largest n")->capture_default_str();
    verify_cmd->add_option("--k-max", verify.grid.k_max, "Largest k for the vanishing region (default n-max+2)");
    verify_cmd->add_option("--r,--r-max", verify.grid.r_max, "Largest r")->capture_default_str();
    verify_cmd->add_option("--lambda", lambdas_text, "Comma-separated λ values; 'symbolic' allowed");
    verify_cmd->add_option("--x", xs_text, "Comma-separated x values for series/numeric checks");
    verify_cmd->add_option("--tol", verify.grid.tol, "Tolerance for EQ10/EQ27")->capture_default_str();
    verify_cmd->add_flag("--timing", verify.timing, "Include elapsed_ms in JSON reports");
    add_format(verify_cmd);

    app.add_subcommand("list", "List the identity catalogue");

    SeriesRequest series;
    std::string kind_text = "degexp", a_text = "1";
    auto* series_cmd = app.add_subcommand("series", "Dump a building-block series (debugging)");
    series_cmd->add_option("--kind", kind_text, "dlog | binom | degexp")
        ->check(CLI::IsMember({"dlog", "binom", "degexp"}))
        ->capture_default_str();
    series_cmd->add_option("--order", series.order, "Truncation order")->capture_default_str();
    series_cmd->add_option("--lambda", lambda_text, "Rational p/q or 'symbolic' (default symbolic)");
    series_cmd->add_option("--a", a_text, "Exponent numerator a for --kind binom")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "degen: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        auto lambda_or = [&](LambdaChoice fallback) {
            return lambda_text.empty() ? fallback : parse_lambda_choice(lambda_text);
        };
        if (table_cmd->parsed()) {
            table.family = *parse_family(family);
            table.lambda = lambda_or(Rational(0));
            table.format = parse_format();
            return cmd_table(table, out, err);
        }
        if (eval_cmd->parsed()) {
            eval.family = *parse_family(family);
            if (*n_opt) eval.n = eval_n;
            if (*k_opt) eval.k = eval_k;
            if (*r_opt) eval.r = eval_r;
            eval.lambda = lambda_or(Rational(0));
            if (!x_text.empty()) eval.x = Rational::parse(x_text);
            eval.format = parse_format();
            return cmd_eval(eval, out, err);
        }
        if (verify_cmd->parsed()) {
            verify.ids = detail::split_list(ids_text);
            if (!lambdas_text.empty()) {
                verify.grid.lambdas.clear();
                for (auto const& s : detail::split_list(lambdas_text)) verify.grid.lambdas.push_back(parse_lambda_choice(s));
            }
            if (!xs_text.empty()) {
                verify.grid.xs.clear();
                for (auto const& s : detail::split_list(xs_text)) verify.grid.xs.push_back(Rational::parse(s));
            }
            verify.format = parse_format();
            return cmd_verify(verify, out, err);
        }
        if (app.got_subcommand("list")) return cmd_list(out);
        if (series_cmd->parsed()) {
            series.kind = kind_text == "dlog" ? SeriesKind::dlog : kind_text == "binom" ? SeriesKind::binom
                                                                                          : SeriesKind::degexp;
            series.lambda = lambda_or(std::nullopt);
            series.a = Rational::parse(a_text);
            return cmd_series(series, out, err);
        }
    } catch (std::exception const& e) {
        err << "degen: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace degen::cli
