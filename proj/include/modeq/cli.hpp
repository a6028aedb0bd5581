#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verification failed,
// 2 invalid input.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modeq/arith.hpp"
#include "modeq/bpoly.hpp"
#include "modeq/cache.hpp"
#include "modeq/equation.hpp"
#include "modeq/io.hpp"
#include "modeq/lambda_ode.hpp"
#include "modeq/qseries.hpp"

namespace modeq::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_invalid = 2;

/// Raised for argument problems found after parsing.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    std::int64_t p = 0;
    std::string format = "text";
    std::string out_path;
    std::string cache_dir;
    std::string checks = "all";
    std::optional<unsigned> order;
    std::string series_kind;
    unsigned i = 0;
    unsigned h = 0;
    bool listing = false;
    std::string route = "lemma";
    unsigned l = 0;
    std::string u = "0";
    std::string v = "0";
    std::string method = "recurrence";
    unsigned k = 1;
    unsigned s = 0;
    unsigned m = 1;
    std::string scale = "1";
    std::int64_t max_p = 0;
    unsigned jobs = 1;
};

inline std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

inline int cmd_matrix(const RunConfig& cfg, std::ostream& out)
{
    const PrimeParams params = params_for(cfg.p);
    const ModularMatrix a =
        cfg.cache_dir.empty() ? assemble(params.p) : MatrixCache(cfg.cache_dir).get_or_assemble(params.p);

    std::ostringstream doc;
    if (cfg.format == "text")
        write_text(doc, a);
    else if (cfg.format == "structured")
        write_structured(doc, a);
    else if (cfg.format == "typeset")
        write_typeset(doc, a);
    else
        throw UsageError("unknown format '" + cfg.format + "'");

    if (cfg.out_path.empty()) {
        out << doc.str();
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("cannot open output file " + cfg.out_path);
        file << doc.str();
    }
    const bool ok = std::all_of(a.verification.begin(), a.verification.end(), [](const auto& kv) { return kv.second; });
    return ok ? exit_ok : exit_failed;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const PrimeParams params = params_for(cfg.p);
    const std::vector<std::string> known{"symmetry", "rowsums", "dets", "theorem52", "global"};
    std::vector<std::string> selected = cfg.checks == "all" ? known : split_list(cfg.checks);
    for (const auto& c : selected)
        if (std::find(known.begin(), known.end(), c) == known.end()) throw UsageError("unknown check '" + c + "'");
    const bool explicit_theorem52 = cfg.checks != "all";
    if (explicit_theorem52 && params.m != 3 &&
        std::find(selected.begin(), selected.end(), "theorem52") != selected.end())
        throw UsageError("theorem52 checks need m = 3 (p = 5, 11 or 23)");

    const unsigned order = cfg.order.value_or(default_vanish_order(params));
    if (order < static_cast<unsigned>(params.m * params.m))
        throw UsageError("--order must be at least m^2 = " + std::to_string(params.m * params.m));

    const ModularMatrix a =
        cfg.cache_dir.empty() ? assemble(params.p) : MatrixCache(cfg.cache_dir).get_or_assemble(params.p);
    bool all_ok = true;
    auto emit = [&](const Report& r) {
        out << r;
        all_ok = all_ok && r.passed();
    };
    for (const auto& c : selected) {
        if (c == "symmetry") emit(verify_symmetry(a));
        if (c == "rowsums") emit(verify_row_moments(a));
        if (c == "dets") emit(verify_block_determinants(params));
        if (c == "global") emit(verify_global_vanish(a, order));
        if (c == "theorem52") {
            if (params.m != 3) {
                out << "theorem52: skipped (needs m = 3)\n";
                continue;
            }
            emit(theorem52_part1(params.p));
            emit(theorem52_part2(params.p));
            emit(theorem52_part3(params.p));
        }
    }
    out << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return all_ok ? exit_ok : exit_failed;
}

inline int cmd_series(const RunConfig& cfg, std::ostream& out)
{
    if (!cfg.order) throw UsageError("--order is required");
    const unsigned order = *cfg.order;
    TruncatedSeries s(0);
    if (cfg.series_kind == "lambda") {
        if (order < 1) throw UsageError("--order must be at least 1 for lambda");
        s = lambda_series(order);
    } else if (cfg.series_kind == "one-minus-lambda") {
        s = one_minus_lambda_series(order);
    } else if (cfg.series_kind == "xy") {
        const PrimeParams pp = params_for(cfg.p);
        const XYParams xp{pp.p, pp.m, pp.n, cfg.i, cfg.h};
        if (cfg.route == "lemma")
            s = xy_normalized_lemma(xp, order);
        else if (cfg.route == "direct")
            s = xy_normalized_direct(xp, order);
        else
            throw UsageError("unknown route '" + cfg.route + "'");
    } else {
        throw UsageError("unknown series '" + cfg.series_kind + "'");
    }
    if (cfg.listing)
        write_series_listing(out, s);
    else
        out << format_series(s) << "\n";
    return exit_ok;
}

inline int cmd_bpoly(const RunConfig& cfg, std::ostream& out)
{
    const PrimeParams pp = params_for(cfg.p);
    const BContext bc(AlphaContext(pp.p), pp.n);
    const Rational u = parse_rational(cfg.u);
    const Rational v = parse_rational(cfg.v);
    Rational value;
    if (cfg.method == "partition") {
        try {
            value = b_eval(bc, cfg.l, u, v);
        } catch (const ThresholdError& e) {
            throw UsageError(e.what());
        }
    } else if (cfg.method == "recurrence") {
        value = b_eval_fast(bc, cfg.l, u, v).back();
    } else {
        throw UsageError("unknown method '" + cfg.method + "'");
    }
    out << value.get_str() << "\n";
    return exit_ok;
}

inline int cmd_alpha(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.k == 0) throw UsageError("k must be positive");
    out << alpha(AlphaContext(cfg.p), cfg.k).get_str() << "\n";
    return exit_ok;
}

inline int cmd_pvals(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.m == 0) throw UsageError("m must be positive");
    out << "P_" << cfg.s << "(" << cfg.m << ") = " << p_poly(cfg.s, cfg.m).get_str() << "\n";
    for (unsigned r = 0; r <= cfg.s; ++r)
        out << "c_{" << cfg.s << "," << r << "} = " << c_coeff(cfg.s, r).get_str() << "\n";
    return exit_ok;
}

inline int cmd_ode_check(const RunConfig& cfg, std::ostream& out)
{
    if (!cfg.order) throw UsageError("--order is required");
    if (*cfg.order < 10) throw UsageError("--order must be at least 10");
    const Rational scale = parse_rational(cfg.scale);
    const OdeResidual r = ode_residual_for(scale * lambda_series(*cfg.order));
    const long k = r.residual.first_nonzero();
    if (k < 0) {
        out << "ODE residual vanishes through q^" << r.effective_order << "\n";
        return exit_ok;
    }
    out << "ODE residual is nonzero: coefficient of q^" << k << " is " << r.residual[k].get_str() << "\n";
    return exit_failed;
}

struct ScanRow {
    PrimeParams params;
    Report report;
};

inline int cmd_scan(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.max_p < 3) throw UsageError("--max-p must be at least 3");
    std::vector<PrimeParams> primes;
    for (std::int64_t p = 3; p <= cfg.max_p; p += 2)
        if (is_prime(p)) primes.push_back(params_for(p));

    std::vector<ScanRow> rows(primes.size());
    const std::size_t jobs = std::max(1u, cfg.jobs);
    for (std::size_t start = 0; start < primes.size(); start += jobs) {
        std::vector<std::future<Report>> batch;
        for (std::size_t j = start; j < std::min(primes.size(), start + jobs); ++j)
            batch.push_back(std::async(std::launch::async, [pp = primes[j]] { return row1_moments(pp); }));
        for (std::size_t j = 0; j < batch.size(); ++j) rows[start + j] = ScanRow{primes[start + j], batch[j].get()};
    }

    bool all_ok = true;
    out << std::setw(6) << "p" << std::setw(5) << "m" << std::setw(3) << "n" << "  " << std::setw(24)
        << "sum a_{1,h}" << "  " << std::setw(24) << "sum (1+2h) a_{1,h}" << "  status\n";
    for (const auto& row : rows) {
        auto value_of = [&](std::size_t idx) {
            const std::string& d = row.report.conditions.at(idx).detail;
            return d.substr(0, d.find(' '));
        };
        const bool ok = row.report.passed();
        all_ok = all_ok && ok;
        out << std::setw(6) << row.params.p << std::setw(5) << row.params.m << std::setw(3) << row.params.n << "  "
            << std::setw(24) << value_of(0) << "  " << std::setw(24) << value_of(1) << "  " << (ok ? "ok" : "FAIL")
            << "\n";
    }
    return all_ok ? exit_ok : exit_failed;
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Modular equations for the lambda function in exact arithmetic", "modeq"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* matrix = app.add_subcommand("matrix", "Build A_p");
    matrix->add_option("p", cfg.p, "odd prime")->required();
    matrix->add_option("--format", cfg.format, "text | structured | typeset")
        ->check(CLI::IsMember({"text", "structured", "typeset"}));
    matrix->add_option("--out", cfg.out_path, "write to FILE instead of stdout");
    matrix->add_option("--cache-dir", cfg.cache_dir, "directory for cached matrices");

    auto* verify = app.add_subcommand("verify", "Check the identities satisfied by A_p");
    verify->add_option("p", cfg.p, "odd prime")->required();
    verify->add_option("--checks", cfg.checks, "comma list of symmetry,rowsums,dets,theorem52,global (default all)");
    verify->add_option("--order", cfg.order, "truncation order for the global check (default m^2 + 2m)");
    verify->add_option("--cache-dir", cfg.cache_dir, "directory for cached matrices");

    auto* series = app.add_subcommand("series", "Print a q-series");
    series->set_help_flag("--help", "Print this help message and exit"); // -h would clash with --h
    series->add_option("kind", cfg.series_kind, "lambda | one-minus-lambda | xy")
        ->required()
        ->check(CLI::IsMember({"lambda", "one-minus-lambda", "xy"}));
    series->add_option("--p", cfg.p, "odd prime (xy only)");
    series->add_option("--i", cfg.i, "power of X (xy only)");
    series->add_option("--h", cfg.h, "power of Y (xy only)");
    series->add_option("--order", cfg.order, "truncation order")->required();
    series->add_option("--route", cfg.route, "lemma | direct (xy only)");
    series->add_flag("--listing", cfg.listing, "one coefficient per line");

    auto* bpoly = app.add_subcommand("bpoly", "Evaluate b_l(u, v)");
    bpoly->add_option("p", cfg.p, "odd prime")->required();
    bpoly->add_option("l", cfg.l, "index")->required();
    bpoly->add_option("--u", cfg.u, "rational u")->required();
    bpoly->add_option("--v", cfg.v, "rational v")->required();
    bpoly->add_option("--method", cfg.method, "partition | recurrence")
        ->check(CLI::IsMember({"partition", "recurrence"}));

    auto* alpha_cmd = app.add_subcommand("alpha", "Evaluate alpha_p(k)");
    alpha_cmd->add_option("p", cfg.p, "odd prime")->required();
    alpha_cmd->add_option("k", cfg.k, "positive integer")->required();

    auto* pvals = app.add_subcommand("pvals", "Evaluate P_s(m) and c_{s,r}");
    pvals->add_option("s", cfg.s, "degree")->required();
    pvals->add_option("m", cfg.m, "argument")->required();

    auto* ode = app.add_subcommand("ode-check", "Check the differential equation for lambda");
    ode->add_option("--order", cfg.order, "truncation order (>= 10)")->required();
    ode->add_option("--scale", cfg.scale, "check c*lambda instead of lambda (negative control)");

    auto* scan = app.add_subcommand("scan", "Row-1 moments for every odd prime up to a bound");
    scan->add_option("--max-p", cfg.max_p, "largest prime")->required();
    scan->add_option("--jobs", cfg.jobs, "primes computed concurrently");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }

    try {
        if (matrix->parsed()) return cmd_matrix(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (series->parsed()) return cmd_series(cfg, out);
        if (bpoly->parsed()) return cmd_bpoly(cfg, out);
        if (alpha_cmd->parsed()) return cmd_alpha(cfg, out);
        if (pvals->parsed()) return cmd_pvals(cfg, out);
        if (ode->parsed()) return cmd_ode_check(cfg, out);
        if (scan->parsed()) return cmd_scan(cfg, out);
    } catch (const InvalidInputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_invalid;
}

} // namespace modeq::cli
