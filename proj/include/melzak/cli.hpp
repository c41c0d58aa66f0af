#pragma once

/**
 * @file cli.hpp
 * @brief The melzak command-line front end.
 *
 *   melzak verify    --mode melzak|generalized|both --trials N --max-n N --max-j N
 *                    --coefficient-bound B --seed S
 *   melzak eval      --poly P (--x X | --knots K) [--y Y] --n N
 *   melzak stability --x X (--n N | --sweep N1,N2,...) [--poly P] [--y Y]
 *   melzak pfd       --knots K
 *
 * Global flags: --json (default), --csv, --pretty, --seed.
 *
 * Exit codes: 0 success (identity holds, campaign clean), 1 identity or
 * campaign failure, 2 usage, parse, pole or duplicate-knot error.
 */

#include "campaign.hpp"
#include "floatlab.hpp"
#include "io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace melzak::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

enum class OutputFormat { json, csv, pretty };

namespace detail {

inline const char* mode_name(CampaignMode m) {
    switch (m) {
        case CampaignMode::melzak: return "melzak";
        case CampaignMode::generalized: return "generalized";
        case CampaignMode::both: return "both";
    }
    return "?";
}

inline std::string hex_digest(std::uint64_t d) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << d;
    return os.str();
}

inline int print_verify(const CampaignConfig& cfg, const CampaignSummary& s, OutputFormat fmt, std::ostream& out) {
    switch (fmt) {
        case OutputFormat::json: {
            Json j;
            j["kind"] = "campaign";
            j["mode"] = mode_name(cfg.mode);
            j["seed"] = cfg.seed;
            j["trials"] = cfg.trials;
            j["max_n"] = cfg.max_n;
            j["max_j"] = cfg.max_j;
            j["coefficient_bound"] = cfg.coefficient_bound;
            j["total"] = s.total;
            j["passed"] = s.passed;
            j["failed"] = s.failed;
            j["instance_digest"] = hex_digest(s.instance_digest);
            j["failures"] = Json::array();
            for (const auto& f : s.failures) j["failures"].push_back(to_json(f));
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "mode,seed,trials,max_n,max_j,coefficient_bound,total,passed,failed,instance_digest\n"
                << mode_name(cfg.mode) << ',' << cfg.seed << ',' << cfg.trials << ',' << cfg.max_n << ','
                << cfg.max_j << ',' << cfg.coefficient_bound << ',' << s.total << ',' << s.passed << ','
                << s.failed << ',' << hex_digest(s.instance_digest) << '\n';
            break;
        case OutputFormat::pretty:
            out << "campaign  mode=" << mode_name(cfg.mode) << " seed=" << cfg.seed << " trials=" << cfg.trials
                << '\n'
                << "  total   " << s.total << '\n'
                << "  passed  " << s.passed << '\n'
                << "  failed  " << s.failed << '\n'
                << "  digest  " << hex_digest(s.instance_digest) << '\n';
            for (const auto& f : s.failures) out << "  FAIL " << to_json(f).dump() << '\n';
            break;
    }
    return s.failed == 0 ? exit_ok : exit_failed;
}

inline void print_identity(const IdentityReport& r, OutputFormat fmt, std::ostream& out) {
    switch (fmt) {
        case OutputFormat::json: out << to_json(r).dump() << '\n'; break;
        case OutputFormat::csv:
            out << "kind,lhs,rhs,residual,holds,degree_bound\n"
                << to_string(r.kind) << ',' << r.lhs.to_string() << ',' << r.rhs.to_string() << ','
                << r.residual.to_string() << ',' << (r.holds ? "true" : "false") << ',' << r.degree_bound << '\n';
            break;
        case OutputFormat::pretty:
            out << to_string(r.kind) << " identity " << (r.holds ? "HOLDS" : "FAILS") << '\n'
                << "  lhs           " << r.lhs.to_string() << '\n'
                << "  rhs           " << r.rhs.to_string() << '\n'
                << "  residual      " << r.residual.to_string() << '\n'
                << "  degree bound  " << r.degree_bound << '\n';
            break;
    }
}

inline void print_stability(const std::vector<FloatReport>& reports, OutputFormat fmt, std::ostream& out) {
    switch (fmt) {
        case OutputFormat::json:
            for (const auto& r : reports) out << to_json(r).dump() << '\n';
            break;
        case OutputFormat::csv:
            out << float_report_csv_header << '\n';
            for (const auto& r : reports) out << to_csv_row(r) << '\n';
            break;
        case OutputFormat::pretty:
            out << std::left << std::setw(6) << "n" << std::setw(26) << "direct" << std::setw(26) << "compensated"
                << std::setw(26) << "closed" << std::setw(24) << "err_direct" << std::setw(24) << "err_comp"
                << std::setw(24) << "err_closed" << "condition" << '\n';
            for (const auto& r : reports)
                out << std::left << std::setw(6) << r.instance.n << std::setw(26) << shortest_decimal(r.direct_value)
                    << std::setw(26) << shortest_decimal(r.compensated_value) << std::setw(26)
                    << shortest_decimal(r.closed_form_value) << std::setw(24) << shortest_decimal(r.rel_err_direct)
                    << std::setw(24) << shortest_decimal(r.rel_err_compensated) << std::setw(24)
                    << shortest_decimal(r.rel_err_closed) << shortest_decimal(r.condition_number) << '\n';
            break;
    }
}

inline void print_pfd(const ResidueDecomposition& d, OutputFormat fmt, std::ostream& out) {
    switch (fmt) {
        case OutputFormat::json: out << to_json(d).dump() << '\n'; break;
        case OutputFormat::csv:
            out << "knot,residue\n";
            for (NaturalIndex i = 0; i < d.residues.size(); ++i)
                out << d.knots[i].to_string() << ',' << d.residues[i].to_string() << '\n';
            break;
        case OutputFormat::pretty:
            for (NaturalIndex i = 0; i < d.residues.size(); ++i)
                out << "  " << d.residues[i].to_string() << " / (k + " << d.knots[i].to_string() << ")\n";
            break;
    }
}

inline std::vector<NaturalIndex> parse_sweep(const std::string& text) {
    std::vector<NaturalIndex> ns;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("malformed --sweep entry \"" + item + "\"");
        ns.push_back(std::stoul(item));
    }
    if (ns.empty()) throw ParseError("empty --sweep");
    return ns;
}

}  // namespace detail

/// Runs one invocation; args exclude the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification and stability lab for Melzak's identity", "melzak"};
    app.require_subcommand(1);

    bool as_csv = false;
    bool as_pretty = false;
    bool as_json = false;
    std::uint64_t seed = 0;
    auto* json_flag = app.add_flag("--json", as_json, "JSON-lines output (default)");
    auto* csv_flag = app.add_flag("--csv", as_csv, "CSV output");
    auto* pretty_flag = app.add_flag("--pretty", as_pretty, "Human-readable output");
    json_flag->excludes(csv_flag)->excludes(pretty_flag);
    csv_flag->excludes(pretty_flag);
    app.add_option("--seed", seed, "PRNG seed for campaigns");

    CampaignConfig cfg;
    std::string mode_text = "melzak";
    auto* verify = app.add_subcommand("verify", "Run a seeded random verification campaign");
    verify->fallthrough();
    verify->add_option("--mode", mode_text, "melzak | generalized | both")
        ->check(CLI::IsMember({"melzak", "generalized", "both"}));
    verify->add_option("--trials", cfg.trials, "Number of random instances");
    verify->add_option("--max-n", cfg.max_n, "Largest n");
    verify->add_option("--max-j", cfg.max_j, "Largest j (knot count minus one)");
    verify->add_option("--coefficient-bound", cfg.coefficient_bound, "Bound on random numerators/denominators")
        ->check(CLI::PositiveNumber);
    verify->add_option("--index-cap", cfg.index_cap, "Upper bound on max_n + max_j");

    std::string poly_text = "1";
    std::string x_text;
    std::string y_text = "0";
    std::string knots_text;
    NaturalIndex n = 0;
    auto* eval = app.add_subcommand("eval", "Verify one instance exactly");
    eval->fallthrough();
    eval->add_option("--poly", poly_text, "Ascending coefficients, e.g. 0,0,1")->required();
    auto* eval_x = eval->add_option("--x", x_text, "Pole parameter x (Melzak identity)");
    auto* eval_knots = eval->add_option("--knots", knots_text, "Distinct knots x_0,...,x_j (generalized identity)");
    eval_x->excludes(eval_knots);
    eval->add_option("--y", y_text, "Shift y");
    eval->add_option("--n", n, "Order n")->required();

    std::string sweep_text;
    std::string stab_poly = "1";
    std::string stab_x;
    std::string stab_y = "0";
    NaturalIndex stab_n = 0;
    auto* stability = app.add_subcommand("stability", "Measure binary64 cancellation against the exact value");
    stability->fallthrough();
    stability->add_option("--x", stab_x, "Pole parameter x")->required();
    stability->add_option("--y", stab_y, "Shift y");
    stability->add_option("--poly", stab_poly, "Ascending coefficients (default 1)");
    auto* stab_n_opt = stability->add_option("--n", stab_n, "Order n");
    auto* sweep_opt = stability->add_option("--sweep", sweep_text, "Comma-separated list of n");
    stab_n_opt->excludes(sweep_opt);

    std::string pfd_knots;
    auto* pfd = app.add_subcommand("pfd", "Partial fractions of 1/prod(k + x_i)");
    pfd->fallthrough();
    pfd->add_option("--knots", pfd_knots, "Distinct knots")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const OutputFormat fmt = as_csv ? OutputFormat::csv : as_pretty ? OutputFormat::pretty : OutputFormat::json;

    try {
        if (verify->parsed()) {
            cfg.seed = seed;
            cfg.mode = mode_text == "melzak"        ? CampaignMode::melzak
                       : mode_text == "generalized" ? CampaignMode::generalized
                                                    : CampaignMode::both;
            try {
                validate(cfg);
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << '\n';
                return exit_usage;
            }
            return detail::print_verify(cfg, run_campaign(cfg), fmt, out);
        }

        if (eval->parsed()) {
            const Polynomial f = Polynomial::parse(poly_text);
            const Rational y = Rational::parse(y_text);
            IdentityReport report;
            if (!knots_text.empty()) {
                report = verify_generalized({f, KnotSet::parse(knots_text), y, n});
            } else {
                if (x_text.empty()) {
                    err << "error: eval needs --x or --knots\n";
                    return exit_usage;
                }
                report = verify_melzak({f, Rational::parse(x_text), y, n});
            }
            detail::print_identity(report, fmt, out);
            return report.holds ? exit_ok : exit_failed;
        }

        if (stability->parsed()) {
            std::vector<NaturalIndex> ns;
            if (!sweep_text.empty()) ns = detail::parse_sweep(sweep_text);
            else if (stab_n_opt->count() > 0) ns = {stab_n};
            else {
                err << "error: stability needs --n or --sweep\n";
                return exit_usage;
            }
            const Polynomial f = Polynomial::parse(stab_poly);
            const Rational x = Rational::parse(stab_x);
            const Rational y = Rational::parse(stab_y);
            std::vector<FloatReport> reports;
            for (NaturalIndex each : ns) reports.push_back(stability_report({f, x, y, each}));
            detail::print_stability(reports, fmt, out);
            return exit_ok;
        }

        if (pfd->parsed()) {
            detail::print_pfd(partial_fractions(KnotSet::parse(pfd_knots)), fmt, out);
            return exit_ok;
        }
    } catch (const std::domain_error& e) {  // PoleError
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {  // ParseError, DuplicateKnotError, bad instance
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::overflow_error& e) {  // OverflowToInfinity
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace melzak::cli
