#include "sepstat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sepstat/config.hpp"
#include "sepstat/enumerate.hpp"
#include "sepstat/io.hpp"
#include "sepstat/markedgf.hpp"
#include "sepstat/verify.hpp"

namespace sepstat::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { plain, json, csv };

struct OutputConfig {
    Format format = Format::plain;
    std::string destination;  // empty: standard output
    int verbosity = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require_not_csv(const OutputConfig& cfg, const std::string& command)
{
    if (cfg.format == Format::csv)
        throw UsageError("--format csv is only available for the tabular commands dist and gf, not " + command);
}

int enumeration_cap()
{
    const char* env = std::getenv(config::cap_environment_variable);
    if (env == nullptr || *env == '\0')
        return config::default_enumeration_cap;
    try {
        std::size_t used = 0;
        const int cap = std::stoi(env, &used);
        if (used != std::string(env).size() || cap < 0)
            throw std::invalid_argument(env);
        return cap;
    } catch (const std::exception&) {
        throw UsageError(std::string(config::cap_environment_variable) + " must be a non-negative integer, got '" +
                         env + "'");
    }
}

void check_cap(long long n, int cap, const std::string& what)
{
    if (n < 0 || n > cap)
        throw UsageError(what + " = " + std::to_string(n) + " is outside the enumeration range 0.." +
                         std::to_string(cap) + " (raise it with " + config::cap_environment_variable + ")");
}

std::string set_string(const std::set<int>& s)
{
    std::string out = "{";
    for (int v : s) {
        if (out.size() > 1)
            out += ',';
        out += std::to_string(v);
    }
    return out + "}";
}

std::string runs_string(const Permutation& p)
{
    std::string out;
    for (const Run& run : maximal_runs(p)) {
        if (!out.empty())
            out += " | ";
        for (int i = 0; i < run.length; ++i) {
            if (i > 0 && p.size() > 9)
                out += ',';
            out += std::to_string(p.at(run.start + i));
        }
        if (run.direction == RunDirection::ascending)
            out += "↑";
        else if (run.direction == RunDirection::descending)
            out += "↓";
    }
    return out;
}

void cmd_report(const std::string& text, const OutputConfig& cfg, std::ostream& out)
{
    require_not_csv(cfg, "report");
    Permutation p;
    try {
        p = parse_permutation(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("cannot parse permutation: ") + e.what());
    }
    const SeparatorReport r = separator_report(p);
    const std::set<int> bond_positions = bonds(p);

    if (cfg.format == Format::json) {
        json runs = json::array();
        for (const Run& run : maximal_runs(p)) {
            const char* dir = run.direction == RunDirection::ascending    ? "ascending"
                              : run.direction == RunDirection::descending ? "descending"
                                                                          : "trivial";
            runs.push_back({{"start", run.start}, {"length", run.length}, {"direction", dir}});
        }
        json j = {{"perm", to_json(p)}, {"n", p.size()}};
        const json sep = to_json(r);
        for (const auto& [key, value] : sep.items())
            j[key] = value;
        j["bonds"] = bond_positions;
        j["bond_count"] = bond_positions.size();
        j["runs"] = std::move(runs);
        j["king"] = is_king(p);
        out << j.dump(2) << '\n';
        return;
    }
    out << "permutation: " << p.to_string() << '\n'
        << "n: " << p.size() << '\n'
        << "bonds: " << set_string(bond_positions) << " (count " << bond_positions.size() << ")\n"
        << "runs: " << runs_string(p) << '\n'
        << "king: " << (is_king(p) ? "yes" : "no") << '\n'
        << "vertical: " << set_string(r.vertical) << '\n'
        << "horizontal: " << set_string(r.horizontal) << '\n'
        << "both: " << set_string(r.both) << '\n'
        << "sep_count: " << r.sep_count << '\n';
}

void cmd_dist(int n, const std::string& kind_name, int threads, const OutputConfig& cfg, std::ostream& out)
{
    const int cap = enumeration_cap();
    check_cap(n, cap, "n");
    StatKind kind;
    try {
        kind = parse_stat_kind(kind_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const DistTable t = distribution(n, kind, {cap, threads});
    switch (cfg.format) {
    case Format::json: out << to_json(t).dump(2) << '\n'; break;
    case Format::csv: out << to_csv(t); break;
    case Format::plain:
        out << "# " << to_string(kind) << " distribution over S_" << n << "\n# m count\n";
        for (const auto& [m, c] : t.counts)
            out << m << ' ' << c << '\n';
        break;
    }
}

void cmd_gf(const std::string& which, int order, const OutputConfig& cfg, std::ostream& out)
{
    if (order < 0 || order > config::max_series_order)
        throw UsageError("--order must be in 0.." + std::to_string(config::max_series_order));
    BiSeries s(order);
    char marker = 'u';
    if (which == "h") {
        s = vertical_sep_gf(order);
    } else if (which == "g") {
        s = vertical_marked_gf(order);
        marker = 'v';
    } else if (which == "A") {
        s = bond_marked_gf(order);
        marker = 'v';
    } else if (which == "B") {
        s = bond_gf(order);
    } else {
        throw UsageError("unknown series '" + which + "' (expected h, g, A or B)");
    }
    switch (cfg.format) {
    case Format::json: out << to_json(s).dump(2) << '\n'; break;
    case Format::csv: out << to_csv(s); break;
    case Format::plain:
        for (int n = 0; n <= order; ++n)
            out << "z^" << n << ": " << s.coeff(n).to_string(marker) << '\n';
        break;
    }
}

int cmd_expect(long long n, const std::string& kind_name, const std::string& mode, int threads,
               const OutputConfig& cfg, std::ostream& out)
{
    require_not_csv(cfg, "expect");
    StatKind kind;
    try {
        kind = parse_stat_kind(kind_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (kind == StatKind::bonds)
        throw UsageError("expect supports kinds vertical, horizontal, both and any");
    if (n < 0)
        throw UsageError("n must be non-negative");

    const bool want_formula = mode == "formula" || mode == "both";
    const bool want_empirical = mode == "empirical" || mode == "both";
    std::optional<Rational> formula, empirical;
    if (want_formula)
        formula = expectation_formula(n, kind);
    if (want_empirical) {
        const int cap = enumeration_cap();
        check_cap(n, cap, "n");
        empirical = expectation_empirical(static_cast<int>(n), kind, {cap, threads});
    }
    const bool match = !(formula && empirical) || *formula == *empirical;

    if (cfg.format == Format::json) {
        json j = {{"n", n}, {"kind", to_string(kind)}};
        if (formula) {
            j["formula"] = to_exact_string(*formula);
            j["formula_approx"] = to_decimal_string(*formula);
        }
        if (empirical) {
            j["empirical"] = to_exact_string(*empirical);
            j["empirical_approx"] = to_decimal_string(*empirical);
        }
        if (formula && empirical)
            j["match"] = match;
        out << j.dump(2) << '\n';
    } else {
        if (formula && empirical)
            out << to_exact_string(*formula) << " = " << to_exact_string(*empirical) << ' '
                << (match ? "MATCH" : "MISMATCH") << '\n';
        else
            out << to_exact_string(formula ? *formula : *empirical) << '\n';
        out << "approx: " << to_decimal_string(formula ? *formula : *empirical) << '\n';
    }
    return match ? ok : verification_failed;
}

int cmd_maxsep(int k, bool check, int threads, const OutputConfig& cfg, std::ostream& out)
{
    require_not_csv(cfg, "maxsep");
    if (k < 1)
        throw UsageError("k must be at least 1");
    if (k > 6)
        throw UsageError("k is limited to 6 (2^k k! permutations)");
    const auto perms = max_separator_perms(k);

    std::optional<bool> agrees;
    if (check) {
        const int cap = enumeration_cap();
        check_cap(4LL * k, cap, "4k");
        agrees = sweep(4 * k, {cap, threads}).all_separator == perms;
    }

    if (cfg.format == Format::json) {
        json list = json::array();
        for (const auto& p : perms)
            list.push_back(to_json(p));
        json j = {{"k", k}, {"n", 4 * k}, {"count", perms.size()}, {"perms", std::move(list)}};
        if (agrees)
            j["exhaustive_match"] = *agrees;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& p : perms)
            out << p.to_string() << '\n';
        out << "# count " << perms.size() << '\n';
        if (agrees)
            out << "# exhaustive S_" << 4 * k << ": " << (*agrees ? "MATCH" : "MISMATCH") << '\n';
    }
    return agrees.value_or(true) ? ok : verification_failed;
}

int cmd_verify(int n_max, int threads, const OutputConfig& cfg, std::ostream& out)
{
    require_not_csv(cfg, "verify");
    const int cap = enumeration_cap();
    check_cap(n_max, cap, "n_max");
    const SuiteReport report = run_verification_suite(n_max, {cap, threads});

    if (cfg.format == Format::json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        json mismatches = json::array();
        for (const auto& m : report.gf.mismatches)
            mismatches.push_back({{"series", m.series},
                                  {"n", m.n},
                                  {"m", m.m},
                                  {"expected", m.expected.str()},
                                  {"actual", m.actual.str()}});
        out << json{{"n_max", n_max}, {"passed", report.passed()}, {"checks", checks}, {"mismatches", mismatches}}
                   .dump(2)
            << '\n';
    } else {
        for (const auto& c : report.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.passed || cfg.verbosity > 0)
                out << ": " << c.detail;
            out << '\n';
        }
        out << (report.passed() ? "all checks passed" : "verification FAILED") << " (n <= " << n_max << ")\n";
    }
    return report.passed() ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Separator statistics on permutations", "sepstat"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputConfig cfg;
    std::string format = "plain";
    int threads = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--out", cfg.destination, "Write output to PATH instead of standard output");
    app.add_option("--threads", threads, "Worker threads for exhaustive sweeps (0: all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("-v,--verbose", cfg.verbosity, "More detail");

    std::string perm_text;
    auto* report = app.add_subcommand("report", "Separators, bonds and runs of one permutation");
    report->add_option("perm", perm_text, "Permutation, e.g. 53241 or 5,3,2,4,1")->required();

    int n = config::default_n;
    std::string kind = "vertical";
    auto* dist = app.add_subcommand("dist", "Exhaustive distribution of a statistic over S_n");
    dist->add_option("n", n, "Permutation size")->capture_default_str();
    dist->add_option("--kind", kind, "vertical, horizontal, both, any or bonds")->capture_default_str();

    std::string which = "h";
    int order = config::default_series_order;
    auto* gf = app.add_subcommand("gf", "Generating function coefficients");
    gf->add_option("which", which, "h, g, A or B")->capture_default_str();
    gf->add_option("--order", order, "Truncation order")->capture_default_str();

    long long expect_n = 0;
    std::string mode = "formula";
    auto* expect = app.add_subcommand("expect", "Expected number of separators");
    expect->add_option("n", expect_n, "Permutation size")->required();
    expect->add_option("--kind", kind, "vertical, horizontal, both or any")->capture_default_str();
    expect->add_option("--mode", mode, "formula, empirical or both")
        ->check(CLI::IsMember({"formula", "empirical", "both"}))
        ->capture_default_str();

    int k = 1;
    bool check = false;
    auto* maxsep = app.add_subcommand("maxsep", "Permutations in which every digit is a separator");
    maxsep->add_option("k", k, "Number of four-entry blocks (n = 4k)")->required();
    maxsep->add_flag("--check", check, "Cross-check against an exhaustive sweep of S_4k");

    auto* verify = app.add_subcommand("verify", "Generating functions and invariants against brute force");
    verify->add_option("n_max", n, "Largest n to check")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "sepstat: " << e.what() << '\n';
        return usage_error;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;

    std::ostringstream buffer;
    int code = ok;
    try {
        if (report->parsed())
            cmd_report(perm_text, cfg, buffer);
        else if (dist->parsed())
            cmd_dist(n, kind, threads, cfg, buffer);
        else if (gf->parsed())
            cmd_gf(which, order, cfg, buffer);
        else if (expect->parsed())
            code = cmd_expect(expect_n, kind, mode, threads, cfg, buffer);
        else if (maxsep->parsed())
            code = cmd_maxsep(k, check, threads, cfg, buffer);
        else if (verify->parsed())
            code = cmd_verify(n, threads, cfg, buffer);
    } catch (const UsageError& e) {
        err << "sepstat: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "sepstat: " << e.what() << '\n';
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "sepstat: " << e.what() << '\n';
        return usage_error;
    }

    if (cfg.destination.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.destination, std::ios::binary);
        if (!file) {
            err << "sepstat: cannot open '" << cfg.destination << "' for writing\n";
            return usage_error;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace sepstat::cli
