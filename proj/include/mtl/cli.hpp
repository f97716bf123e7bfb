#pragma once

// Command-line front end. dispatch() parses argv, runs one command and writes
// its report; exit codes are 0 on success, 1 when `--assert` fails and 2 for
// bad flags or inputs.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtl/distribution_csv.hpp"
#include "mtl/reports.hpp"

namespace mtl::cli {

enum class OutputFormat { json, csv, human };

struct RunConfig {
    std::uint64_t seed = 0;
    OutputFormat output = OutputFormat::json;
    std::string out_path;
    std::size_t threads = 0;
    bool assert_checks = false;
};

namespace detail {

inline void flatten(const json::Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "." + std::to_string(i++), out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

inline std::string render(const json::Json& body, OutputFormat format) {
    if (format == OutputFormat::json) return body.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(body, "", rows);
    std::ostringstream os;
    if (format == OutputFormat::csv) {
        os << "key,value\n";
        for (const auto& [k, v] : rows) os << k << ',' << (v.find(',') != std::string::npos ? "\"" + v + "\"" : v) << '\n';
    } else {
        for (const auto& [k, v] : rows) os << k << ": " << v << '\n';
    }
    return os.str();
}

inline std::size_t threads_from_env() {
    const char* env = std::getenv("MTL_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    try {
        return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
        return 0;
    }
}

inline void write_table_csv(int n, std::ostream& os) {
    os << "partition,degree\n";
    symchar::for_each_partition(n, [&](const symchar::Partition& p) {
        os << p.label() << ',' << to_decimal(symchar::degree(p)) << '\n';
    });
}

}  // namespace detail

[[nodiscard]] inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Moment-tail inequality toolkit: zeta moments, skew sign determinants, S_n character degrees",
                 "mtl"};
    app.require_subcommand(1);

    RunConfig run;
    run.threads = detail::threads_from_env();
    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"human", OutputFormat::human}};
    app.add_option("--seed", run.seed, "Seed for randomized commands")->capture_default_str();
    app.add_option("--output", run.output, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->type_name("json|csv|human");
    app.add_option("--out", run.out_path, "Write the report (or table CSV) to this path");
    app.add_option("--threads", run.threads, "Worker cap, 0 = all cores (env MTL_THREADS)");
    app.add_flag("--assert", run.assert_checks, "Exit 1 when the report's checks fail");

    auto leaf = [](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };

    // theorem check
    CLI::App* theorem = app.add_subcommand("theorem", "Moment-tail inequality on an empirical distribution");
    theorem->fallthrough()->require_subcommand(1);
    CLI::App* check = leaf(theorem, "check", "Check the inequality on a value,weight CSV");
    std::string input_path;
    std::vector<double> b_grid;
    check->add_option("--input", input_path, "CSV with header value,weight")->required();
    check->add_option("--b", b_grid, "Thresholds b (repeat or comma-separate); default 20 points below a")
        ->delimiter(',');

    // zeta moments | tail
    CLI::App* zeta_cmd = app.add_subcommand("zeta", "Moments of |zeta(1/2+it)|");
    zeta_cmd->fallthrough()->require_subcommand(1);
    double t_switch = 50.0;
    int rs_terms = 1;
    int em_terms = 0;
    zeta_cmd->add_option("--t-switch", t_switch, "Euler-Maclaurin / Riemann-Siegel crossover")->capture_default_str();
    zeta_cmd->add_option("--rs-terms", rs_terms, "Riemann-Siegel correction order")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();
    zeta_cmd->add_option("--em-terms", em_terms, "Euler-Maclaurin terms, 0 = adaptive")
        ->check(CLI::Range(0, zeta::kMaxEulerMaclaurinTerms))
        ->capture_default_str();

    double big_t = 0.0;
    double big_h = 0.0;
    int k = 2;
    double step = zeta::kDefaultStep;
    double c_threshold = zeta::kThresholdInvFourPiSq;
    CLI::App* moments_cmd = leaf(zeta_cmd, "moments", "Simpson estimate of the integral of |zeta|^k over [T, T+H]");
    moments_cmd->add_option("--T", big_t, "Window start")->required();
    moments_cmd->add_option("--H", big_h, "Window length")->required();
    moments_cmd->add_option("--k", k, "Moment order")->check(CLI::IsMember({2, 4}))->capture_default_str();
    moments_cmd->add_option("--step", step, "Quadrature step")->capture_default_str();
    CLI::App* tail_cmd = leaf(zeta_cmd, "tail", "Large-value construction and tail inequality over [T, T+H]");
    tail_cmd->add_option("--T", big_t, "Window start")->required();
    tail_cmd->add_option("--H", big_h, "Window length")->required();
    tail_cmd->add_option("--c-threshold", c_threshold, "Coefficient c in |zeta| > c log^{3/2} T")->capture_default_str();
    tail_cmd->add_option("--step", step, "Quadrature step")->capture_default_str();

    // skewdet enum | mc | search
    CLI::App* skew = app.add_subcommand("skewdet", "Determinants of random skew-symmetric sign matrices");
    skew->fallthrough()->require_subcommand(1);
    skewdet::DiagonalConvention convention = skewdet::DiagonalConvention::zero;
    const std::map<std::string, skewdet::DiagonalConvention> conventions{
        {"zero", skewdet::DiagonalConvention::zero}, {"unit", skewdet::DiagonalConvention::unit}};
    skew->add_option("--convention", convention, "Diagonal convention")
        ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case).description(""))
        ->type_name("zero|unit");
    std::size_t order = 0;
    std::uint64_t samples = skewdet::kDefaultSamples;
    std::uint64_t budget = 2000;
    CLI::App* enum_cmd = leaf(skew, "enum", "Exact statistics over all sign matrices (n <= 8)");
    enum_cmd->add_option("--n", order, "Matrix order")->required();
    CLI::App* mc_cmd = leaf(skew, "mc", "Monte Carlo statistics");
    mc_cmd->add_option("--n", order, "Matrix order")->required();
    mc_cmd->add_option("--samples", samples, "Number of sampled matrices")->capture_default_str();
    CLI::App* search_cmd = leaf(skew, "search", "Hill-climbing search for a large |det|");
    search_cmd->add_option("--n", order, "Matrix order")->required();
    search_cmd->add_option("--budget", budget, "Determinant evaluations")->capture_default_str();

    // symchar report | table
    CLI::App* sym = app.add_subcommand("symchar", "Character degrees of the symmetric group");
    sym->fallthrough()->require_subcommand(1);
    int sym_n = 0;
    double eps = 0.0;
    CLI::App* report_cmd = leaf(sym, "report", "Degree identities and maximal-degree bounds");
    report_cmd->add_option("--n", sym_n, "Order of S_n")->required()->check(CLI::Range(1, symchar::kMaxTableOrder));
    report_cmd->add_option("--eps", eps, "epsilon in the (1-eps) bound")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    CLI::App* table_cmd = leaf(sym, "table", "CSV of partition,degree");
    table_cmd->add_option("--n", sym_n, "Order of S_n")->required()->check(CLI::Range(1, symchar::kMaxTableOrder));

    CLI::App* repro_cmd = app.add_subcommand("repro", "All three applications with pinned defaults");
    repro_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto emit = [&](const reports::Report& report) {
        const std::string text = detail::render(report.body, run.output);
        if (run.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(run.out_path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file '" + run.out_path + "'");
            file << text;
        }
        return run.assert_checks && !report.assertions_hold ? 1 : 0;
    };

    try {
        if (check->parsed()) {
            std::ifstream in(input_path, std::ios::binary);
            if (!in) {
                err << "error: cannot open input '" << input_path << "'\n";
                return 2;
            }
            const auto dist = read_distribution_csv(in);
            return emit(reports::theorem_check(dist, b_grid));
        }
        if (moments_cmd->parsed() || tail_cmd->parsed()) {
            const zeta::ZetaEvalConfig cfg(t_switch, rs_terms, em_terms);
            if (moments_cmd->parsed()) return emit(reports::zeta_moments(big_t, big_h, k, step, cfg, run.threads));
            return emit(reports::zeta_tail(big_t, big_h, c_threshold, step, cfg, run.threads));
        }
        if (enum_cmd->parsed()) return emit(reports::skewdet_enum(order, convention, run.threads));
        if (mc_cmd->parsed()) return emit(reports::skewdet_mc(order, samples, run.seed, convention, run.threads));
        if (search_cmd->parsed()) return emit(reports::skewdet_search(order, budget, run.seed, convention));
        if (report_cmd->parsed()) return emit(reports::symchar_report(sym_n, eps, run.threads));
        if (table_cmd->parsed()) {
            if (run.out_path.empty()) {
                detail::write_table_csv(sym_n, out);
                return 0;
            }
            std::ofstream file(run.out_path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file '" + run.out_path + "'");
            detail::write_table_csv(sym_n, file);
            return 0;
        }
        if (repro_cmd->parsed()) return emit(reports::repro(run.seed, run.threads));
    } catch (const CsvError& e) {
        err << "error: " << input_path << ": " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no command given\n";
    return 2;
}

[[nodiscard]] inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mtl");
    for (const auto& a : args) argv.push_back(a.c_str());
    return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mtl::cli
